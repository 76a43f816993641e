#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homothets/family.hpp"
#include "homothets/homothety.hpp"

namespace homothets {

// Points on the paraboloid z = x^2 + y^2 arranged so that the family of
// translates of one hull realizes every subset of the ground points:
// member n contains ground point m exactly when bit m-1 of n-1 is set.
struct ParaboloidInstance {
  int scale = 0;                           // bit count M
  std::vector<std::pair<int, int>> pairs;  // (m, n), 1-based
  std::vector<Point> generators;           // one per pair
  ConvexPolytope hull;
  HomothetFamily family;                   // member n-1 is hull - v_n
  std::vector<Point> ground;               // u_1 .. u_M
};

// scale in [1, 8].
ParaboloidInstance build_paraboloid(int scale);

// Re-checks every ground/member membership bit by an independent convex
// combination solve over the hull vertices.
bool verify_paraboloid(const ParaboloidInstance& instance);

struct ShatterCheck {
  bool shattered = false;
  // For each subset bitmask over the points, a member whose trace on the
  // points is exactly that subset, or -1.
  std::vector<int> witness_member;
};

// Throws CapExceededError beyond 20 points.
ShatterCheck shatters(const HomothetFamily& family,
                      const std::vector<Point>& points);

struct FitResult {
  std::optional<Homothety> homothety;  // exact-verified when present
  bool impossible = false;  // an excluded point sits in conv(include)
  int trials_used = 0;
};

// Searches for ratio/translation placing the body over all include points
// and none of the exclude points. Float search, exact verification.
FitResult fit_homothet(const ConvexPolytope& body,
                       const std::vector<Point>& include,
                       const std::vector<Point>& exclude, int budget,
                       std::uint64_t seed);

struct FourPointStats {
  long long quadruples = 0;
  long long degenerate = 0;        // repeated points or all collinear
  long long enclosed = 0;          // one point inside the others' hull
  long long convex_position = 0;
  long long first_float = 0;       // first diagonal split passed float search
  long long both_float = 0;        // both splits passed float search
  long long exact_refuted = 0;     // float double-claims killed exactly
};

struct FourPointCounterexample {
  std::array<Point, 4> points;  // in ring order
  Homothety first;              // realizes {ring 0, ring 2}
  Homothety second;             // realizes {ring 1, ring 3}
};

struct FourPointReport {
  FourPointStats stats;
  // Both diagonal splits of a convex quadrilateral realized at once; no
  // homothet family can do this, so any entry here is a genuine bug.
  std::optional<FourPointCounterexample> counterexample;
};

FourPointReport search_four_points_2d(const ConvexPolytope& body,
                                      long long trials, std::uint64_t seed,
                                      int fit_budget = 5);

struct AntipodalWitness {
  int first = 0;
  int second = 0;
  Point direction;  // strict max at first, strict min at second
};

struct AntipodalReport {
  bool strictly_antipodal = false;
  std::vector<AntipodalWitness> witnesses;  // all pairs first < second
  std::pair<int, int> failing_pair{-1, -1};
};

AntipodalReport is_strictly_antipodal(const std::vector<Point>& points);

// Translates of the body by its own vertices, pairwise meeting in exactly
// one point, with no point shared by three members.
struct TouchingFamilyReport {
  HomothetFamily family;
  std::vector<AntipodalWitness> witnesses;
  std::vector<Point> touch_points;  // pairs first < second, same order
};

// Empty when the vertex set is not strictly antipodal.
std::optional<TouchingFamilyReport> build_touching_family(
    const ConvexPolytope& body);

struct DualShatterReport {
  int subset_size = 0;
  int max_cells = 0;              // distinct membership patterns seen
  std::vector<int> best_subset;   // member indices achieving max_cells
  std::vector<int> cell_witness;  // sample index per pattern, -1 if unseen
};

// Lower-bounds the dual shatter function at subset size k using the given
// sample points as candidate cell witnesses.
DualShatterReport dual_shatter_lower(const HomothetFamily& family, int k,
                                     const std::vector<Point>& samples);

std::vector<Point> paraboloid_dual_samples(const ParaboloidInstance& instance);

}  // namespace homothets

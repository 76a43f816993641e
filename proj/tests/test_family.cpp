#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "homothets/family.hpp"
#include "homothets/generator.hpp"
#include "homothets/rng.hpp"

using namespace homothets;

namespace {

ConvexPolytope unit_square() {
  return convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
}

ConvexPolytope unit_triangle() {
  return convex_hull({{0, 0}, {1, 0}, {0, 1}}, 2);
}

ConvexPolytope unit_cube() {
  std::vector<Point> pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back({Rational(m & 1), Rational((m >> 1) & 1), Rational((m >> 2) & 1)});
  return convex_hull(pts, 3);
}

ConvexPolytope unit_simplex() {
  return convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
}

HomothetFamily square_translates(std::vector<Point> centers) {
  std::vector<FamilyMember> members;
  for (auto& c : centers) members.push_back({1, std::move(c)});
  return HomothetFamily(unit_square(), std::move(members));
}

// Brute-force maximum pairwise-disjoint subfamily over all index masks.
int oracle_independence(const HomothetFamily& family) {
  const auto graph = intersection_graph(family);
  const int n = graph.size;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) &&
            graph.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Brute-force minimum piercing count: feasibility of every subfamily is
// decided directly by a joint LP (no intersection-pattern shortcuts), then
// an exhaustive cover search runs over the feasible masks.
int oracle_transversal(const HomothetFamily& family) {
  const int n = family.size();
  const unsigned full = (1u << n) - 1;
  std::vector<char> feasible(1u << n, 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<const ConvexPolytope*> sel;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sel.push_back(&family.realized(i));
    feasible[mask] = common_point(sel).has_value() ? 1 : 0;
  }
  int best = n;
  const auto dfs = [&](auto&& self, unsigned covered, int used) -> void {
    if (used >= best) return;
    if (covered == full) {
      best = used;
      return;
    }
    int low = std::countr_zero(~covered);
    for (unsigned mask = 1; mask <= full; ++mask)
      if (feasible[mask] && (mask >> low & 1))
        self(self, covered | mask, used + 1);
  };
  if (n > 0) dfs(dfs, 0, 0);
  return n == 0 ? 0 : best;
}

}  // namespace

TEST_CASE("family construction validates its inputs") {
  CHECK_THROWS_AS(HomothetFamily(convex_hull({}, 2), {}), std::invalid_argument);
  CHECK_NOTHROW(square_translates({}));
}

TEST_CASE("family realizes each member as ratio times base plus center") {
  HomothetFamily fam(unit_square(),
                     {{Rational(1, 2), Point{1, 1}}, {2, Point{-1, 0}}});
  CHECK(fam.size() == 2);
  CHECK(fam.realized(0).vertices()[0] == Point{1, 1});
  CHECK(volume(fam.realized(0)) == Rational(1, 4));
  CHECK(volume(fam.realized(1)) == 4);
  CHECK(!fam.translates_only());
  CHECK(square_translates({{0, 0}, {5, 5}}).translates_only());
  CHECK_THROWS_AS(HomothetFamily(unit_square(), {{0, Point{0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HomothetFamily(unit_square(), {{1, Point{0, 0, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("intersection graph of a chain of squares") {
  // Consecutive squares overlap by half; one square sits far away.
  const auto fam = square_translates(
      {{0, 0}, {Rational(1, 2), 0}, {1, 0}, {10, 10}});
  const auto g = intersection_graph(fam);
  REQUIRE(g.size == 4);
  for (int i = 0; i < 4; ++i) CHECK(!g.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(g.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            g.adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
  CHECK(g.adjacent[0][1]);
  CHECK(g.adjacent[0][2]);  // [0,1] and [1,2] share the line x = 1
  CHECK(g.adjacent[1][2]);
  CHECK(!g.adjacent[0][3]);
  CHECK(!g.adjacent[1][3]);
}

TEST_CASE("certificate validators accept the good and reject the bad") {
  const auto fam = square_translates({{0, 0}, {Rational(1, 2), 0}, {4, 4}});
  CHECK(validate_independence(fam, {{0, 2}}));
  CHECK(!validate_independence(fam, {{0, 1}}));
  CHECK(!validate_independence(fam, {{0, 0}}));
  CHECK(!validate_independence(fam, {{0, 7}}));

  TransversalCertificate cert;
  cert.points = {Point{Rational(3, 4), Rational(1, 2)}, Point{Rational(9, 2), Rational(9, 2)}};
  cert.assignment = {0, 0, 1};
  CHECK(validate_transversal(fam, cert));
  cert.assignment = {0, 1, 1};  // point 1 misses member 1 entirely
  CHECK(!validate_transversal(fam, cert));
  cert.assignment = {0, 0};  // wrong length
  CHECK(!validate_transversal(fam, cert));
  cert.assignment = {0, 0, 5};  // out of range
  CHECK(!validate_transversal(fam, cert));
}

TEST_CASE("exact searches match brute force on explicit instances") {
  // Two overlapping squares plus three far-apart ones.
  const auto fam = square_translates(
      {{0, 0}, {Rational(1, 2), 0}, {4, 0}, {0, 4}, {4, 4}});
  const auto nu = exact_independence(fam, 15);
  CHECK(validate_independence(fam, nu));
  CHECK(static_cast<int>(nu.indices.size()) == 4);
  CHECK(oracle_independence(fam) == 4);
  const auto tau = exact_transversal(fam, 15);
  CHECK(validate_transversal(fam, tau));
  CHECK(static_cast<int>(tau.points.size()) == 4);
  CHECK(oracle_transversal(fam) == 4);

  // A single stack: every member contains the unit square's center area.
  HomothetFamily stack(unit_square(), {{1, Point{0, 0}},
                                       {2, Point{Rational(-1, 2), Rational(-1, 2)}},
                                       {3, Point{-1, -1}}});
  CHECK(exact_independence(stack, 15).indices.size() == 1);
  CHECK(exact_transversal(stack, 15).points.size() == 1);
  CHECK(oracle_transversal(stack) == 1);
}

TEST_CASE("exact searches match brute force on random families") {
  Rng rng(60601);
  for (int instance = 0; instance < 8; ++instance) {
    const int dim = (instance % 3 == 2) ? 3 : 2;
    BodySpec body;
    body.kind = (instance % 2) ? BodyKind::Triangle : BodyKind::Square;
    if (dim == 3) body.kind = BodyKind::Cube;
    body.dimension = dim;
    InstanceSpec spec;
    spec.body = body;
    spec.member_count = 5 + static_cast<int>(rng.below(3));
    spec.translates = (instance % 2) == 0;
    spec.seed = 9000 + static_cast<std::uint64_t>(instance);
    const auto fam = generate_family(spec);

    const auto nu = exact_independence(fam, 15);
    const auto tau = exact_transversal(fam, 15);
    CHECK(validate_independence(fam, nu));
    CHECK(validate_transversal(fam, tau));
    CHECK(static_cast<int>(nu.indices.size()) == oracle_independence(fam));
    CHECK(static_cast<int>(tau.points.size()) == oracle_transversal(fam));
    CHECK(nu.indices.size() <= tau.points.size());
  }
}

TEST_CASE("greedy transversal produces validated certificates") {
  Rng rng(70707);
  for (int instance = 0; instance < 10; ++instance) {
    InstanceSpec spec;
    spec.body.kind = (instance % 2) ? BodyKind::Triangle : BodyKind::Square;
    spec.member_count = 6 + static_cast<int>(rng.below(5));
    spec.translates = (instance % 3) != 0;
    spec.seed = 400 + static_cast<std::uint64_t>(instance);
    const auto fam = generate_family(spec);

    const auto greedy = greedy_transversal(fam);
    CHECK(validate_transversal(fam, greedy.certificate));
    CHECK(validate_independence(fam, greedy.representatives));
    CHECK(greedy.groups.size() == greedy.representatives.indices.size());

    // The groups partition the family and each representative carries the
    // smallest ratio in its group.
    std::vector<int> seen(static_cast<std::size_t>(fam.size()), 0);
    for (const auto& group : greedy.groups) {
      CHECK(group.representative_ratio ==
            fam.members()[static_cast<std::size_t>(group.representative)].ratio);
      CHECK(std::find(group.members.begin(), group.members.end(),
                      group.representative) != group.members.end());
      for (int m : group.members) {
        ++seen[static_cast<std::size_t>(m)];
        CHECK(fam.members()[static_cast<std::size_t>(m)].ratio >= group.representative_ratio);
      }
    }
    for (int c : seen) CHECK(c == 1);

    const auto nu = exact_independence(fam, 15);
    const auto tau = exact_transversal(fam, 15);
    const int ell = static_cast<int>(greedy.groups.size());
    CHECK(ell <= static_cast<int>(nu.indices.size()));
    CHECK(static_cast<int>(nu.indices.size()) <= static_cast<int>(tau.points.size()));
    CHECK(static_cast<int>(tau.points.size()) <= static_cast<int>(greedy.certificate.points.size()));
  }
}

TEST_CASE("greedy picks the smallest member of each round as representative") {
  // A big square swallowing a small one: the small one must represent.
  HomothetFamily fam(unit_square(), {{4, Point{-1, -1}}, {Rational(1, 4), Point{0, 0}}});
  const auto greedy = greedy_transversal(fam);
  REQUIRE(greedy.groups.size() == 1);
  CHECK(greedy.groups[0].representative == 1);
  CHECK(greedy.groups[0].representative_ratio == Rational(1, 4));
  CHECK(greedy.groups[0].members.size() == 2);

  // Ratio tie: the lexicographically smaller center wins.
  const auto tie = square_translates({{1, 1}, {0, 0}});
  const auto tie_greedy = greedy_transversal(tie);
  REQUIRE(!tie_greedy.groups.empty());
  CHECK(tie_greedy.groups[0].representative == 1);
}

TEST_CASE("exact searches refuse oversized families") {
  std::vector<Point> centers;
  for (int i = 0; i < 16; ++i) centers.push_back({Rational(3 * i), 0});
  const auto fam = square_translates(centers);
  CHECK_THROWS_AS(exact_independence(fam, 15), CapExceededError);
  CHECK_THROWS_AS(exact_transversal(fam, 15), CapExceededError);
  const auto report = bound_report(fam, 15);
  CHECK(report.cap_exceeded);
  CHECK(!report.nu_exact.has_value());
  CHECK(!report.tau_exact.has_value());
  CHECK(report.nu_greedy == 16);
  // Each isolated square spawns its own round: a side-2 center region
  // covered by four unit tiles.
  CHECK(report.tau_greedy == 64);
}

TEST_CASE("bound report freezes the square and triangle constants") {
  const auto sq = square_translates({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {4, 4}});
  const auto report = bound_report(sq, 15);
  CHECK(report.dimension == 2);
  CHECK(report.member_count == 3);
  CHECK(report.symmetric);
  CHECK(report.vol_ratio == 9);
  CHECK(report.symmetric_cap == 9);
  CHECK(report.general_cap == 24);
  CHECK(report.rz == doctest::Approx(11.019781440538226).epsilon(1e-12));
  REQUIRE(report.nu_exact.has_value());
  REQUIRE(report.tau_exact.has_value());
  CHECK(*report.nu_exact == 2);
  CHECK(*report.tau_exact == 2);
  CHECK(report.nu_greedy <= *report.nu_exact);
  CHECK(*report.tau_exact <= report.tau_greedy);

  HomothetFamily tri(unit_triangle(), {{1, Point{0, 0}}, {2, Point{5, 5}}});
  const auto tri_report = bound_report(tri, 15);
  CHECK(!tri_report.symmetric);
  CHECK(tri_report.vol_ratio == 13);
  CHECK(tri_report.general_cap == 24);
}

TEST_CASE("bound report freezes the cube and simplex constants") {
  HomothetFamily cube(unit_cube(), {{1, Point{0, 0, 0}}});
  const auto report = bound_report(cube, 15);
  CHECK(report.dimension == 3);
  CHECK(report.symmetric);
  CHECK(report.vol_ratio == 27);
  CHECK(report.symmetric_cap == 27);
  CHECK(report.general_cap == 160);  // 2^3 times binom(6, 3)

  HomothetFamily sim(unit_simplex(), {{1, Point{0, 0, 0}}});
  const auto sim_report = bound_report(sim, 15);
  CHECK(!sim_report.symmetric);
  // vol(2T - T) = 21/2 for the unit simplex (volume 1/6), hence ratio 63:
  // expanding vol(2T + (-T)) by mixed volumes with V(T,T,-T) = V(T,-T,-T)
  // = 1/2 pinned by vol(T - T) = 10/3 and reflection invariance.
  CHECK(sim_report.vol_ratio == 63);
  CHECK(sim_report.vol_ratio >= 27);
  CHECK(Rational(sim_report.general_cap) >= sim_report.vol_ratio);
}

TEST_CASE("symmetry detection is translation invariant") {
  // A square centered anywhere is symmetric; a triangle never is.
  const auto shifted = translate(unit_square(), Point{Rational(13, 7), Rational(-5, 3)});
  HomothetFamily fam(shifted, {{1, Point{0, 0}}});
  CHECK(bound_report(fam, 15).symmetric);
  const auto hexa = minkowski_sum(unit_triangle(), reflect(unit_triangle()));
  HomothetFamily hex_fam(hexa, {{1, Point{0, 0}}});
  CHECK(bound_report(hex_fam, 15).symmetric);
  CHECK(bound_report(hex_fam, 15).vol_ratio == 9);
}

TEST_CASE("centers of meeting translates form the expected difference body") {
  // x is a center of a translate of K meeting S exactly when x lies in
  // S + (-K); both sides are decided by independent exact routes.
  Rng rng(1215);
  for (int instance = 0; instance < 4; ++instance) {
    std::vector<Point> ps, pk;
    for (int i = 0; i < 7; ++i) {
      std::vector<Rational> a, b;
      for (int d = 0; d < 2; ++d) {
        a.push_back(Rational(static_cast<long>(rng.below(257)) - 128, 64));
        b.push_back(Rational(static_cast<long>(rng.below(257)) - 128, 64));
      }
      ps.push_back(Point(std::move(a)));
      pk.push_back(Point(std::move(b)));
    }
    const auto s = convex_hull(ps, 2);
    const auto k = convex_hull(pk, 2);
    if (!s.is_body() || !k.is_body()) continue;
    const auto zone = s_minus_k(s, k);
    for (int probe = 0; probe < 60; ++probe) {
      std::vector<Rational> c;
      for (int d = 0; d < 2; ++d)
        c.push_back(Rational(static_cast<long>(rng.below(513)) - 256, 64));
      const Point x(std::move(c));
      const bool via_zone = contains_point(zone, x);
      const bool via_meet = intersects(translate(k, x), s).has_value();
      CHECK(via_zone == via_meet);
    }
  }
}

TEST_CASE("empty member list degenerates gracefully") {
  HomothetFamily fam(unit_square(), {});
  CHECK(fam.size() == 0);
  CHECK(fam.translates_only());
  const auto greedy = greedy_transversal(fam);
  CHECK(greedy.groups.empty());
  CHECK(greedy.certificate.points.empty());
  CHECK(validate_transversal(fam, greedy.certificate));
  CHECK(exact_independence(fam, 15).indices.empty());
  CHECK(exact_transversal(fam, 15).points.empty());
}

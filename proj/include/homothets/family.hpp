#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homothets/polytope.hpp"

namespace homothets {

// One member: ratio * base + center, ratio > 0.
struct FamilyMember {
  Rational ratio;
  Point center;
};

// Raised when an exact search is asked for more members than its cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// A finite family of positive homothets of one base polytope. The base may
// be degenerate; operations that need a body say so.
class HomothetFamily {
 public:
  HomothetFamily(ConvexPolytope base, std::vector<FamilyMember> members);

  int dimension() const { return base_.dimension(); }
  int size() const { return static_cast<int>(members_.size()); }
  const ConvexPolytope& base() const { return base_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  const ConvexPolytope& realized(int i) const {
    return realized_.at(static_cast<std::size_t>(i));
  }
  const std::vector<ConvexPolytope>& realized_all() const { return realized_; }
  // All ratios equal, i.e. the family is a set of translates of one body.
  bool translates_only() const;

 private:
  ConvexPolytope base_;
  std::vector<FamilyMember> members_;
  std::vector<ConvexPolytope> realized_;
};

struct IntersectionGraph {
  int size = 0;
  std::vector<std::vector<char>> adjacent;  // symmetric, false diagonal
};

IntersectionGraph intersection_graph(const HomothetFamily& family);

struct IndependenceCertificate {
  std::vector<int> indices;
};

bool validate_independence(const HomothetFamily& family,
                           const IndependenceCertificate& cert);

struct TransversalCertificate {
  std::vector<Point> points;
  std::vector<int> assignment;  // member index -> index into points
};

bool validate_transversal(const HomothetFamily& family,
                          const TransversalCertificate& cert);

// One round of the greedy construction: a smallest remaining member, the
// members it meets, and the hitting points generated for them.
struct GreedyGroup {
  int representative;
  Rational representative_ratio;
  std::vector<int> members;
  std::vector<Point> translations;
};

struct GreedyTransversal {
  TransversalCertificate certificate;
  std::vector<GreedyGroup> groups;
  IndependenceCertificate representatives;  // pairwise disjoint by design
};

GreedyTransversal greedy_transversal(const HomothetFamily& family);

IndependenceCertificate exact_independence(const HomothetFamily& family,
                                           int cap);
TransversalCertificate exact_transversal(const HomothetFamily& family,
                                         int cap);

struct BoundReport {
  int dimension = 0;
  int member_count = 0;
  bool symmetric = false;    // base centrally symmetric up to translation
  Rational vol_ratio;        // vol(2K - K) / vol(K)
  double rz = 0.0;           // rz_factor(dimension)
  Integer symmetric_cap;     // 3^n
  Integer general_cap;       // 2^n * binom(2n, n)
  int nu_greedy = 0;
  int tau_greedy = 0;
  std::optional<int> nu_exact;
  std::optional<int> tau_exact;
  bool cap_exceeded = false;
};

BoundReport bound_report(const HomothetFamily& family, int exact_cap);

// Centers of all translates of k that meet s.
ConvexPolytope s_minus_k(const ConvexPolytope& s, const ConvexPolytope& k);

}  // namespace homothets

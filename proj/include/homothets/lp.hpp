#pragma once

#include <optional>
#include <vector>

#include "homothets/point.hpp"
#include "homothets/rational.hpp"

namespace homothets {

// Exact rational linear program. Variables are free unless flagged nonneg;
// nonnegativity can equivalently be written as an explicit -x <= 0 row.
struct LinearProgram {
  enum class Rel { LessEq, Eq };
  struct Constraint {
    std::vector<Rational> coeffs;
    Rel rel = Rel::LessEq;
    Rational rhs = 0;
  };

  int num_vars = 0;
  std::vector<Constraint> constraints;
  // Maximized when present; pure feasibility otherwise.
  std::optional<std::vector<Rational>> objective;
  // Per-variable nonnegativity flags; empty means every variable is free.
  std::vector<char> nonneg;

  explicit LinearProgram(int vars = 0) : num_vars(vars) {}
  void add_le(std::vector<Rational> coeffs, Rational rhs);
  void add_eq(std::vector<Rational> coeffs, Rational rhs);
  void set_objective(std::vector<Rational> coeffs);
  void mark_all_nonneg();
};

struct LpResult {
  enum class Status { Optimal, Feasible, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective_value = 0;   // meaningful for Optimal
  std::vector<Rational> witness;  // meaningful for Optimal and Feasible

  bool ok() const {
    return status == Status::Optimal || status == Status::Feasible;
  }
};

// Two-phase primal simplex with Bland's anti-cycling rule, fully exact.
// Feasibility-only programs report Feasible with a witness basic solution.
LpResult lp_solve(const LinearProgram& prog);

// Is q a convex combination of the given points? Returns the weights.
std::optional<std::vector<Rational>> convex_combination_weights(
    const std::vector<Point>& points, const Point& q);

}  // namespace homothets

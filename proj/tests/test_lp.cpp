#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homothets/lp.hpp"
#include "homothets/point.hpp"
#include "homothets/rng.hpp"

using namespace homothets;

namespace {

Point P(std::vector<Rational> c) { return Point(std::move(c)); }

LpResult solve_rows(int vars, std::optional<std::vector<Rational>> objective,
                    std::vector<LinearProgram::Constraint> rows,
                    bool nonneg = false) {
  LinearProgram lp(vars);
  if (nonneg) lp.mark_all_nonneg();
  for (auto& r : rows) lp.constraints.push_back(std::move(r));
  if (objective) lp.set_objective(*objective);
  return lp_solve(lp);
}

}  // namespace

TEST_CASE("bounded maximum lands on the tight corner") {
  LinearProgram lp(2);
  lp.mark_all_nonneg();
  lp.add_le({1, 0}, 2);
  lp.add_le({0, 1}, 3);
  lp.set_objective({1, 1});
  const LpResult res = lp_solve(lp);
  REQUIRE(res.status == LpResult::Status::Optimal);
  CHECK(res.objective_value == 5);
  CHECK(res.witness[0] == 2);
  CHECK(res.witness[1] == 3);
}

TEST_CASE("contradictory rows are infeasible") {
  LinearProgram lp(1);
  lp.mark_all_nonneg();
  lp.add_le({1}, -1);
  const LpResult res = lp_solve(lp);
  CHECK(res.status == LpResult::Status::Infeasible);
}

TEST_CASE("missing ceiling is reported unbounded") {
  LinearProgram lp(1);
  lp.set_objective({1});
  lp.add_le({-1}, 0);
  const LpResult res = lp_solve(lp);
  CHECK(res.status == LpResult::Status::Unbounded);
}

TEST_CASE("free variables reach negative coordinates") {
  LinearProgram lp(2);
  lp.add_eq({1, 1}, 0);
  lp.add_eq({1, -1}, -3);
  const LpResult res = lp_solve(lp);
  REQUIRE(res.ok());
  CHECK(res.witness[0] == Rational(-3, 2));
  CHECK(res.witness[1] == Rational(3, 2));
}

TEST_CASE("duplicated equalities leave the answer unchanged") {
  LinearProgram lp(2);
  lp.mark_all_nonneg();
  lp.add_eq({1, 1}, 1);
  lp.add_eq({1, 1}, 1);
  lp.add_eq({2, 2}, 2);
  lp.set_objective({1, 0});
  const LpResult res = lp_solve(lp);
  REQUIRE(res.status == LpResult::Status::Optimal);
  CHECK(res.objective_value == 1);
}

TEST_CASE("cycling-prone instance terminates at the known optimum") {
  // Beale's example: naive most-negative pivoting loops forever on it.
  // Stated as a maximization; the optimum is 1/20 at (1/25, 0, 1, 0).
  LinearProgram lp(4);
  lp.mark_all_nonneg();
  lp.add_le({Rational(1, 4), -60, Rational(-1, 25), 9}, 0);
  lp.add_le({Rational(1, 2), -90, Rational(-1, 50), 3}, 0);
  lp.add_le({0, 0, 1, 0}, 1);
  lp.set_objective({Rational(3, 4), -150, Rational(1, 50), -6});
  const LpResult res = lp_solve(lp);
  REQUIRE(res.status == LpResult::Status::Optimal);
  CHECK(res.objective_value == Rational(1, 20));
  CHECK(res.witness[0] == Rational(1, 25));
  CHECK(res.witness[1] == 0);
  CHECK(res.witness[2] == 1);
  CHECK(res.witness[3] == 0);
}

TEST_CASE("witnesses satisfy every row they came from") {
  Rng rng(20210);
  for (int instance = 0; instance < 40; ++instance) {
    LinearProgram lp(3);
    const int rows = 2 + static_cast<int>(rng.below(4));
    for (int r = 0; r < rows; ++r) {
      std::vector<Rational> row;
      for (int v = 0; v < 3; ++v)
        row.push_back(Rational(static_cast<int>(rng.below(11)) - 5));
      const Rational rhs(static_cast<int>(rng.below(21)) - 4);
      if (rng.below(4) == 0)
        lp.add_eq(std::move(row), rhs);
      else
        lp.add_le(std::move(row), rhs);
    }
    for (int v = 0; v < 3; ++v) {
      std::vector<Rational> up(3, 0), dn(3, 0);
      up[static_cast<std::size_t>(v)] = 1;
      dn[static_cast<std::size_t>(v)] = -1;
      lp.add_le(std::move(up), 10);
      lp.add_le(std::move(dn), 10);
    }
    std::vector<Rational> obj;
    for (int v = 0; v < 3; ++v)
      obj.push_back(Rational(static_cast<int>(rng.below(9)) - 4));
    lp.set_objective(obj);

    const LpResult res = lp_solve(lp);
    REQUIRE(res.status != LpResult::Status::Unbounded);
    if (res.status == LpResult::Status::Infeasible) continue;
    Rational value = 0;
    for (int v = 0; v < 3; ++v) value += obj[static_cast<std::size_t>(v)] * res.witness[static_cast<std::size_t>(v)];
    CHECK(value == res.objective_value);
    for (const auto& c : lp.constraints) {
      Rational lhs = 0;
      for (int v = 0; v < 3; ++v) lhs += c.coeffs[static_cast<std::size_t>(v)] * res.witness[static_cast<std::size_t>(v)];
      if (c.rel == LinearProgram::Rel::Eq)
        CHECK(lhs == c.rhs);
      else
        CHECK(lhs <= c.rhs);
    }
  }
}

TEST_CASE("planar optima match corner enumeration") {
  // Independent oracle: a bounded planar LP peaks at the intersection of
  // two tight rows, so enumerating all row pairs finds the optimum.
  Rng rng(555);
  int optimal_seen = 0;
  for (int instance = 0; instance < 60; ++instance) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    const int extra = 2 + static_cast<int>(rng.below(4));
    for (int r = 0; r < extra; ++r) {
      rows.push_back({Rational(static_cast<int>(rng.below(9)) - 4),
                      Rational(static_cast<int>(rng.below(9)) - 4)});
      rhs.push_back(Rational(static_cast<int>(rng.below(15)) - 3));
    }
    rows.push_back({1, 0});
    rhs.push_back(6);
    rows.push_back({-1, 0});
    rhs.push_back(6);
    rows.push_back({0, 1});
    rhs.push_back(6);
    rows.push_back({0, -1});
    rhs.push_back(6);
    std::vector<Rational> obj = {Rational(static_cast<int>(rng.below(9)) - 4),
                                 Rational(static_cast<int>(rng.below(9)) - 4)};

    LinearProgram lp(2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto row = rows[r];
      lp.add_le(std::move(row), rhs[r]);
    }
    lp.set_objective(obj);
    const LpResult res = lp_solve(lp);

    std::optional<Rational> oracle;
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        const Rational det = rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0];
        if (det == 0) continue;
        const Rational x = (rhs[a] * rows[b][1] - rows[a][1] * rhs[b]) / det;
        const Rational y = (rows[a][0] * rhs[b] - rhs[a] * rows[b][0]) / det;
        bool feasible = true;
        for (std::size_t r = 0; r < rows.size() && feasible; ++r)
          if (rows[r][0] * x + rows[r][1] * y > rhs[r]) feasible = false;
        if (!feasible) continue;
        const Rational value = obj[0] * x + obj[1] * y;
        if (!oracle || value > *oracle) oracle = value;
      }

    if (res.status == LpResult::Status::Optimal) {
      ++optimal_seen;
      REQUIRE(oracle.has_value());
      CHECK(res.objective_value == *oracle);
    } else {
      CHECK(res.status == LpResult::Status::Infeasible);
      // The corner scan can still find isolated feasible points when the
      // region is a single point; infeasibility must mean none exist.
      CHECK(!oracle.has_value());
    }
  }
  CHECK(optimal_seen > 30);  // the sampler must actually exercise the solver
}

TEST_CASE("convex combination weights reconstruct interior points") {
  const std::vector<Point> tri = {P({0, 0}), P({2, 0}), P({0, 2})};
  const Point inside = P({Rational(1, 2), Rational(1, 2)});
  const auto w = convex_combination_weights(tri, inside);
  REQUIRE(w.has_value());
  Rational sum = 0;
  Point rebuilt = P({0, 0});
  for (std::size_t i = 0; i < tri.size(); ++i) {
    CHECK((*w)[i] >= 0);
    sum += (*w)[i];
    rebuilt = rebuilt + (*w)[i] * tri[i];
  }
  CHECK(sum == 1);
  CHECK(rebuilt == inside);
  CHECK(!convex_combination_weights(tri, P({3, 3})).has_value());
  CHECK(convex_combination_weights(tri, P({2, 0})).has_value());
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp(2);
  lp.add_le({1}, 0);  // row width disagrees with variable count
  CHECK_THROWS_AS(lp_solve(lp), std::invalid_argument);
  LinearProgram lp2(-1);
  CHECK_THROWS_AS(lp_solve(lp2), std::invalid_argument);
  LinearProgram lp3(2);
  lp3.set_objective({1, 2, 3});
  CHECK_THROWS_AS(lp_solve(lp3), std::invalid_argument);
}

#include "homothets/lp.hpp"

#include <stdexcept>

namespace homothets {

void LinearProgram::add_le(std::vector<Rational> coeffs, Rational rhs) {
  constraints.push_back({std::move(coeffs), Rel::LessEq, std::move(rhs)});
}

void LinearProgram::add_eq(std::vector<Rational> coeffs, Rational rhs) {
  constraints.push_back({std::move(coeffs), Rel::Eq, std::move(rhs)});
}

void LinearProgram::set_objective(std::vector<Rational> coeffs) {
  objective = std::move(coeffs);
}

void LinearProgram::mark_all_nonneg() {
  nonneg.assign(static_cast<std::size_t>(num_vars), 1);
}

namespace {

// Dense exact tableau. Row 0..m-1 are constraints with rhs in the last
// column; basic_[] holds the basic column of each row.
class Simplex {
 public:
  Simplex(int rows, int cols) : m_(rows), n_(cols) {
    tab_.assign(static_cast<std::size_t>(m_),
                std::vector<Rational>(static_cast<std::size_t>(n_) + 1, 0));
    basic_.assign(static_cast<std::size_t>(m_), -1);
  }

  Rational& at(int r, int c) { return tab_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  Rational& rhs(int r) { return tab_[static_cast<std::size_t>(r)][static_cast<std::size_t>(n_)]; }
  int& basic(int r) { return basic_[static_cast<std::size_t>(r)]; }
  int rows() const { return m_; }
  int cols() const { return n_; }

  void pivot(int pr, int pc) {
    auto& prow = tab_[static_cast<std::size_t>(pr)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(pc)];
    for (auto& v : prow) v *= inv;
    for (int r = 0; r < m_; ++r) {
      if (r == pr) continue;
      auto& row = tab_[static_cast<std::size_t>(r)];
      const Rational factor = row[static_cast<std::size_t>(pc)];
      if (factor == 0) continue;
      for (int c = 0; c <= n_; ++c)
        row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
    for (auto& c : cost_) reduce_cost_row(c, pr, pc);
    basic(pr) = pc;
  }

  // Reduced-cost rows are carried alongside the tableau through pivots.
  struct CostRow {
    std::vector<Rational> coef;  // size n_ + 1, last entry = current value
  };

  int add_cost_row(std::vector<Rational> coefs, Rational value) {
    coefs.push_back(std::move(value));
    cost_.push_back({std::move(coefs)});
    return static_cast<int>(cost_.size()) - 1;
  }

  Rational& cost(int which, int c) { return cost_[static_cast<std::size_t>(which)].coef[static_cast<std::size_t>(c)]; }

  // Price out a basic column from a cost row (after pivots the stored row
  // must have zero coefficient on every basic column).
  void price_out(int which) {
    auto& row = cost_[static_cast<std::size_t>(which)].coef;
    for (int r = 0; r < m_; ++r) {
      const int b = basic(r);
      if (b < 0) continue;
      const Rational factor = row[static_cast<std::size_t>(b)];
      if (factor == 0) continue;
      for (int c = 0; c <= n_; ++c)
        row[static_cast<std::size_t>(c)] -= factor * tab_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }

  // Maximize the given cost row with Bland's rule over the allowed columns.
  // Returns false when unbounded.
  bool optimize(int which, const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < n_; ++c) {
        if (!allowed[static_cast<std::size_t>(c)]) continue;
        if (cost(which, c) > 0) { enter = c; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_num = 0, best_den = 1;
      for (int r = 0; r < m_; ++r) {
        const Rational& a = at(r, enter);
        if (a <= 0) continue;
        const Rational& b = rhs(r);
        // ratio b/a; pick the minimum, ties by smallest basic index (Bland).
        if (leave < 0 || b * best_den < best_num * a ||
            (b * best_den == best_num * a && basic(r) < basic(leave))) {
          leave = r;
          best_num = b;
          best_den = a;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  void reduce_cost_row(CostRow& row, int pr, int pc) {
    const Rational factor = row.coef[static_cast<std::size_t>(pc)];
    if (factor == 0) return;
    auto& prow = tab_[static_cast<std::size_t>(pr)];
    for (int c = 0; c <= n_; ++c)
      row.coef[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
  }

  int m_, n_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<int> basic_;
  std::vector<CostRow> cost_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& prog) {
  const int nv = prog.num_vars;
  if (nv < 0) throw std::invalid_argument("negative variable count");
  if (!prog.nonneg.empty() &&
      static_cast<int>(prog.nonneg.size()) != nv)
    throw std::invalid_argument("nonneg flags do not match variable count");
  if (prog.objective &&
      static_cast<int>(prog.objective->size()) != nv)
    throw std::invalid_argument("objective length does not match variables");
  for (const auto& c : prog.constraints)
    if (static_cast<int>(c.coeffs.size()) != nv)
      throw std::invalid_argument("constraint length does not match variables");

  const int m = static_cast<int>(prog.constraints.size());

  // Column layout: for each variable one column (nonneg) or a split pair
  // x = x+ - x- (free); then one slack per LessEq row; then artificials.
  std::vector<int> var_col(static_cast<std::size_t>(nv));
  std::vector<char> var_split(static_cast<std::size_t>(nv));
  int cols = 0;
  for (int v = 0; v < nv; ++v) {
    const bool nn = !prog.nonneg.empty() && prog.nonneg[static_cast<std::size_t>(v)];
    var_col[static_cast<std::size_t>(v)] = cols;
    var_split[static_cast<std::size_t>(v)] = nn ? 0 : 1;
    cols += nn ? 1 : 2;
  }
  std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
  for (int r = 0; r < m; ++r)
    if (prog.constraints[static_cast<std::size_t>(r)].rel == LinearProgram::Rel::LessEq)
      slack_col[static_cast<std::size_t>(r)] = cols++;
  const int first_artificial = cols;
  std::vector<int> art_col(static_cast<std::size_t>(m), -1);

  // Rows are normalized to rhs >= 0 before slacks get their sign.
  std::vector<char> negated(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r)
    if (prog.constraints[static_cast<std::size_t>(r)].rhs < 0) negated[static_cast<std::size_t>(r)] = 1;

  // A row needs an artificial unless its slack can start basic
  // (slack coefficient +1, i.e. the row was not negated).
  for (int r = 0; r < m; ++r) {
    const bool slack_basic = slack_col[static_cast<std::size_t>(r)] >= 0 && !negated[static_cast<std::size_t>(r)];
    if (!slack_basic) art_col[static_cast<std::size_t>(r)] = cols++;
  }

  Simplex sx(m, cols);
  for (int r = 0; r < m; ++r) {
    const auto& row = prog.constraints[static_cast<std::size_t>(r)];
    const Rational sign = negated[static_cast<std::size_t>(r)] ? -1 : 1;
    for (int v = 0; v < nv; ++v) {
      const Rational a = sign * row.coeffs[static_cast<std::size_t>(v)];
      if (a == 0) continue;
      sx.at(r, var_col[static_cast<std::size_t>(v)]) = a;
      if (var_split[static_cast<std::size_t>(v)]) sx.at(r, var_col[static_cast<std::size_t>(v)] + 1) = -a;
    }
    if (slack_col[static_cast<std::size_t>(r)] >= 0) sx.at(r, slack_col[static_cast<std::size_t>(r)]) = sign;
    sx.rhs(r) = sign * row.rhs;
    if (art_col[static_cast<std::size_t>(r)] >= 0) {
      sx.at(r, art_col[static_cast<std::size_t>(r)]) = 1;
      sx.basic(r) = art_col[static_cast<std::size_t>(r)];
    } else {
      sx.basic(r) = slack_col[static_cast<std::size_t>(r)];
    }
  }

  std::vector<char> allow_all(static_cast<std::size_t>(cols), 1);
  std::vector<char> allow_real(static_cast<std::size_t>(cols), 1);
  for (int c = first_artificial; c < cols; ++c) allow_real[static_cast<std::size_t>(c)] = 0;

  // Phase I: maximize -(sum of artificials).
  int phase1 = -1;
  if (first_artificial < cols) {
    std::vector<Rational> p1(static_cast<std::size_t>(cols), 0);
    for (int c = first_artificial; c < cols; ++c) p1[static_cast<std::size_t>(c)] = -1;
    phase1 = sx.add_cost_row(std::move(p1), 0);
    sx.price_out(phase1);
    if (!sx.optimize(phase1, allow_all))
      throw std::logic_error("phase one cannot be unbounded");
    if (sx.cost(phase1, cols) != 0) {
      // Optimal value of -(sum art) is stored negated in the value slot;
      // nonzero means some artificial stayed positive.
      LpResult res;
      res.status = LpResult::Status::Infeasible;
      return res;
    }
    // Drive any zero-valued artificial out of the basis.
    for (int r = 0; r < m; ++r) {
      if (sx.basic(r) < first_artificial) continue;
      int pc = -1;
      for (int c = 0; c < first_artificial; ++c)
        if (sx.at(r, c) != 0) { pc = c; break; }
      if (pc >= 0) sx.pivot(r, pc);
      // Otherwise the row is redundant; its artificial stays basic at zero,
      // which is harmless because artificial columns are barred below.
    }
  }

  // Phase II.
  int phase2 = -1;
  if (prog.objective) {
    std::vector<Rational> p2(static_cast<std::size_t>(cols), 0);
    for (int v = 0; v < nv; ++v) {
      const Rational& c = (*prog.objective)[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      p2[static_cast<std::size_t>(var_col[static_cast<std::size_t>(v)])] = c;
      if (var_split[static_cast<std::size_t>(v)]) p2[static_cast<std::size_t>(var_col[static_cast<std::size_t>(v)] + 1)] = -c;
    }
    phase2 = sx.add_cost_row(std::move(p2), 0);
    sx.price_out(phase2);
    if (!sx.optimize(phase2, allow_real)) {
      LpResult res;
      res.status = LpResult::Status::Unbounded;
      return res;
    }
  }

  LpResult res;
  res.status = prog.objective ? LpResult::Status::Optimal : LpResult::Status::Feasible;
  res.witness.assign(static_cast<std::size_t>(nv), 0);
  std::vector<Rational> colval(static_cast<std::size_t>(cols), 0);
  for (int r = 0; r < m; ++r)
    if (sx.basic(r) >= 0) colval[static_cast<std::size_t>(sx.basic(r))] = sx.rhs(r);
  for (int v = 0; v < nv; ++v) {
    res.witness[static_cast<std::size_t>(v)] = colval[static_cast<std::size_t>(var_col[static_cast<std::size_t>(v)])];
    if (var_split[static_cast<std::size_t>(v)])
      res.witness[static_cast<std::size_t>(v)] -= colval[static_cast<std::size_t>(var_col[static_cast<std::size_t>(v)] + 1)];
  }
  if (prog.objective) {
    Rational value = 0;
    for (int v = 0; v < nv; ++v)
      value += (*prog.objective)[static_cast<std::size_t>(v)] * res.witness[static_cast<std::size_t>(v)];
    res.objective_value = value;
  }
  return res;
}

std::optional<std::vector<Rational>> convex_combination_weights(
    const std::vector<Point>& points, const Point& q) {
  if (points.empty()) return std::nullopt;
  const int n = q.dimension();
  const int k = static_cast<int>(points.size());
  LinearProgram lp(k);
  lp.mark_all_nonneg();
  for (int axis = 0; axis < n; ++axis) {
    std::vector<Rational> row(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      if (points[static_cast<std::size_t>(j)].dimension() != n)
        throw std::invalid_argument("dimension mismatch in convex combination");
      row[static_cast<std::size_t>(j)] = points[static_cast<std::size_t>(j)][axis];
    }
    lp.add_eq(std::move(row), q[axis]);
  }
  lp.add_eq(std::vector<Rational>(static_cast<std::size_t>(k), 1), 1);
  LpResult res = lp_solve(lp);
  if (!res.ok()) return std::nullopt;
  return res.witness;
}

}  // namespace homothets

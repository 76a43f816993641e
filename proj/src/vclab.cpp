#include "homothets/vclab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homothets/lp.hpp"
#include "homothets/rng.hpp"

namespace homothets {

namespace {

Point make_point(std::vector<Rational> c) { return Point(std::move(c)); }

Point ground_point(int m) {
  return make_point({Rational(1, m), 0, Rational(1, Integer(m) * m)});
}

Point offset_point(int n) {
  return make_point({0, Rational(1, n), Rational(1, Integer(n) * n)});
}

// Tangent functional of the paraboloid at (a, b, a^2+b^2): every other
// paraboloid point scores strictly higher.
Rational tangent_gap(const Point& at, const Point& q) {
  const Rational& a = at[0];
  const Rational& b = at[1];
  return (q[2] - 2 * a * q[0] - 2 * b * q[1]) -
         (at[2] - 2 * a * at[0] - 2 * b * at[1]);
}

}  // namespace

ParaboloidInstance build_paraboloid(int scale) {
  if (scale < 1 || scale > 8)
    throw std::invalid_argument("paraboloid scale must be in [1, 8]");
  std::vector<std::pair<int, int>> pairs;
  std::vector<Point> generators;
  const int copies = 1 << scale;
  for (int n = 1; n <= copies; ++n)
    for (int m = 1; m <= scale; ++m)
      if ((n - 1) >> (m - 1) & 1) {
        pairs.push_back({m, n});
        generators.push_back(ground_point(m) + offset_point(n));
      }

  // Each generator must be the strict minimum of its own tangent
  // functional; this certifies extremeness without any hull computation.
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (i != j && tangent_gap(generators[i], generators[j]) <= 0)
        throw std::logic_error("paraboloid generators must be extreme");

  std::vector<Point> sorted = generators;
  std::sort(sorted.begin(), sorted.end(),
            [](const Point& a, const Point& b) { return lex_less(a, b); });
  ConvexPolytope hull = ConvexPolytope::from_extreme_sorted(
      std::move(sorted), 3, affine_dimension_of(generators, 3));

  std::vector<FamilyMember> members;
  members.reserve(static_cast<std::size_t>(copies));
  for (int n = 1; n <= copies; ++n)
    members.push_back({1, -offset_point(n)});

  std::vector<Point> ground;
  for (int m = 1; m <= scale; ++m) ground.push_back(ground_point(m));

  return ParaboloidInstance{scale,
                            std::move(pairs),
                            std::move(generators),
                            hull,
                            HomothetFamily(hull, std::move(members)),
                            std::move(ground)};
}

bool verify_paraboloid(const ParaboloidInstance& instance) {
  const int copies = 1 << instance.scale;
  if (instance.family.size() != copies) return false;
  for (int n = 1; n <= copies; ++n)
    for (int m = 1; m <= instance.scale; ++m) {
      const bool expected = ((n - 1) >> (m - 1) & 1) != 0;
      const bool actual = contains_point_lp(
          instance.family.realized(n - 1),
          instance.ground[static_cast<std::size_t>(m - 1)]);
      if (expected != actual) return false;
    }
  return true;
}

ShatterCheck shatters(const HomothetFamily& family,
                      const std::vector<Point>& points) {
  if (points.size() > 20)
    throw CapExceededError("shatter check capped at 20 points");
  const int k = static_cast<int>(points.size());
  ShatterCheck check;
  check.witness_member.assign(std::size_t(1) << k, -1);
  for (int i = 0; i < family.size(); ++i) {
    unsigned mask = 0;
    for (int p = 0; p < k; ++p)
      if (contains_point(family.realized(i), points[static_cast<std::size_t>(p)]))
        mask |= 1u << p;
    if (check.witness_member[mask] < 0) check.witness_member[mask] = i;
  }
  check.shattered =
      std::all_of(check.witness_member.begin(), check.witness_member.end(),
                  [](int w) { return w >= 0; });
  return check;
}

namespace {

struct FloatFacet {
  std::vector<double> normal;
  double offset;
};

std::vector<FloatFacet> float_facets(const ConvexPolytope& body) {
  std::vector<FloatFacet> out;
  for (const auto& h : body.facets()) {
    FloatFacet f;
    double norm = 0;
    for (const auto& c : h.normal) {
      const double v = c.convert_to<double>();
      f.normal.push_back(v);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (auto& v : f.normal) v /= norm;
    f.offset = to_double(h.offset) / norm;
    out.push_back(std::move(f));
  }
  return out;
}

// Signed distance-like violation of q against the body, in body space.
double float_margin(const std::vector<FloatFacet>& facets,
                    const std::vector<double>& q) {
  double worst = -1e300;
  for (const auto& f : facets) {
    double s = -f.offset;
    for (std::size_t k = 0; k < q.size(); ++k) s += f.normal[k] * q[k];
    worst = std::max(worst, s);
  }
  return worst;
}

struct FloatFit {
  double ratio = 1.0;
  std::vector<double> shift;
  bool claimed = false;
};

double fit_score(const std::vector<FloatFacet>& facets,
                 const std::vector<std::vector<double>>& include,
                 const std::vector<std::vector<double>>& exclude,
                 double ratio, const std::vector<double>& shift) {
  constexpr double kStrict = 1e-7;
  const int n = static_cast<int>(shift.size());
  std::vector<double> q(static_cast<std::size_t>(n));
  double score = 0;
  for (const auto& p : include) {
    for (int k = 0; k < n; ++k) q[static_cast<std::size_t>(k)] = (p[static_cast<std::size_t>(k)] - shift[static_cast<std::size_t>(k)]) / ratio;
    score += std::max(0.0, float_margin(facets, q) + kStrict);
  }
  for (const auto& p : exclude) {
    for (int k = 0; k < n; ++k) q[static_cast<std::size_t>(k)] = (p[static_cast<std::size_t>(k)] - shift[static_cast<std::size_t>(k)]) / ratio;
    score += std::max(0.0, kStrict - float_margin(facets, q));
  }
  return score;
}

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p.dimension()));
  for (int k = 0; k < p.dimension(); ++k) out.push_back(to_double(p[k]));
  return out;
}

FloatFit float_fit_once(const std::vector<FloatFacet>& facets,
                        const std::vector<std::vector<double>>& include,
                        const std::vector<std::vector<double>>& exclude,
                        const std::vector<double>& body_centroid,
                        double body_diam, Rng& rng) {
  const int n = static_cast<int>(body_centroid.size());
  std::vector<double> target(static_cast<std::size_t>(n), 0.0);
  double spread = 0;
  double include_diam = 0;
  for (const auto& p : include)
    for (int k = 0; k < n; ++k) target[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)];
  if (!include.empty())
    for (int k = 0; k < n; ++k) target[static_cast<std::size_t>(k)] /= static_cast<double>(include.size());
  for (const auto& p : include)
    for (const auto& q : include) {
      double d = 0;
      for (int k = 0; k < n; ++k)
        d += (p[static_cast<std::size_t>(k)] - q[static_cast<std::size_t>(k)]) * (p[static_cast<std::size_t>(k)] - q[static_cast<std::size_t>(k)]);
      include_diam = std::max(include_diam, std::sqrt(d));
    }
  for (const auto& p : exclude)
    for (int k = 0; k < n; ++k)
      spread = std::max(spread, std::abs(p[static_cast<std::size_t>(k)] - target[static_cast<std::size_t>(k)]));
  spread = std::max({spread, include_diam, 0.25});

  double lo = 0.125, hi = 8.0;
  if (include_diam > 0) {
    lo = std::max(lo, 0.9 * include_diam / body_diam);
    hi = std::max(hi, 6.0 * include_diam / body_diam);
  }

  double log_ratio = std::log(lo) + rng.unit() * (std::log(hi) - std::log(lo));
  std::vector<double> shift(static_cast<std::size_t>(n));
  auto place = [&](double lr, std::vector<double>& s) {
    const double r = std::exp(lr);
    for (int k = 0; k < n; ++k)
      s[static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(k)] - r * body_centroid[static_cast<std::size_t>(k)];
  };
  place(log_ratio, shift);
  for (int k = 0; k < n; ++k) shift[static_cast<std::size_t>(k)] += 0.5 * spread * rng.symmetric();

  double best = fit_score(facets, include, exclude, std::exp(log_ratio), shift);
  for (int step = 0; step < 32 && best > 0; ++step) {
    const double eta = std::pow(0.82, step);
    const double lr2 = log_ratio + 0.45 * eta * rng.symmetric();
    std::vector<double> s2 = shift;
    for (int k = 0; k < n; ++k) s2[static_cast<std::size_t>(k)] += 0.6 * spread * eta * rng.symmetric();
    const double sc = fit_score(facets, include, exclude, std::exp(lr2), s2);
    if (sc < best) {
      best = sc;
      log_ratio = lr2;
      shift = std::move(s2);
    }
  }
  FloatFit fit;
  fit.ratio = std::exp(log_ratio);
  fit.shift = shift;
  fit.claimed = best == 0.0;
  return fit;
}

// Exact membership of p in ratio*body + shift via the body's own facets.
bool homothet_contains(const ConvexPolytope& body, const Homothety& h,
                       const Point& p) {
  const Point q = Rational(1) / h.ratio() * (p - h.translation());
  for (const auto& f : body.facets())
    if (halfspace_eval(f, q) > f.offset) return false;
  return true;
}

bool exact_fit_check(const ConvexPolytope& body, const Homothety& h,
                     const std::vector<Point>& include,
                     const std::vector<Point>& exclude) {
  for (const auto& p : include)
    if (!homothet_contains(body, h, p)) return false;
  for (const auto& p : exclude)
    if (homothet_contains(body, h, p)) return false;
  return true;
}

Homothety to_exact(const FloatFit& fit) {
  std::vector<Rational> shift;
  shift.reserve(fit.shift.size());
  for (double v : fit.shift) shift.push_back(rational_from_double(v));
  return Homothety(rational_from_double(fit.ratio), Point(std::move(shift)));
}

}  // namespace

FitResult fit_homothet(const ConvexPolytope& body,
                       const std::vector<Point>& include,
                       const std::vector<Point>& exclude, int budget,
                       std::uint64_t seed) {
  if (!body.is_body())
    throw std::invalid_argument("fit target must be a body");
  const int n = body.dimension();
  for (const auto& p : include)
    if (p.dimension() != n) throw std::invalid_argument("include dimension");
  for (const auto& p : exclude)
    if (p.dimension() != n) throw std::invalid_argument("exclude dimension");

  FitResult result;

  if (!include.empty() && !exclude.empty()) {
    const ConvexPolytope inner = convex_hull(include, n);
    for (const auto& q : exclude)
      if (contains_point(inner, q)) {
        result.impossible = true;
        return result;
      }
  }

  if (include.empty()) {
    // Slide one copy past everything along the first axis.
    Rational far = 0;
    for (const auto& p : exclude) far = std::max(far, Rational(p[0]));
    const auto bbox = bounding_box(body);
    std::vector<Rational> shift(static_cast<std::size_t>(n), 0);
    shift[0] = far - bbox.first[0] + 1;
    Homothety h(1, Point(std::move(shift)));
    if (!exact_fit_check(body, h, include, exclude))
      throw std::logic_error("displaced copy must avoid all excluded points");
    result.homothety = h;
    return result;
  }

  const auto facets = float_facets(body);
  std::vector<std::vector<double>> inc, exc;
  for (const auto& p : include) inc.push_back(to_doubles(p));
  for (const auto& p : exclude) exc.push_back(to_doubles(p));
  std::vector<double> centroid(static_cast<std::size_t>(n), 0.0);
  for (const auto& v : body.vertices()) {
    const auto d = to_doubles(v);
    for (int k = 0; k < n; ++k) centroid[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < n; ++k)
    centroid[static_cast<std::size_t>(k)] /= static_cast<double>(body.vertices().size());
  const auto bbox = bounding_box(body);
  double diam = 0;
  for (int k = 0; k < n; ++k)
    diam = std::max(diam, to_double(bbox.second[k] - bbox.first[k]));

  for (int trial = 0; trial < budget; ++trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const FloatFit fit =
        float_fit_once(facets, inc, exc, centroid, diam, rng);
    result.trials_used = trial + 1;
    if (!fit.claimed) continue;
    const Homothety h = to_exact(fit);
    if (exact_fit_check(body, h, include, exclude)) {
      result.homothety = h;
      return result;
    }
  }
  return result;
}

FourPointReport search_four_points_2d(const ConvexPolytope& body,
                                      long long trials, std::uint64_t seed,
                                      int fit_budget) {
  if (!body.is_body() || body.dimension() != 2)
    throw std::invalid_argument("four-point search needs a planar body");
  FourPointReport report;
  const auto facets = float_facets(body);
  std::vector<double> centroid(2, 0.0);
  for (const auto& v : body.vertices()) {
    centroid[0] += to_double(v[0]);
    centroid[1] += to_double(v[1]);
  }
  centroid[0] /= static_cast<double>(body.vertices().size());
  centroid[1] /= static_cast<double>(body.vertices().size());
  const auto bbox = bounding_box(body);
  const double diam =
      std::max(to_double(bbox.second[0] - bbox.first[0]),
               to_double(bbox.second[1] - bbox.first[1]));

  constexpr std::int64_t kDenom = 4096;
  for (long long trial = 0; trial < trials; ++trial) {
    ++report.stats.quadruples;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    std::vector<Point> pts;
    for (int i = 0; i < 4; ++i) {
      const auto x = static_cast<std::int64_t>(rng.below(kDenom + 1));
      const auto y = static_cast<std::int64_t>(rng.below(kDenom + 1));
      pts.push_back(make_point({Rational(x, kDenom), Rational(y, kDenom)}));
    }
    bool repeated = false;
    for (int i = 0; i < 4 && !repeated; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)]) repeated = true;
    if (repeated) {
      ++report.stats.degenerate;
      continue;
    }
    const ConvexPolytope quad = convex_hull(pts, 2);
    if (quad.affine_dimension() < 2) {
      ++report.stats.degenerate;
      continue;
    }
    if (quad.vertices().size() < 4) {
      // One point falls inside (or on the boundary of) the hull of the
      // rest, so the separating split is impossible outright.
      ++report.stats.enclosed;
      continue;
    }
    ++report.stats.convex_position;
    const auto& ring = quad.facet_data().rings[0];
    std::array<Point, 4> ordered = {
        quad.vertices()[static_cast<std::size_t>(ring[0])],
        quad.vertices()[static_cast<std::size_t>(ring[1])],
        quad.vertices()[static_cast<std::size_t>(ring[2])],
        quad.vertices()[static_cast<std::size_t>(ring[3])]};
    const std::vector<Point> diag_a = {ordered[0], ordered[2]};
    const std::vector<Point> diag_b = {ordered[1], ordered[3]};

    std::vector<std::vector<double>> inc_a, exc_a;
    for (const auto& p : diag_a) inc_a.push_back(to_doubles(p));
    for (const auto& p : diag_b) exc_a.push_back(to_doubles(p));

    FloatFit fit_a;
    for (int t = 0; t < fit_budget && !fit_a.claimed; ++t) {
      Rng fit_rng(derive_seed(seed ^ 0x5b5b5b5bu,
                              static_cast<std::uint64_t>(trial * 64 + t)));
      fit_a = float_fit_once(facets, inc_a, exc_a, centroid, diam, fit_rng);
    }
    if (!fit_a.claimed) continue;
    ++report.stats.first_float;

    FloatFit fit_b;
    for (int t = 0; t < fit_budget && !fit_b.claimed; ++t) {
      Rng fit_rng(derive_seed(seed ^ 0xa7a7a7a7u,
                              static_cast<std::uint64_t>(trial * 64 + t)));
      fit_b = float_fit_once(facets, exc_a, inc_a, centroid, diam, fit_rng);
    }
    if (!fit_b.claimed) continue;
    ++report.stats.both_float;

    const Homothety ha = to_exact(fit_a);
    const Homothety hb = to_exact(fit_b);
    if (exact_fit_check(body, ha, diag_a, diag_b) &&
        exact_fit_check(body, hb, diag_b, diag_a)) {
      report.counterexample = FourPointCounterexample{ordered, ha, hb};
      return report;
    }
    ++report.stats.exact_refuted;
  }
  return report;
}

AntipodalReport is_strictly_antipodal(const std::vector<Point>& points) {
  AntipodalReport report;
  if (points.size() < 2)
    throw std::invalid_argument("antipodality needs at least two points");
  const int n = points.front().dimension();
  for (const auto& p : points)
    if (p.dimension() != n)
      throw std::invalid_argument("mixed dimensions in point set");

  const int m = static_cast<int>(points.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      // Direction u with x_i strictly above and x_j strictly below every
      // other point; the gap g is maximized, strictness is g > 0.
      LinearProgram lp(n + 1);
      for (int x = 0; x < m; ++x) {
        if (x != i) {
          std::vector<Rational> row(static_cast<std::size_t>(n + 1));
          for (int k = 0; k < n; ++k)
            row[static_cast<std::size_t>(k)] = points[static_cast<std::size_t>(x)][k] - points[static_cast<std::size_t>(i)][k];
          row[static_cast<std::size_t>(n)] = 1;
          lp.add_le(std::move(row), 0);
        }
        if (x != j) {
          std::vector<Rational> row(static_cast<std::size_t>(n + 1));
          for (int k = 0; k < n; ++k)
            row[static_cast<std::size_t>(k)] = points[static_cast<std::size_t>(j)][k] - points[static_cast<std::size_t>(x)][k];
          row[static_cast<std::size_t>(n)] = 1;
          lp.add_le(std::move(row), 0);
        }
      }
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> up(static_cast<std::size_t>(n + 1), 0), dn(static_cast<std::size_t>(n + 1), 0);
        up[static_cast<std::size_t>(k)] = 1;
        dn[static_cast<std::size_t>(k)] = -1;
        lp.add_le(std::move(up), 1);
        lp.add_le(std::move(dn), 1);
      }
      std::vector<Rational> obj(static_cast<std::size_t>(n + 1), 0);
      obj[static_cast<std::size_t>(n)] = 1;
      lp.set_objective(obj);
      const LpResult res = lp_solve(lp);
      if (res.status != LpResult::Status::Optimal || res.objective_value <= 0) {
        report.failing_pair = {i, j};
        report.witnesses.clear();
        return report;
      }
      AntipodalWitness w;
      w.first = i;
      w.second = j;
      w.direction = Point(std::vector<Rational>(res.witness.begin(),
                                                res.witness.begin() + n));
      report.witnesses.push_back(std::move(w));
    }
  report.strictly_antipodal = true;
  return report;
}

std::optional<TouchingFamilyReport> build_touching_family(
    const ConvexPolytope& body) {
  if (!body.is_body())
    throw std::invalid_argument("touching family needs a body");
  const auto& verts = body.vertices();
  AntipodalReport antipodal = is_strictly_antipodal(verts);
  if (!antipodal.strictly_antipodal) return std::nullopt;

  // The witness directions make each vertex pair the unique extremes of
  // the whole body, which is what pins pair intersections to one point.
  for (const auto& w : antipodal.witnesses) {
    int argmax = 0, argmin = 0;
    for (int v = 1; v < static_cast<int>(verts.size()); ++v) {
      if (dot(w.direction, verts[static_cast<std::size_t>(v)]) >
          dot(w.direction, verts[static_cast<std::size_t>(argmax)]))
        argmax = v;
      if (dot(w.direction, verts[static_cast<std::size_t>(v)]) <
          dot(w.direction, verts[static_cast<std::size_t>(argmin)]))
        argmin = v;
    }
    if (argmax != w.first || argmin != w.second)
      throw std::logic_error("witness direction must pin both extremes");
  }

  std::vector<FamilyMember> members;
  for (const auto& v : verts) members.push_back({1, v});
  HomothetFamily family(body, std::move(members));

  std::vector<Point> touch_points;
  for (const auto& w : antipodal.witnesses) {
    const Point touch = verts[static_cast<std::size_t>(w.first)] +
                        verts[static_cast<std::size_t>(w.second)];
    if (!contains_point(family.realized(w.first), touch) ||
        !contains_point(family.realized(w.second), touch))
      throw std::logic_error("touch point must lie in both members");
    for (int k = 0; k < family.size(); ++k)
      if (k != w.first && k != w.second &&
          contains_point(family.realized(k), touch))
        throw std::logic_error("touch point must avoid third members");
    touch_points.push_back(touch);
  }

  return TouchingFamilyReport{std::move(family),
                              std::move(antipodal.witnesses),
                              std::move(touch_points)};
}

DualShatterReport dual_shatter_lower(const HomothetFamily& family, int k,
                                     const std::vector<Point>& samples) {
  const int n = family.size();
  if (k < 1 || k > n || k > 12)
    throw std::invalid_argument("subset size out of range");
  if (samples.empty()) throw std::invalid_argument("no sample points");
  Integer combos = 1;
  for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
  if (combos > 500000)
    throw CapExceededError("too many member subsets to scan");

  std::vector<std::vector<char>> member_has(
      static_cast<std::size_t>(n),
      std::vector<char>(samples.size(), 0));
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < samples.size(); ++s)
      member_has[static_cast<std::size_t>(i)][s] =
          contains_point(family.realized(i), samples[s]) ? 1 : 0;

  DualShatterReport report;
  report.subset_size = k;
  report.cell_witness.assign(std::size_t(1) << k, -1);

  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> witness(std::size_t(1) << k, -1);
  while (true) {
    std::fill(witness.begin(), witness.end(), -1);
    int cells = 0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      unsigned mask = 0;
      for (int b = 0; b < k; ++b)
        if (member_has[static_cast<std::size_t>(subset[static_cast<std::size_t>(b)])][s]) mask |= 1u << b;
      if (witness[mask] < 0) {
        witness[mask] = static_cast<int>(s);
        ++cells;
      }
    }
    if (cells > report.max_cells) {
      report.max_cells = cells;
      report.best_subset = subset;
      report.cell_witness = witness;
    }
    int pos = k - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q - 1)] + 1;
  }
  return report;
}

std::vector<Point> paraboloid_dual_samples(const ParaboloidInstance& instance) {
  std::vector<Point> samples = instance.ground;
  samples.insert(samples.end(), instance.generators.begin(),
                 instance.generators.end());
  for (int i = 0; i < instance.family.size(); ++i)
    for (int j = i + 1; j < instance.family.size(); ++j) {
      auto w = intersects(instance.family.realized(i),
                          instance.family.realized(j));
      if (w.has_value()) samples.push_back(*w);
    }
  samples.push_back(make_point({0, 0, -5}));
  return samples;
}

}  // namespace homothets

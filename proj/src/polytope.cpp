#include "homothets/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace homothets {

namespace {

Rational rat(const Integer& z) { return Rational(z); }

void require_dim(int dimension) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("supported dimensions are 2 and 3");
}

std::vector<Point> dedup_sorted(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Gaussian elimination over the rationals; returns the independent
// difference vectors it accumulated.
std::vector<std::vector<Rational>> difference_basis(
    const std::vector<Point>& pts) {
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  if (pts.empty()) return basis;
  const int n = pts.front().dimension();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = pts[i][k] - pts[0][k];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int piv = pivots[b];
      if (v[static_cast<std::size_t>(piv)] == 0) continue;
      const Rational f = v[static_cast<std::size_t>(piv)] / basis[b][static_cast<std::size_t>(piv)];
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] -= f * basis[b][static_cast<std::size_t>(k)];
    }
    int piv = -1;
    for (int k = 0; k < n; ++k)
      if (v[static_cast<std::size_t>(k)] != 0) { piv = k; break; }
    if (piv < 0) continue;
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    if (static_cast<int>(basis.size()) == n) break;
  }
  return basis;
}

struct Point2 {
  Rational x, y;
  int orig;
  bool operator<(const Point2& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
  bool same(const Point2& o) const { return x == o.x && y == o.y; }
};

int orient2(const Point2& a, const Point2& b, const Point2& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

// Andrew's monotone chain with strict turns; input sorted and distinct,
// not all collinear. Output: CCW ring of extreme points.
std::vector<Point2> chain_ring(const std::vector<Point2>& pts) {
  const std::size_t n = pts.size();
  std::vector<Point2> ring;
  ring.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (ring.size() >= 2 &&
           orient2(ring[ring.size() - 2], ring.back(), pts[i]) <= 0)
      ring.pop_back();
    ring.push_back(pts[i]);
  }
  const std::size_t lower = ring.size() + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
    while (ring.size() >= lower &&
           orient2(ring[ring.size() - 2], ring.back(), pts[i]) <= 0)
      ring.pop_back();
    ring.push_back(pts[i]);
  }
  ring.pop_back();  // closes back at pts[0]
  return ring;
}

std::vector<Point2> project_points(const std::vector<Point>& pts, int drop_axis) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  const int n = pts.front().dimension();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point2 p;
    std::vector<const Rational*> kept;
    for (int k = 0; k < n; ++k)
      if (k != drop_axis) kept.push_back(&pts[i][k]);
    p.x = *kept[0];
    p.y = *kept[1];
    p.orig = static_cast<int>(i);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Rational> cross3(const std::vector<Rational>& a,
                             const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Point& a, const Point& b, const Point& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::vector<Integer> primitive_normal(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, denominator(c));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& c : v) {
    Integer z = numerator(c) * (l / denominator(c));
    g = gcd(g, abs(z));
    out.push_back(std::move(z));
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

}  // namespace

Rational halfspace_eval(const HalfSpace& h, const Point& p) {
  if (static_cast<int>(h.normal.size()) != p.dimension())
    throw std::invalid_argument("halfspace/point dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < p.dimension(); ++i) s += rat(h.normal[static_cast<std::size_t>(i)]) * p[i];
  return s;
}

ConvexPolytope::ConvexPolytope(const ConvexPolytope& other)
    : dim_(other.dim_), affine_dim_(other.affine_dim_), vertices_(other.vertices_) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  cache_ = other.cache_;
}

ConvexPolytope& ConvexPolytope::operator=(const ConvexPolytope& other) {
  if (this == &other) return *this;
  std::shared_ptr<const FacetData> snap;
  {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    snap = other.cache_;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  dim_ = other.dim_;
  affine_dim_ = other.affine_dim_;
  vertices_ = other.vertices_;
  cache_ = std::move(snap);
  return *this;
}

ConvexPolytope::ConvexPolytope(ConvexPolytope&& other) noexcept
    : dim_(other.dim_), affine_dim_(other.affine_dim_),
      vertices_(std::move(other.vertices_)) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  cache_ = std::move(other.cache_);
}

ConvexPolytope& ConvexPolytope::operator=(ConvexPolytope&& other) noexcept {
  if (this == &other) return *this;
  std::shared_ptr<const FacetData> snap;
  {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    snap = std::move(other.cache_);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  dim_ = other.dim_;
  affine_dim_ = other.affine_dim_;
  vertices_ = std::move(other.vertices_);
  cache_ = std::move(snap);
  return *this;
}

ConvexPolytope ConvexPolytope::from_extreme_sorted(std::vector<Point> vertices,
                                                   int dimension,
                                                   int affine_dim) {
  ConvexPolytope p;
  p.dim_ = dimension;
  p.affine_dim_ = affine_dim;
  p.vertices_ = std::move(vertices);
  return p;
}

int affine_dimension_of(const std::vector<Point>& points, int dimension) {
  require_dim(dimension);
  if (points.empty()) return -1;
  auto pts = dedup_sorted(points);
  return static_cast<int>(difference_basis(pts).size());
}

ConvexPolytope ConvexPolytope::hull_of(std::vector<Point> points, int dimension) {
  require_dim(dimension);
  for (const auto& p : points)
    if (p.dimension() != dimension)
      throw std::invalid_argument("point dimension mismatch in hull");
  auto pts = dedup_sorted(std::move(points));
  if (pts.empty()) return from_extreme_sorted({}, dimension, -1);
  const auto basis = difference_basis(pts);
  const int adim = static_cast<int>(basis.size());

  if (adim == 0) return from_extreme_sorted({pts.front()}, dimension, 0);
  if (adim == 1) {
    // Lexicographic order is monotone along a line, so the extreme points
    // are the first and last of the sorted distinct set.
    return from_extreme_sorted({pts.front(), pts.back()}, dimension, 1);
  }

  if (dimension == 2) {
    std::vector<Point2> pp;
    pp.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      pp.push_back({pts[i][0], pts[i][1], static_cast<int>(i)});
    auto ring = chain_ring(pp);
    std::vector<Point> verts;
    verts.reserve(ring.size());
    for (const auto& r : ring) verts.push_back(pts[static_cast<std::size_t>(r.orig)]);
    std::sort(verts.begin(), verts.end(),
              [](const Point& a, const Point& b) { return lex_less(a, b); });
    return from_extreme_sorted(std::move(verts), 2, 2);
  }

  if (adim == 2) {
    // Planar set inside R^3: drop the axis with the largest normal
    // component; the projection is injective and affine on the plane.
    const auto nv = cross3(basis[0], basis[1]);
    int drop = 0;
    for (int k = 1; k < 3; ++k)
      if (abs(nv[static_cast<std::size_t>(k)]) > abs(nv[static_cast<std::size_t>(drop)])) drop = k;
    auto pp = project_points(pts, drop);
    std::sort(pp.begin(), pp.end());
    auto ring = chain_ring(pp);
    std::vector<Point> verts;
    verts.reserve(ring.size());
    for (const auto& r : ring) verts.push_back(pts[static_cast<std::size_t>(r.orig)]);
    std::sort(verts.begin(), verts.end(),
              [](const Point& a, const Point& b) { return lex_less(a, b); });
    return from_extreme_sorted(std::move(verts), 3, 2);
  }

  // Full-dimensional in R^3: a point is a vertex exactly when it is not a
  // convex combination of the others.
  std::vector<Point> verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!convex_combination_weights(others, pts[i]).has_value())
      verts.push_back(pts[i]);
  }
  return from_extreme_sorted(std::move(verts), 3, 3);
}

ConvexPolytope convex_hull(const std::vector<Point>& points, int dimension) {
  return ConvexPolytope::hull_of(points, dimension);
}

const FacetData& ConvexPolytope::facet_data() const {
  if (!is_body())
    throw std::invalid_argument(
        "facet representation requires a full-dimensional body");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache_) return *cache_;

  auto data = std::make_shared<FacetData>();
  const int n = dim_;
  const auto& V = vertices_;

  if (n == 2) {
    std::vector<Point2> pp;
    pp.reserve(V.size());
    for (std::size_t i = 0; i < V.size(); ++i)
      pp.push_back({V[i][0], V[i][1], static_cast<int>(i)});
    auto ring2 = chain_ring(pp);  // CCW
    std::vector<int> ring;
    ring.reserve(ring2.size());
    for (const auto& r : ring2) ring.push_back(r.orig);
    const std::size_t s = ring.size();
    for (std::size_t i = 0; i < s; ++i) {
      const Point& a = V[static_cast<std::size_t>(ring[i])];
      const Point& b = V[static_cast<std::size_t>(ring[(i + 1) % s])];
      // Outward normal of a CCW edge a->b.
      std::vector<Rational> nr = {b[1] - a[1], a[0] - b[0]};
      HalfSpace h;
      h.normal = primitive_normal(nr);
      h.offset = halfspace_eval(h, a);
      data->facets.push_back(std::move(h));
    }
    data->rings.push_back(std::move(ring));
  } else {
    // Exact dual enumeration about the vertex centroid: dual vertices of
    // {y : <y, v - c> <= 1} correspond to facets of the polytope.
    Point c(std::vector<Rational>(3, 0));
    for (const auto& v : V)
      for (int k = 0; k < 3; ++k) c[k] += v[k];
    for (int k = 0; k < 3; ++k) c[k] /= Rational(static_cast<int>(V.size()));
    std::vector<Point> W;
    W.reserve(V.size());
    for (const auto& v : V) W.push_back(v - c);

    std::vector<Point> duals;
    const int m = static_cast<int>(W.size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          const Rational d = det3(W[static_cast<std::size_t>(i)], W[static_cast<std::size_t>(j)], W[static_cast<std::size_t>(k)]);
          if (d == 0) continue;
          // Cramer solve [w_i; w_j; w_k] y = (1,1,1).
          Point y(std::vector<Rational>(3, 0));
          for (int col = 0; col < 3; ++col) {
            Point a = W[static_cast<std::size_t>(i)], b = W[static_cast<std::size_t>(j)], cc = W[static_cast<std::size_t>(k)];
            a[col] = 1; b[col] = 1; cc[col] = 1;
            // determinant with the chosen column replaced by ones
            y[col] = det3(a, b, cc) / d;
          }
          bool feasible = true;
          for (int t = 0; t < m && feasible; ++t)
            if (dot(y, W[static_cast<std::size_t>(t)]) > 1) feasible = false;
          if (feasible) duals.push_back(std::move(y));
        }
    std::sort(duals.begin(), duals.end(),
              [](const Point& a, const Point& b) { return lex_less(a, b); });
    duals.erase(std::unique(duals.begin(), duals.end()), duals.end());

    for (const auto& y : duals) {
      HalfSpace h;
      h.normal = primitive_normal(y.coords);
      Rational off = halfspace_eval(h, V[0]);
      for (std::size_t t = 1; t < V.size(); ++t)
        off = std::max(off, halfspace_eval(h, V[t]));
      h.offset = std::move(off);

      std::vector<int> incident;
      for (std::size_t t = 0; t < V.size(); ++t)
        if (halfspace_eval(h, V[t]) == h.offset) incident.push_back(static_cast<int>(t));

      // Order the facet polygon by a 2D hull in a projection the facet
      // plane maps to bijectively.
      int drop = 0;
      for (int k = 1; k < 3; ++k)
        if (abs(h.normal[static_cast<std::size_t>(k)]) > abs(h.normal[static_cast<std::size_t>(drop)])) drop = k;
      std::vector<Point> facet_pts;
      facet_pts.reserve(incident.size());
      for (int idx : incident) facet_pts.push_back(V[static_cast<std::size_t>(idx)]);
      auto pp = project_points(facet_pts, drop);
      std::sort(pp.begin(), pp.end());
      auto ring2 = chain_ring(pp);
      std::vector<int> ring;
      ring.reserve(ring2.size());
      for (const auto& r : ring2) ring.push_back(incident[static_cast<std::size_t>(r.orig)]);
      // Orient the ring so tetrahedra toward the centroid are positive.
      if (ring.size() >= 3) {
        const Rational sgn =
            det3(V[static_cast<std::size_t>(ring[0])] - c, V[static_cast<std::size_t>(ring[1])] - c, V[static_cast<std::size_t>(ring[2])] - c);
        if (sgn < 0) std::reverse(ring.begin(), ring.end());
      }
      data->facets.push_back(std::move(h));
      data->rings.push_back(std::move(ring));
    }
  }

  cache_ = std::move(data);
  return *cache_;
}

namespace {

ConvexPolytope map_affine(const ConvexPolytope& a,
                          const Rational& s, const Point& t) {
  std::vector<Point> verts;
  verts.reserve(a.vertices().size());
  for (const auto& v : a.vertices()) verts.push_back(s * v + t);
  std::sort(verts.begin(), verts.end(),
            [](const Point& x, const Point& y) { return lex_less(x, y); });
  return ConvexPolytope::from_extreme_sorted(std::move(verts), a.dimension(),
                                             a.affine_dimension());
}

}  // namespace

ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("Minkowski sum of mismatched dimensions");
  if (a.empty() || b.empty())
    return ConvexPolytope::from_extreme_sorted({}, a.dimension(), -1);
  std::vector<Point> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) sums.push_back(va + vb);
  return ConvexPolytope::hull_of(std::move(sums), a.dimension());
}

ConvexPolytope reflect(const ConvexPolytope& a) {
  std::vector<Point> verts;
  verts.reserve(a.vertices().size());
  for (const auto& v : a.vertices()) verts.push_back(-v);
  std::sort(verts.begin(), verts.end(),
            [](const Point& x, const Point& y) { return lex_less(x, y); });
  return ConvexPolytope::from_extreme_sorted(std::move(verts), a.dimension(),
                                             a.affine_dimension());
}

ConvexPolytope translate(const ConvexPolytope& a, const Point& t) {
  if (t.dimension() != a.dimension())
    throw std::invalid_argument("translation dimension mismatch");
  return map_affine(a, 1, t);
}

ConvexPolytope scale(const ConvexPolytope& a, const Rational& s) {
  if (s <= 0) throw std::invalid_argument("scale factor must be positive");
  return map_affine(a, s, Point(std::vector<Rational>(static_cast<std::size_t>(a.dimension()), 0)));
}

ConvexPolytope apply_homothety(const ConvexPolytope& a, const Homothety& h) {
  if (h.translation().dimension() != a.dimension())
    throw std::invalid_argument("homothety dimension mismatch");
  return map_affine(a, h.ratio(), h.translation());
}

Rational volume(const ConvexPolytope& a) {
  if (!a.is_body()) return 0;
  const auto& fd = a.facet_data();
  const auto& V = a.vertices();
  if (a.dimension() == 2) {
    const auto& ring = fd.rings[0];
    Rational twice = 0;
    const std::size_t s = ring.size();
    for (std::size_t i = 0; i < s; ++i) {
      const Point& p = V[static_cast<std::size_t>(ring[i])];
      const Point& q = V[static_cast<std::size_t>(ring[(i + 1) % s])];
      twice += p[0] * q[1] - q[0] * p[1];
    }
    return twice / 2;
  }
  Point c(std::vector<Rational>(3, 0));
  for (const auto& v : V)
    for (int k = 0; k < 3; ++k) c[k] += v[k];
  for (int k = 0; k < 3; ++k) c[k] /= Rational(static_cast<int>(V.size()));
  Rational six = 0;
  for (const auto& ring : fd.rings) {
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
      six += det3(V[static_cast<std::size_t>(ring[0])] - c, V[static_cast<std::size_t>(ring[i])] - c,
                  V[static_cast<std::size_t>(ring[i + 1])] - c);
    }
  }
  return six / 6;
}

bool contains_point_lp(const ConvexPolytope& a, const Point& q) {
  if (q.dimension() != a.dimension())
    throw std::invalid_argument("point dimension mismatch");
  if (a.empty()) return false;
  return convex_combination_weights(a.vertices(), q).has_value();
}

bool contains_point(const ConvexPolytope& a, const Point& q) {
  if (q.dimension() != a.dimension())
    throw std::invalid_argument("point dimension mismatch");
  if (a.empty()) return false;
  // Facet arithmetic for bodies of modest size, LP route otherwise
  // (degenerate hulls and very large vertex sets).
  if (a.is_body() && a.vertices().size() <= 48) {
    for (const auto& h : a.facets())
      if (halfspace_eval(h, q) > h.offset) return false;
    return true;
  }
  return contains_point_lp(a, q);
}

std::optional<Point> intersects(const ConvexPolytope& a,
                                const ConvexPolytope& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("intersection of mismatched dimensions");
  if (a.empty() || b.empty()) return std::nullopt;
  const int n = a.dimension();
  const int ka = static_cast<int>(a.vertices().size());
  const int kb = static_cast<int>(b.vertices().size());
  LinearProgram lp(ka + kb);
  lp.mark_all_nonneg();
  for (int axis = 0; axis < n; ++axis) {
    std::vector<Rational> row(static_cast<std::size_t>(ka + kb));
    for (int j = 0; j < ka; ++j) row[static_cast<std::size_t>(j)] = a.vertices()[static_cast<std::size_t>(j)][axis];
    for (int j = 0; j < kb; ++j) row[static_cast<std::size_t>(ka + j)] = -b.vertices()[static_cast<std::size_t>(j)][axis];
    lp.add_eq(std::move(row), 0);
  }
  {
    std::vector<Rational> row(static_cast<std::size_t>(ka + kb), 0);
    for (int j = 0; j < ka; ++j) row[static_cast<std::size_t>(j)] = 1;
    lp.add_eq(std::move(row), 1);
  }
  {
    std::vector<Rational> row(static_cast<std::size_t>(ka + kb), 0);
    for (int j = 0; j < kb; ++j) row[static_cast<std::size_t>(ka + j)] = 1;
    lp.add_eq(std::move(row), 1);
  }
  const LpResult res = lp_solve(lp);
  if (!res.ok()) return std::nullopt;
  Point w(std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < ka; ++j)
    for (int axis = 0; axis < n; ++axis)
      w[axis] += res.witness[static_cast<std::size_t>(j)] * a.vertices()[static_cast<std::size_t>(j)][axis];
  return w;
}

std::optional<Point> common_point(
    const std::vector<const ConvexPolytope*>& polys) {
  if (polys.empty())
    throw std::invalid_argument("common point of an empty list");
  const int n = polys.front()->dimension();
  bool facet_route = true;
  for (const auto* p : polys) {
    if (p->dimension() != n)
      throw std::invalid_argument("common point across dimensions");
    if (p->empty()) return std::nullopt;
    if (!p->is_body() || p->vertices().size() > 48) facet_route = false;
  }
  if (facet_route) {
    LinearProgram lp(n);
    for (const auto* p : polys)
      for (const auto& h : p->facets()) {
        std::vector<Rational> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(k)] = rat(h.normal[static_cast<std::size_t>(k)]);
        lp.add_le(std::move(row), h.offset);
      }
    const LpResult res = lp_solve(lp);
    if (!res.ok()) return std::nullopt;
    return Point(res.witness);
  }
  // Convex-combination route: one weight block per polytope, all blocks
  // describing the same point.
  int total = 0;
  std::vector<int> offset;
  for (const auto* p : polys) {
    offset.push_back(total);
    total += static_cast<int>(p->vertices().size());
  }
  LinearProgram lp(total);
  lp.mark_all_nonneg();
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    std::vector<Rational> row(static_cast<std::size_t>(total), 0);
    for (std::size_t j = 0; j < polys[pi]->vertices().size(); ++j)
      row[static_cast<std::size_t>(offset[pi]) + j] = 1;
    lp.add_eq(std::move(row), 1);
  }
  for (std::size_t pi = 1; pi < polys.size(); ++pi) {
    for (int axis = 0; axis < n; ++axis) {
      std::vector<Rational> row(static_cast<std::size_t>(total), 0);
      for (std::size_t j = 0; j < polys[0]->vertices().size(); ++j)
        row[static_cast<std::size_t>(offset[0]) + j] = polys[0]->vertices()[j][axis];
      for (std::size_t j = 0; j < polys[pi]->vertices().size(); ++j)
        row[static_cast<std::size_t>(offset[pi]) + j] = -polys[pi]->vertices()[j][axis];
      lp.add_eq(std::move(row), 0);
    }
  }
  const LpResult res = lp_solve(lp);
  if (!res.ok()) return std::nullopt;
  Point w(std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (std::size_t j = 0; j < polys[0]->vertices().size(); ++j)
    for (int axis = 0; axis < n; ++axis)
      w[axis] += res.witness[static_cast<std::size_t>(offset[0]) + j] * polys[0]->vertices()[j][axis];
  return w;
}

Rational support(const ConvexPolytope& a, const Point& u) {
  if (u.dimension() != a.dimension())
    throw std::invalid_argument("direction dimension mismatch");
  if (is_zero(u)) throw std::invalid_argument("support direction must be nonzero");
  if (a.empty()) throw std::invalid_argument("support of an empty polytope");
  Rational best = dot(u, a.vertices().front());
  for (std::size_t i = 1; i < a.vertices().size(); ++i)
    best = std::max(best, dot(u, a.vertices()[i]));
  return best;
}

std::pair<Point, Point> bounding_box(const ConvexPolytope& a) {
  if (a.empty()) throw std::invalid_argument("bounding box of an empty polytope");
  const int n = a.dimension();
  Point lo = a.vertices().front(), hi = a.vertices().front();
  for (const auto& v : a.vertices())
    for (int k = 0; k < n; ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (v[k] > hi[k]) hi[k] = v[k];
    }
  return {lo, hi};
}

}  // namespace homothets

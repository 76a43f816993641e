#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "homothets/homothety.hpp"
#include "homothets/lp.hpp"
#include "homothets/point.hpp"
#include "homothets/rational.hpp"

namespace homothets {

// Closed halfspace <normal, x> <= offset with a primitive integer normal.
struct HalfSpace {
  std::vector<Integer> normal;
  Rational offset;
};

// Returns <normal, p>; p satisfies h iff the result is at most h.offset.
Rational halfspace_eval(const HalfSpace& h, const Point& p);

// Facet data is derived lazily from the vertex set and cached; the fill is
// idempotent, so concurrent readers behave as if it were computed eagerly.
struct FacetData {
  std::vector<HalfSpace> facets;
  // Vertex indices of each facet, cyclically ordered. In 2D there is a
  // single entry: the CCW boundary ring of the polygon.
  std::vector<std::vector<int>> rings;
};

// A convex polytope in dimension 2 or 3, stored as its minimal vertex set in
// lexicographic order. Lower-dimensional (degenerate) polytopes are allowed;
// operations that need a full-dimensional body say so and throw otherwise.
class ConvexPolytope {
 public:
  ConvexPolytope() = default;

  // Reduces an arbitrary point set to its extreme points.
  static ConvexPolytope hull_of(std::vector<Point> points, int dimension);

  // Vertices already known to be minimal and lex-sorted (affine images of a
  // hull); used internally to avoid pointless re-reduction.
  static ConvexPolytope from_extreme_sorted(std::vector<Point> vertices,
                                            int dimension, int affine_dim);

  int dimension() const { return dim_; }
  int affine_dimension() const { return affine_dim_; }
  bool is_body() const { return affine_dim_ == dim_; }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Point>& vertices() const { return vertices_; }

  // Full-dimensional bodies only; throws std::invalid_argument otherwise.
  const FacetData& facet_data() const;
  const std::vector<HalfSpace>& facets() const { return facet_data().facets; }

  bool operator==(const ConvexPolytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
  }

 private:
  int dim_ = 0;
  int affine_dim_ = -1;  // -1: empty polytope
  std::vector<Point> vertices_;

  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const FacetData> cache_;

 public:
  ConvexPolytope(const ConvexPolytope& other);
  ConvexPolytope& operator=(const ConvexPolytope& other);
  ConvexPolytope(ConvexPolytope&& other) noexcept;
  ConvexPolytope& operator=(ConvexPolytope&& other) noexcept;
};

// Minimal extreme vertex set of a point set (n = 2 or 3).
ConvexPolytope convex_hull(const std::vector<Point>& points, int dimension);

// Vertex-sum hull A + B.
ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b);

ConvexPolytope reflect(const ConvexPolytope& a);                  // -A
ConvexPolytope translate(const ConvexPolytope& a, const Point& t);
ConvexPolytope scale(const ConvexPolytope& a, const Rational& s);  // s > 0
ConvexPolytope apply_homothety(const ConvexPolytope& a, const Homothety& h);

// Exact n-volume; 0 exactly when the polytope is lower-dimensional.
Rational volume(const ConvexPolytope& a);

// Closed containment.
bool contains_point(const ConvexPolytope& a, const Point& q);

// Containment decided by LP feasibility over the vertex set; used as the
// independent oracle against the facet route.
bool contains_point_lp(const ConvexPolytope& a, const Point& q);

// Closed intersection test with an exact witness point.
std::optional<Point> intersects(const ConvexPolytope& a,
                                const ConvexPolytope& b);

// A common point of every polytope in the list, if one exists.
std::optional<Point> common_point(
    const std::vector<const ConvexPolytope*>& polys);

// max_{x in A} <u, x>; u must be nonzero.
Rational support(const ConvexPolytope& a, const Point& u);

std::pair<Point, Point> bounding_box(const ConvexPolytope& a);

// Affine dimension of a point set (rank of the difference space).
int affine_dimension_of(const std::vector<Point>& points, int dimension);

}  // namespace homothets

#pragma once

#include <optional>
#include <vector>

#include "homothets/polytope.hpp"

namespace homothets {

// Axis-aligned box, lo <= hi componentwise.
struct Box {
  Point lo;
  Point hi;
};

// Largest axis-aligned cube inside a body, found exactly by maximizing the
// half-side against every facet inequality.
struct InscribedCube {
  Point center;
  Rational half_side;
};

InscribedCube largest_inscribed_cube(const ConvexPolytope& body);

// One grid cell of a cover together with the tile that accounts for it.
// When `clipped` is set the certificate is for cell-intersect-region only;
// otherwise the whole cell lies inside the tile.
struct CellCertificate {
  Box cell;
  int tile_index;
  bool clipped;
};

struct Cover {
  ConvexPolytope region;
  ConvexPolytope tile;
  std::vector<Point> translations;
  std::vector<CellCertificate> cells;
};

// Optional override used by tests that need two covers computed over the
// same grid.
struct GridSpec {
  Rational step;
  Point origin;
};

Cover tile_cover(const ConvexPolytope& region, const ConvexPolytope& tile,
                 const std::optional<GridSpec>& grid = std::nullopt);

enum class CoverStatus { Verified, Counterexample, Unresolved };

struct CoverCheck {
  CoverStatus status;
  std::optional<Point> counterexample;
  // Edge length of the smallest box examined; boxes finer than this were
  // not explored, so Unresolved means "not decided at this resolution".
  Rational tolerance;
};

CoverCheck verify_cover(const Cover& cover, int max_depth = 12);

struct CoveringBounds {
  Integer lower;              // ceil(vol region / vol tile)
  Integer constructive_upper; // translates used by tile_cover
  double rz_upper;            // volume-ratio bound scaled by rz_factor
};

CoveringBounds covering_bounds(const ConvexPolytope& region,
                               const ConvexPolytope& tile);

// n ln n + ln ln n + 5 n, natural logarithms.
double rz_factor(int dimension);

}  // namespace homothets

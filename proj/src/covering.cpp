#include "homothets/covering.hpp"

#include <cmath>
#include <stdexcept>

#include "homothets/lp.hpp"

namespace homothets {

namespace {

Rational rat(const Integer& z) { return Rational(z); }

void require_body(const ConvexPolytope& p, const char* what) {
  if (!p.is_body())
    throw std::invalid_argument(std::string(what) +
                                " must be a full-dimensional body");
}

Point box_corner(const Box& box, unsigned mask) {
  const int n = box.lo.dimension();
  Point c(std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k)
    c[k] = (mask >> k & 1u) ? box.hi[k] : box.lo[k];
  return c;
}

// x in box and x in region, as LP rows over free coordinates.
LinearProgram box_region_program(const ConvexPolytope& region, const Box& box) {
  const int n = region.dimension();
  LinearProgram lp(n);
  for (const auto& h : region.facets()) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(k)] = rat(h.normal[static_cast<std::size_t>(k)]);
    lp.add_le(std::move(row), h.offset);
  }
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> up(static_cast<std::size_t>(n), 0), dn(static_cast<std::size_t>(n), 0);
    up[static_cast<std::size_t>(k)] = 1;
    dn[static_cast<std::size_t>(k)] = -1;
    lp.add_le(std::move(up), box.hi[k]);
    lp.add_le(std::move(dn), -box.lo[k]);
  }
  return lp;
}

std::optional<Point> box_region_witness(const ConvexPolytope& region,
                                        const Box& box) {
  const LpResult res = lp_solve(box_region_program(region, box));
  if (!res.ok()) return std::nullopt;
  return Point(res.witness);
}

// Whole cell inside tile + t, by corner containment.
bool corners_in_tile(const Box& box, const ConvexPolytope& tile,
                     const Point& t) {
  const unsigned corners = 1u << box.lo.dimension();
  for (unsigned m = 0; m < corners; ++m)
    if (!contains_point(tile, box_corner(box, m) - t)) return false;
  return true;
}

// cell-intersect-region inside tile + t: every tile facet inequality holds
// at the exact maximum over the clipped cell.
bool clipped_in_tile(const ConvexPolytope& region, const Box& box,
                     const ConvexPolytope& tile, const Point& t) {
  const int n = region.dimension();
  for (const auto& h : tile.facets()) {
    LinearProgram lp = box_region_program(region, box);
    std::vector<Rational> obj(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) obj[static_cast<std::size_t>(k)] = rat(h.normal[static_cast<std::size_t>(k)]);
    lp.set_objective(obj);
    const LpResult res = lp_solve(lp);
    if (res.status == LpResult::Status::Infeasible) return true;
    if (res.status != LpResult::Status::Optimal) return false;
    Rational shift = 0;
    for (int k = 0; k < n; ++k) shift += obj[static_cast<std::size_t>(k)] * t[k];
    if (res.objective_value > h.offset + shift) return false;
  }
  return true;
}

}  // namespace

InscribedCube largest_inscribed_cube(const ConvexPolytope& body) {
  require_body(body, "inscribed-cube target");
  const int n = body.dimension();
  LinearProgram lp(n + 1);
  lp.nonneg.assign(static_cast<std::size_t>(n + 1), 0);
  lp.nonneg[static_cast<std::size_t>(n)] = 1;  // half-side
  for (const auto& h : body.facets()) {
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    Rational l1 = 0;
    for (int k = 0; k < n; ++k) {
      row[static_cast<std::size_t>(k)] = rat(h.normal[static_cast<std::size_t>(k)]);
      l1 += rat(abs(h.normal[static_cast<std::size_t>(k)]));
    }
    row[static_cast<std::size_t>(n)] = l1;
    lp.add_le(std::move(row), h.offset);
  }
  std::vector<Rational> obj(static_cast<std::size_t>(n + 1), 0);
  obj[static_cast<std::size_t>(n)] = 1;
  lp.set_objective(obj);
  const LpResult res = lp_solve(lp);
  if (res.status != LpResult::Status::Optimal || res.objective_value <= 0)
    throw std::logic_error("inscribed cube of a body must have positive size");
  InscribedCube cube;
  cube.center = Point(std::vector<Rational>(res.witness.begin(),
                                            res.witness.begin() + n));
  cube.half_side = res.objective_value;
  return cube;
}

Cover tile_cover(const ConvexPolytope& region, const ConvexPolytope& tile,
                 const std::optional<GridSpec>& grid) {
  require_body(region, "cover region");
  require_body(tile, "cover tile");
  if (region.dimension() != tile.dimension())
    throw std::invalid_argument("region/tile dimension mismatch");
  const int n = region.dimension();

  Cover cover;
  cover.region = region;
  cover.tile = tile;
  const auto bbox = bounding_box(region);

  // One translate may suffice: t works exactly when every tile facet,
  // shifted by <normal, t>, dominates its supremum over the region.
  {
    LinearProgram lp(n);
    for (const auto& h : tile.facets()) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      Point normal(std::vector<Rational>(static_cast<std::size_t>(n)));
      for (int k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(k)] = -rat(h.normal[static_cast<std::size_t>(k)]);
        normal[k] = rat(h.normal[static_cast<std::size_t>(k)]);
      }
      lp.add_le(std::move(row), h.offset - support(region, normal));
    }
    const LpResult res = lp_solve(lp);
    if (res.ok()) {
      cover.translations.push_back(Point(res.witness));
      cover.cells.push_back({Box{bbox.first, bbox.second}, 0, true});
      return cover;
    }
  }

  const InscribedCube cube = largest_inscribed_cube(tile);
  Rational step = 2 * cube.half_side;
  Point origin = bbox.first;
  if (grid) {
    if (grid->step <= 0 || grid->step > step)
      throw std::invalid_argument("grid step must fit inside the tile");
    step = grid->step;
    origin = grid->origin;
  }

  std::vector<long long> idx_lo(static_cast<std::size_t>(n)), idx_hi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Rational lo_off = (bbox.first[k] - origin[k]) / step;
    const Rational hi_off = (bbox.second[k] - origin[k]) / step;
    idx_lo[static_cast<std::size_t>(k)] =
        floor_div(numerator(lo_off), denominator(lo_off)).convert_to<long long>();
    idx_hi[static_cast<std::size_t>(k)] = (rational_ceil(hi_off) - 1).convert_to<long long>();
    if (idx_hi[static_cast<std::size_t>(k)] < idx_lo[static_cast<std::size_t>(k)]) idx_hi[static_cast<std::size_t>(k)] = idx_lo[static_cast<std::size_t>(k)];
  }

  struct CellInfo {
    Box box;
    int tile_index;
    bool clipped;
  };
  std::vector<CellInfo> cells;

  std::vector<long long> idx(idx_lo);
  while (true) {
    Box cell{Point(std::vector<Rational>(static_cast<std::size_t>(n))),
             Point(std::vector<Rational>(static_cast<std::size_t>(n)))};
    for (int k = 0; k < n; ++k) {
      cell.lo[k] = origin[k] + Rational(idx[static_cast<std::size_t>(k)]) * step;
      cell.hi[k] = cell.lo[k] + step;
    }
    if (box_region_witness(region, cell).has_value()) {
      int assigned = -1;
      bool clipped = false;
      for (std::size_t t = 0; t < cover.translations.size() && assigned < 0; ++t)
        if (corners_in_tile(cell, tile, cover.translations[t]))
          assigned = static_cast<int>(t);
      for (std::size_t t = 0; t < cover.translations.size() && assigned < 0; ++t)
        if (clipped_in_tile(region, cell, tile, cover.translations[t])) {
          assigned = static_cast<int>(t);
          clipped = true;
        }
      if (assigned < 0) {
        // Natural tile: place the inscribed cube exactly onto this cell.
        Point t(std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int k = 0; k < n; ++k)
          t[k] = cell.lo[k] + step / 2 - cube.center[k];
        assigned = static_cast<int>(cover.translations.size());
        cover.translations.push_back(std::move(t));
      }
      cells.push_back({cell, assigned, clipped});
    }
    int axis = n - 1;
    while (axis >= 0 && idx[static_cast<std::size_t>(axis)] == idx_hi[static_cast<std::size_t>(axis)]) {
      idx[static_cast<std::size_t>(axis)] = idx_lo[static_cast<std::size_t>(axis)];
      --axis;
    }
    if (axis < 0) break;
    ++idx[static_cast<std::size_t>(axis)];
  }

  // Drop tiles whose cells all fit elsewhere; scan newest first.
  std::vector<char> kept(cover.translations.size(), 1);
  for (int cand = static_cast<int>(cover.translations.size()) - 1; cand >= 0;
       --cand) {
    std::vector<std::pair<std::size_t, std::pair<int, bool>>> moves;
    bool removable = true;
    for (std::size_t ci = 0; ci < cells.size() && removable; ++ci) {
      if (cells[ci].tile_index != cand) continue;
      int alt = -1;
      bool clipped = false;
      for (std::size_t t = 0; t < cover.translations.size() && alt < 0; ++t) {
        if (!kept[t] || static_cast<int>(t) == cand) continue;
        if (corners_in_tile(cells[ci].box, tile, cover.translations[t]))
          alt = static_cast<int>(t);
      }
      for (std::size_t t = 0; t < cover.translations.size() && alt < 0; ++t) {
        if (!kept[t] || static_cast<int>(t) == cand) continue;
        if (clipped_in_tile(region, cells[ci].box, tile, cover.translations[t])) {
          alt = static_cast<int>(t);
          clipped = true;
        }
      }
      if (alt < 0)
        removable = false;
      else
        moves.push_back({ci, {alt, clipped}});
    }
    if (removable) {
      kept[static_cast<std::size_t>(cand)] = 0;
      for (const auto& mv : moves) {
        cells[mv.first].tile_index = mv.second.first;
        cells[mv.first].clipped = mv.second.second;
      }
    }
  }

  std::vector<int> remap(cover.translations.size(), -1);
  std::vector<Point> final_translations;
  for (std::size_t t = 0; t < cover.translations.size(); ++t)
    if (kept[t]) {
      remap[t] = static_cast<int>(final_translations.size());
      final_translations.push_back(cover.translations[t]);
    }
  cover.translations = std::move(final_translations);
  for (const auto& c : cells)
    cover.cells.push_back({c.box, remap[static_cast<std::size_t>(c.tile_index)], c.clipped});
  return cover;
}

namespace {

struct VerifyState {
  const ConvexPolytope* region;
  const ConvexPolytope* tile;
  const std::vector<Point>* translations;
  int max_depth;
  bool unresolved = false;
  std::optional<Point> counterexample;
};

// Returns false once a counterexample is found, to stop the search.
bool verify_box(VerifyState& st, const Box& box, int depth) {
  const auto witness = box_region_witness(*st.region, box);
  if (!witness.has_value()) return true;  // nothing of the region here

  for (const auto& t : *st.translations)
    if (corners_in_tile(box, *st.tile, t)) return true;
  for (const auto& t : *st.translations)
    if (clipped_in_tile(*st.region, box, *st.tile, t)) return true;

  if (depth >= st.max_depth) {
    bool hit = false;
    for (const auto& t : *st.translations)
      if (contains_point(*st.tile, *witness - t)) {
        hit = true;
        break;
      }
    if (!hit) {
      st.counterexample = witness;
      return false;
    }
    st.unresolved = true;
    return true;
  }

  const int n = box.lo.dimension();
  const unsigned children = 1u << n;
  for (unsigned m = 0; m < children; ++m) {
    Box child = box;
    for (int k = 0; k < n; ++k) {
      const Rational mid = (box.lo[k] + box.hi[k]) / 2;
      if (m >> k & 1u)
        child.lo[k] = mid;
      else
        child.hi[k] = mid;
    }
    if (!verify_box(st, child, depth + 1)) return false;
  }
  return true;
}

}  // namespace

CoverCheck verify_cover(const Cover& cover, int max_depth) {
  require_body(cover.region, "cover region");
  require_body(cover.tile, "cover tile");
  if (max_depth < 0) throw std::invalid_argument("depth must be nonnegative");

  const auto bbox = bounding_box(cover.region);
  Rational extent = 0;
  for (int k = 0; k < cover.region.dimension(); ++k)
    extent = std::max(extent, Rational(bbox.second[k] - bbox.first[k]));
  Rational tolerance = extent;
  for (int d = 0; d < max_depth; ++d) tolerance /= 2;

  VerifyState st{&cover.region, &cover.tile, &cover.translations, max_depth,
                 false, std::nullopt};
  verify_box(st, Box{bbox.first, bbox.second}, 0);

  CoverCheck check;
  check.tolerance = tolerance;
  if (st.counterexample) {
    check.status = CoverStatus::Counterexample;
    check.counterexample = st.counterexample;
  } else if (st.unresolved) {
    check.status = CoverStatus::Unresolved;
  } else {
    check.status = CoverStatus::Verified;
  }
  return check;
}

CoveringBounds covering_bounds(const ConvexPolytope& region,
                               const ConvexPolytope& tile) {
  require_body(region, "cover region");
  require_body(tile, "cover tile");
  const Rational vol_ratio = volume(region) / volume(tile);
  CoveringBounds bounds;
  bounds.lower = rational_ceil(vol_ratio);
  bounds.constructive_upper =
      Integer(tile_cover(region, tile).translations.size());
  const Rational difference_ratio =
      volume(minkowski_sum(region, reflect(tile))) / volume(tile);
  bounds.rz_upper = to_double(difference_ratio) * rz_factor(region.dimension());
  return bounds;
}

double rz_factor(int dimension) {
  if (dimension < 2) throw std::invalid_argument("dimension must be at least 2");
  const double n = dimension;
  return n * std::log(n) + std::log(std::log(n)) + 5.0 * n;
}

}  // namespace homothets

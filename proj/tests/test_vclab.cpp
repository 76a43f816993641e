#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "homothets/generator.hpp"
#include "homothets/vclab.hpp"

using namespace homothets;

namespace {

ConvexPolytope unit_square() {
  return convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
}

ConvexPolytope unit_triangle() {
  return convex_hull({{0, 0}, {1, 0}, {0, 1}}, 2);
}

// Membership of ground point u_m in member n - 1, decided by the tangent
// functional of the paraboloid. The member is hull - v_n, so u_m belongs to
// it exactly when the lifted point u_m + v_n belongs to the hull. Every hull
// vertex sits on z = x^2 + y^2; for a lifted point q at (a, b) the functional
// f(p) = p_z - 2a p_x - 2b p_y satisfies f(p) - f(q) = (p_x-a)^2 + (p_y-b)^2
// on the paraboloid, so q is in the hull only if it is itself a vertex.
bool oracle_member_has_ground(const ParaboloidInstance& inst, int n, int m) {
  const Point& u = inst.ground[static_cast<std::size_t>(m - 1)];
  const Point v_n{0, Rational(1, n), Rational(1, static_cast<long>(n) * n)};
  const Point lifted = u + v_n;
  for (const auto& g : inst.hull.vertices())
    if (g == lifted) return true;
  // Not a vertex: certify exclusion by the tangent plane at (a, b).
  const Rational a = lifted[0];
  const Rational b = lifted[1];
  Rational best_gap;
  bool first = true;
  for (const auto& g : inst.hull.vertices()) {
    const Rational gap = (g[2] - 2 * a * g[0] - 2 * b * g[1]) -
                         (lifted[2] - 2 * a * lifted[0] - 2 * b * lifted[1]);
    if (first || gap < best_gap) {
      best_gap = gap;
      first = false;
    }
  }
  // Strictly positive gap for every vertex means a strict separation.
  REQUIRE(!first);
  REQUIRE(best_gap > 0);
  return false;
}

}  // namespace

TEST_CASE("smallest paraboloid instance is fully explicit") {
  const auto inst = build_paraboloid(1);
  CHECK(inst.scale == 1);
  REQUIRE(inst.pairs.size() == 1);
  CHECK(inst.pairs[0] == std::pair<int, int>{1, 2});
  REQUIRE(inst.generators.size() == 1);
  CHECK(inst.generators[0] == Point{1, Rational(1, 2), Rational(5, 4)});
  CHECK(inst.hull.affine_dimension() == 0);
  CHECK(inst.family.size() == 2);
  REQUIRE(inst.ground.size() == 1);
  CHECK(inst.ground[0] == Point{1, 0, 1});
  CHECK(verify_paraboloid(inst));
}

TEST_CASE("two-bit paraboloid instance freezes its generator list") {
  const auto inst = build_paraboloid(2);
  const std::vector<std::pair<int, int>> pairs = {{1, 2}, {2, 3}, {1, 4}, {2, 4}};
  CHECK(inst.pairs == pairs);
  REQUIRE(inst.generators.size() == 4);
  CHECK(inst.generators[0] == Point{1, Rational(1, 2), Rational(5, 4)});
  CHECK(inst.generators[1] == Point{Rational(1, 2), Rational(1, 3), Rational(13, 36)});
  CHECK(inst.generators[2] == Point{1, Rational(1, 4), Rational(17, 16)});
  CHECK(inst.generators[3] == Point{Rational(1, 2), Rational(1, 4), Rational(5, 16)});
  CHECK(inst.family.size() == 4);
  CHECK(verify_paraboloid(inst));
}

TEST_CASE("pair counts follow the bit pattern census") {
  for (int scale = 1; scale <= 4; ++scale) {
    const auto inst = build_paraboloid(scale);
    CHECK(static_cast<long long>(inst.pairs.size()) ==
          static_cast<long long>(scale) * (1LL << (scale - 1)));
    CHECK(inst.family.size() == (1 << scale));
    CHECK(static_cast<int>(inst.ground.size()) == scale);
  }
  CHECK_THROWS_AS(build_paraboloid(0), std::invalid_argument);
  CHECK_THROWS_AS(build_paraboloid(9), std::invalid_argument);
}

TEST_CASE("membership bits agree with the tangent-plane oracle") {
  const auto inst = build_paraboloid(3);
  REQUIRE(verify_paraboloid(inst));
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 3; ++m) {
      const bool expected = ((n - 1) >> (m - 1) & 1) != 0;
      CHECK(oracle_member_has_ground(inst, n, m) == expected);
      CHECK(contains_point_lp(inst.family.realized(n - 1),
                              inst.ground[static_cast<std::size_t>(m - 1)]) == expected);
    }
}

TEST_CASE("the translate family shatters its ground points by identity") {
  for (int scale = 1; scale <= 3; ++scale) {
    const auto inst = build_paraboloid(scale);
    const auto check = shatters(inst.family, inst.ground);
    REQUIRE(check.shattered);
    for (std::size_t mask = 0; mask < check.witness_member.size(); ++mask)
      CHECK(check.witness_member[mask] == static_cast<int>(mask));
  }
}

TEST_CASE("shatter check fails when a pattern is missing") {
  // Nested squares can never produce the pattern {inner only}.
  HomothetFamily nested(unit_square(),
                        {{1, Point{0, 0}}, {3, Point{-1, -1}}});
  const std::vector<Point> pts = {Point{Rational(1, 2), Rational(1, 2)},
                                  Point{Rational(-1, 2), Rational(-1, 2)}};
  const auto check = shatters(nested, pts);
  CHECK(!check.shattered);
  CHECK(check.witness_member[1] >= 0);  // both squares cover point 0
  CHECK(check.witness_member[2] < 0);   // point 1 only, impossible here

  std::vector<Point> too_many(21, Point{0, 0});
  CHECK_THROWS_AS(shatters(nested, too_many), CapExceededError);
}

TEST_CASE("homothet fitting separates includes from excludes") {
  const auto body = unit_square();
  const auto fit = fit_homothet(body, {Point{0, 0}, Point{2, 0}},
                                {Point{1, 5}}, 64, 4242);
  CHECK(!fit.impossible);
  REQUIRE(fit.homothety.has_value());
  const auto placed = apply_homothety(body, *fit.homothety);
  CHECK(contains_point(placed, Point{0, 0}));
  CHECK(contains_point(placed, Point{2, 0}));
  CHECK(!contains_point(placed, Point{1, 5}));
  CHECK(contains_point_lp(placed, Point{0, 0}));
  CHECK(!contains_point_lp(placed, Point{1, 5}));
}

TEST_CASE("fitting is impossible when an exclude sits among the includes") {
  const auto body = unit_square();
  const auto fit = fit_homothet(
      body, {Point{0, 0}, Point{2, 0}, Point{0, 2}, Point{2, 2}},
      {Point{1, 1}}, 16, 7);
  CHECK(fit.impossible);
  CHECK(!fit.homothety.has_value());

  // A point on the segment between two includes is just as hopeless.
  const auto seg = fit_homothet(body, {Point{0, 0}, Point{2, 2}},
                                {Point{1, 1}}, 16, 7);
  CHECK(seg.impossible);
}

TEST_CASE("empty include list is satisfied by sliding far away") {
  const auto fit = fit_homothet(unit_square(), {},
                                {Point{0, 0}, Point{5, 5}}, 8, 99);
  CHECK(!fit.impossible);
  REQUIRE(fit.homothety.has_value());
  const auto placed = apply_homothety(unit_square(), *fit.homothety);
  CHECK(!contains_point(placed, Point{0, 0}));
  CHECK(!contains_point(placed, Point{5, 5}));
}

TEST_CASE("unfittable but not convexity-blocked requests fail honestly") {
  // Any axis-aligned square whose x and y ranges reach both 0 and 2
  // contains (0, 2); the exclude is outside conv(include) yet unfittable.
  const auto fit = fit_homothet(unit_square(), {Point{0, 0}, Point{2, 2}},
                                {Point{0, 2}}, 24, 11);
  CHECK(!fit.impossible);
  CHECK(!fit.homothety.has_value());
  CHECK(fit.trials_used == 24);
}

TEST_CASE("four-point search keeps clean books and finds nothing") {
  const auto report = search_four_points_2d(unit_square(), 300, 1001);
  CHECK(!report.counterexample.has_value());
  const auto& s = report.stats;
  CHECK(s.quadruples == 300);
  CHECK(s.degenerate + s.enclosed + s.convex_position == s.quadruples);
  CHECK(s.both_float <= s.first_float);
  CHECK(s.first_float <= s.convex_position);
  CHECK(s.exact_refuted == s.both_float);
  CHECK(s.convex_position > 0);

  const auto again = search_four_points_2d(unit_square(), 300, 1001);
  CHECK(again.stats.quadruples == s.quadruples);
  CHECK(again.stats.degenerate == s.degenerate);
  CHECK(again.stats.enclosed == s.enclosed);
  CHECK(again.stats.convex_position == s.convex_position);
  CHECK(again.stats.first_float == s.first_float);
  CHECK(again.stats.both_float == s.both_float);
  CHECK(again.stats.exact_refuted == s.exact_refuted);

  const auto tri = search_four_points_2d(unit_triangle(), 200, 77);
  CHECK(!tri.counterexample.has_value());
  CHECK(tri.stats.quadruples == 200);

  CHECK_THROWS_AS(search_four_points_2d(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3), 10, 1),
                  std::invalid_argument);
}

TEST_CASE("triangle vertices are strictly antipodal, square vertices are not") {
  const auto body = unit_triangle();
  const auto& verts = body.vertices();
  const auto tri = is_strictly_antipodal(verts);
  CHECK(tri.strictly_antipodal);
  REQUIRE(tri.witnesses.size() == 3);
  for (const auto& w : tri.witnesses) {
    // Strictness re-checked by brute force over the vertex dots.
    const Rational hi = dot(w.direction, verts[static_cast<std::size_t>(w.first)]);
    const Rational lo = dot(w.direction, verts[static_cast<std::size_t>(w.second)]);
    CHECK(hi > lo);
    for (int v = 0; v < 3; ++v) {
      const Rational d = dot(w.direction, verts[static_cast<std::size_t>(v)]);
      if (v != w.first) CHECK(d < hi);
      if (v != w.second) CHECK(d > lo);
    }
  }

  const auto sq = is_strictly_antipodal(unit_square().vertices());
  CHECK(!sq.strictly_antipodal);
  CHECK(sq.failing_pair == std::pair<int, int>{0, 1});
  CHECK(sq.witnesses.empty());

  const auto line = is_strictly_antipodal({Point{0, 0}, Point{1, 0}, Point{2, 0}});
  CHECK(!line.strictly_antipodal);
  CHECK(line.failing_pair == std::pair<int, int>{0, 1});

  CHECK_THROWS_AS(is_strictly_antipodal({Point{0, 0}}), std::invalid_argument);
}

TEST_CASE("triangle translates by their own vertices touch pairwise") {
  const auto report = build_touching_family(unit_triangle());
  REQUIRE(report.has_value());
  const auto& fam = report->family;
  CHECK(fam.size() == 3);
  REQUIRE(report->touch_points.size() == 3);
  // Vertices sort to (0,0), (0,1), (1,0); touch points are pair sums.
  CHECK(report->touch_points[0] == Point{0, 1});
  CHECK(report->touch_points[1] == Point{1, 0});
  CHECK(report->touch_points[2] == Point{1, 1});

  for (std::size_t k = 0; k < report->witnesses.size(); ++k) {
    const auto& w = report->witnesses[k];
    const Point& touch = report->touch_points[k];
    CHECK(contains_point(fam.realized(w.first), touch));
    CHECK(contains_point(fam.realized(w.second), touch));
    for (int other = 0; other < fam.size(); ++other)
      if (other != w.first && other != w.second)
        CHECK(!contains_point(fam.realized(other), touch));
    // The pair intersection is a single point, so any witness the
    // intersection test returns must be the touch point itself.
    const auto meet = intersects(fam.realized(w.first), fam.realized(w.second));
    REQUIRE(meet.has_value());
    CHECK(*meet == touch);
  }

  CHECK(exact_independence(fam, 15).indices.size() == 1);
  CHECK(exact_transversal(fam, 15).points.size() == 2);

  CHECK(!build_touching_family(unit_square()).has_value());
}

TEST_CASE("dual shatter patterns of overlapping and nested squares") {
  HomothetFamily overlapping(unit_square(),
                             {{1, Point{0, 0}},
                              {1, Point{Rational(1, 2), Rational(1, 2)}}});
  const std::vector<Point> samples = {
      Point{Rational(1, 4), Rational(1, 4)},
      Point{Rational(3, 4), Rational(3, 4)},
      Point{Rational(5, 4), Rational(5, 4)},
      Point{3, 3}};
  const auto report = dual_shatter_lower(overlapping, 2, samples);
  CHECK(report.subset_size == 2);
  CHECK(report.max_cells == 4);
  CHECK(report.best_subset == std::vector<int>{0, 1});
  for (std::size_t mask = 0; mask < report.cell_witness.size(); ++mask) {
    const int s = report.cell_witness[mask];
    REQUIRE(s >= 0);
    // Re-derive the pattern of the witness sample exactly.
    unsigned seen = 0;
    for (std::size_t j = 0; j < report.best_subset.size(); ++j)
      if (contains_point(
              overlapping.realized(report.best_subset[j]),
              samples[static_cast<std::size_t>(s)]))
        seen |= 1u << j;
    CHECK(seen == mask);
  }

  HomothetFamily nested(unit_square(), {{1, Point{0, 0}}, {3, Point{-1, -1}}});
  const auto nested_report = dual_shatter_lower(nested, 2, samples);
  CHECK(nested_report.max_cells == 3);  // {inner only} cannot happen

  CHECK_THROWS_AS(dual_shatter_lower(nested, 0, samples), std::invalid_argument);
  CHECK_THROWS_AS(dual_shatter_lower(nested, 3, samples), std::invalid_argument);
  CHECK_THROWS_AS(dual_shatter_lower(nested, 2, {}), std::invalid_argument);
}

TEST_CASE("paraboloid dual samples realize the full quadratic cell count") {
  const auto inst = build_paraboloid(3);
  const auto samples = paraboloid_dual_samples(inst);
  CHECK(!samples.empty());
  const auto report = dual_shatter_lower(inst.family, 2, samples);
  CHECK(report.max_cells == 4);  // every two-member pattern appears
  CHECK(report.max_cells <= 8);  // stays under the 2^(k+1) ceiling
}

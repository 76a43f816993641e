#include "homothets/json_io.hpp"

namespace homothets {

Json rational_to_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be a string or integer");
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (int k = 0; k < p.dimension(); ++k) arr.push_back(rational_to_json(p[k]));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("point must be a nonempty array");
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Point(std::move(coords));
}

Json polytope_to_json(const ConvexPolytope& p) {
  Json j;
  j["dimension"] = p.dimension();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
  j["vertices"] = verts;
  return j;
}

ConvexPolytope polytope_from_json(const Json& j) {
  const int dim = j.at("dimension").get<int>();
  std::vector<Point> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(point_from_json(v));
  return convex_hull(pts, dim);
}

Json homothety_to_json(const Homothety& h) {
  Json j;
  j["ratio"] = rational_to_json(h.ratio());
  j["translation"] = point_to_json(h.translation());
  return j;
}

Homothety homothety_from_json(const Json& j) {
  return Homothety(rational_from_json(j.at("ratio")),
                   point_from_json(j.at("translation")));
}

Json family_to_json(const HomothetFamily& f) {
  Json j;
  j["dimension"] = f.dimension();
  j["body"] = polytope_to_json(f.base());
  Json members = Json::array();
  for (const auto& m : f.members()) {
    Json mj;
    mj["ratio"] = rational_to_json(m.ratio);
    mj["center"] = point_to_json(m.center);
    members.push_back(mj);
  }
  j["members"] = members;
  return j;
}

HomothetFamily family_from_json(const Json& j) {
  ConvexPolytope base = polytope_from_json(j.at("body"));
  if (j.contains("dimension") &&
      j.at("dimension").get<int>() != base.dimension())
    throw std::invalid_argument("family dimension disagrees with body");
  std::vector<FamilyMember> members;
  for (const auto& mj : j.at("members")) {
    FamilyMember m;
    m.ratio = rational_from_json(mj.at("ratio"));
    m.center = point_from_json(mj.at("center"));
    members.push_back(std::move(m));
  }
  return HomothetFamily(std::move(base), std::move(members));
}

Json independence_to_json(const IndependenceCertificate& c) {
  Json j;
  j["indices"] = c.indices;
  return j;
}

Json transversal_to_json(const TransversalCertificate& c) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  j["points"] = pts;
  j["assignment"] = c.assignment;
  return j;
}

Json greedy_transversal_to_json(const GreedyTransversal& g) {
  Json j;
  j["certificate"] = transversal_to_json(g.certificate);
  j["representatives"] = independence_to_json(g.representatives);
  Json groups = Json::array();
  for (const auto& grp : g.groups) {
    Json gj;
    gj["representative"] = grp.representative;
    gj["representativeRatio"] = rational_to_json(grp.representative_ratio);
    gj["members"] = grp.members;
    Json ts = Json::array();
    for (const auto& t : grp.translations) ts.push_back(point_to_json(t));
    gj["translations"] = ts;
    groups.push_back(gj);
  }
  j["groups"] = groups;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["memberCount"] = r.member_count;
  j["symmetric"] = r.symmetric;
  j["volRatio"] = rational_to_json(r.vol_ratio);
  j["rzFactor"] = r.rz;
  j["symmetricCap"] = r.symmetric_cap.convert_to<long long>();
  j["generalCap"] = r.general_cap.convert_to<long long>();
  j["nuGreedy"] = r.nu_greedy;
  j["tauGreedy"] = r.tau_greedy;
  j["nuExact"] = r.nu_exact ? Json(*r.nu_exact) : Json(nullptr);
  j["tauExact"] = r.tau_exact ? Json(*r.tau_exact) : Json(nullptr);
  j["capExceeded"] = r.cap_exceeded;
  return j;
}

Json cover_to_json(const Cover& c) {
  Json j;
  j["region"] = polytope_to_json(c.region);
  j["tile"] = polytope_to_json(c.tile);
  Json ts = Json::array();
  for (const auto& t : c.translations) ts.push_back(point_to_json(t));
  j["translations"] = ts;
  Json cells = Json::array();
  for (const auto& cell : c.cells) {
    Json cj;
    cj["lo"] = point_to_json(cell.cell.lo);
    cj["hi"] = point_to_json(cell.cell.hi);
    cj["tile"] = cell.tile_index;
    cj["clipped"] = cell.clipped;
    cells.push_back(cj);
  }
  j["cells"] = cells;
  return j;
}

Json cover_check_to_json(const CoverCheck& c) {
  Json j;
  switch (c.status) {
    case CoverStatus::Verified: j["status"] = "verified"; break;
    case CoverStatus::Counterexample: j["status"] = "counterexample"; break;
    case CoverStatus::Unresolved: j["status"] = "unresolved"; break;
  }
  j["counterexample"] =
      c.counterexample ? point_to_json(*c.counterexample) : Json(nullptr);
  j["tolerance"] = rational_to_json(c.tolerance);
  return j;
}

Json covering_bounds_to_json(const CoveringBounds& b) {
  Json j;
  j["lower"] = b.lower.convert_to<long long>();
  j["constructiveUpper"] = b.constructive_upper.convert_to<long long>();
  j["rzUpper"] = b.rz_upper;
  return j;
}

Json shatter_to_json(const ShatterCheck& s) {
  Json j;
  j["shattered"] = s.shattered;
  j["witnessMember"] = s.witness_member;
  return j;
}

Json four_point_to_json(const FourPointReport& r) {
  Json j;
  Json stats;
  stats["quadruples"] = r.stats.quadruples;
  stats["degenerate"] = r.stats.degenerate;
  stats["enclosed"] = r.stats.enclosed;
  stats["convexPosition"] = r.stats.convex_position;
  stats["firstFloat"] = r.stats.first_float;
  stats["bothFloat"] = r.stats.both_float;
  stats["exactRefuted"] = r.stats.exact_refuted;
  j["stats"] = stats;
  if (r.counterexample) {
    Json cj;
    Json pts = Json::array();
    for (const auto& p : r.counterexample->points)
      pts.push_back(point_to_json(p));
    cj["points"] = pts;
    cj["first"] = homothety_to_json(r.counterexample->first);
    cj["second"] = homothety_to_json(r.counterexample->second);
    j["counterexample"] = cj;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json antipodal_to_json(const AntipodalReport& r) {
  Json j;
  j["strictlyAntipodal"] = r.strictly_antipodal;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["first"] = w.first;
    wj["second"] = w.second;
    wj["direction"] = point_to_json(w.direction);
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  j["failingPair"] = r.strictly_antipodal
                         ? Json(nullptr)
                         : Json({r.failing_pair.first, r.failing_pair.second});
  return j;
}

Json touching_to_json(const TouchingFamilyReport& r) {
  Json j;
  j["family"] = family_to_json(r.family);
  Json ts = Json::array();
  for (const auto& t : r.touch_points) ts.push_back(point_to_json(t));
  j["touchPoints"] = ts;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["first"] = w.first;
    wj["second"] = w.second;
    wj["direction"] = point_to_json(w.direction);
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return j;
}

Json dual_shatter_to_json(const DualShatterReport& r) {
  Json j;
  j["subsetSize"] = r.subset_size;
  j["maxCells"] = r.max_cells;
  j["bestSubset"] = r.best_subset;
  j["cellWitness"] = r.cell_witness;
  return j;
}

Json paraboloid_to_json(const ParaboloidInstance& p) {
  Json j;
  j["scale"] = p.scale;
  Json pairs = Json::array();
  for (const auto& pr : p.pairs) pairs.push_back({pr.first, pr.second});
  j["pairs"] = pairs;
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(point_to_json(g));
  j["generators"] = gens;
  j["hull"] = polytope_to_json(p.hull);
  j["family"] = family_to_json(p.family);
  Json ground = Json::array();
  for (const auto& g : p.ground) ground.push_back(point_to_json(g));
  j["ground"] = ground;
  return j;
}

}  // namespace homothets

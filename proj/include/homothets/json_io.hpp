#pragma once

#include <json.hpp>

#include "homothets/covering.hpp"
#include "homothets/family.hpp"
#include "homothets/generator.hpp"
#include "homothets/homothety.hpp"
#include "homothets/vclab.hpp"

namespace homothets {

// Keys are emitted in sorted order (nlohmann's default object backing), so
// serializations of equal values are byte-identical.
using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // "p/q" string or integer

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json polytope_to_json(const ConvexPolytope& p);
// Rebuilds through the hull constructor, so input vertex lists are
// validated and canonicalized rather than trusted.
ConvexPolytope polytope_from_json(const Json& j);

Json homothety_to_json(const Homothety& h);
Homothety homothety_from_json(const Json& j);

Json family_to_json(const HomothetFamily& f);
HomothetFamily family_from_json(const Json& j);

Json independence_to_json(const IndependenceCertificate& c);
Json transversal_to_json(const TransversalCertificate& c);
Json greedy_transversal_to_json(const GreedyTransversal& g);
Json bound_report_to_json(const BoundReport& r);

Json cover_to_json(const Cover& c);
Json cover_check_to_json(const CoverCheck& c);
Json covering_bounds_to_json(const CoveringBounds& b);

Json shatter_to_json(const ShatterCheck& s);
Json four_point_to_json(const FourPointReport& r);
Json antipodal_to_json(const AntipodalReport& r);
Json touching_to_json(const TouchingFamilyReport& r);
Json dual_shatter_to_json(const DualShatterReport& r);
Json paraboloid_to_json(const ParaboloidInstance& p);

}  // namespace homothets

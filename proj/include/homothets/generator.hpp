#pragma once

#include <cstdint>
#include <string>

#include "homothets/family.hpp"

namespace homothets {

enum class BodyKind { Square, Triangle, RegularGon, Cube, RandomHull };

struct BodySpec {
  BodyKind kind = BodyKind::Square;
  int dimension = 2;   // RandomHull only; Cube forces 3
  int parameter = 0;   // RegularGon: vertex count; RandomHull: sample count
  Rational scale = 1;
};

// square | triangle | cube | gon:<k> | random:<v> | random3:<v>, each with
// an optional trailing scale, e.g. "gon:8:3/2" or "square:2".
BodySpec parse_body_spec(const std::string& text);

ConvexPolytope make_body(const BodySpec& spec, std::uint64_t seed = 0);

struct InstanceSpec {
  BodySpec body;
  int member_count = 6;
  bool translates = true;  // false draws ratios from [1/2, 2]
  Rational spread = 3;     // centers land in [0, spread]^n
  std::uint64_t seed = 0;
};

HomothetFamily generate_family(const InstanceSpec& spec);

}  // namespace homothets

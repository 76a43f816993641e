#include "homothets/generator.hpp"

#include <cmath>

#include "homothets/rng.hpp"

namespace homothets {

namespace {

Point make_point(std::vector<Rational> c) { return Point(std::move(c)); }

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// Regular polygon vertices snapped to a fine dyadic grid. The snap must
// not destroy convex position; the hull pass below re-checks that.
std::vector<Point> gon_vertices(int count) {
  constexpr std::int64_t kDenom = 65536;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double angle = 2.0 * M_PI * i / count;
    const auto x = static_cast<std::int64_t>(std::llround(std::cos(angle) * kDenom));
    const auto y = static_cast<std::int64_t>(std::llround(std::sin(angle) * kDenom));
    pts.push_back(make_point({Rational(x, kDenom), Rational(y, kDenom)}));
  }
  return pts;
}

}  // namespace

BodySpec parse_body_spec(const std::string& text) {
  const auto parts = split_colon(text);
  BodySpec spec;
  std::size_t used = 1;
  if (parts[0] == "square") {
    spec.kind = BodyKind::Square;
  } else if (parts[0] == "triangle") {
    spec.kind = BodyKind::Triangle;
  } else if (parts[0] == "cube") {
    spec.kind = BodyKind::Cube;
    spec.dimension = 3;
  } else if (parts[0] == "gon") {
    spec.kind = BodyKind::RegularGon;
    if (parts.size() < 2)
      throw std::invalid_argument("gon needs a vertex count, e.g. gon:8");
    spec.parameter = std::stoi(parts[1]);
    if (spec.parameter < 3 || spec.parameter > 512)
      throw std::invalid_argument("gon vertex count must be in [3, 512]");
    used = 2;
  } else if (parts[0] == "random" || parts[0] == "random3") {
    spec.kind = BodyKind::RandomHull;
    spec.dimension = parts[0] == "random3" ? 3 : 2;
    if (parts.size() < 2)
      throw std::invalid_argument("random needs a point count, e.g. random:10");
    spec.parameter = std::stoi(parts[1]);
    if (spec.parameter < spec.dimension + 1 || spec.parameter > 4096)
      throw std::invalid_argument("random point count out of range");
    used = 2;
  } else {
    throw std::invalid_argument("unknown body kind: " + parts[0]);
  }
  if (parts.size() > used) {
    spec.scale = parse_rational(parts[used]);
    if (spec.scale <= 0)
      throw std::invalid_argument("body scale must be positive");
    ++used;
  }
  if (parts.size() > used)
    throw std::invalid_argument("trailing fields in body spec: " + text);
  return spec;
}

ConvexPolytope make_body(const BodySpec& spec, std::uint64_t seed) {
  ConvexPolytope body;
  switch (spec.kind) {
    case BodyKind::Square:
      body = convex_hull({make_point({0, 0}), make_point({1, 0}),
                          make_point({0, 1}), make_point({1, 1})},
                         2);
      break;
    case BodyKind::Triangle:
      body = convex_hull(
          {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})}, 2);
      break;
    case BodyKind::Cube: {
      std::vector<Point> pts;
      for (int m = 0; m < 8; ++m)
        pts.push_back(make_point({m & 1, m >> 1 & 1, m >> 2 & 1}));
      body = convex_hull(pts, 3);
      break;
    }
    case BodyKind::RegularGon: {
      body = convex_hull(gon_vertices(spec.parameter), 2);
      if (static_cast<int>(body.vertices().size()) != spec.parameter)
        throw std::logic_error("snapped polygon lost convex position");
      break;
    }
    case BodyKind::RandomHull: {
      constexpr std::int64_t kDenom = 4096;
      const int n = spec.dimension;
      for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(derive_seed(seed, 0x0b0d1ull + static_cast<std::uint64_t>(attempt)));
        std::vector<Point> pts;
        for (int i = 0; i < spec.parameter; ++i) {
          std::vector<Rational> c;
          for (int k = 0; k < n; ++k)
            c.push_back(Rational(static_cast<std::int64_t>(rng.below(kDenom + 1)), kDenom));
          pts.push_back(make_point(std::move(c)));
        }
        body = convex_hull(pts, n);
        if (body.is_body()) break;
      }
      if (!body.is_body())
        throw std::logic_error("random hull failed to span the space");
      break;
    }
  }
  if (spec.scale != 1) body = scale(body, spec.scale);
  return body;
}

HomothetFamily generate_family(const InstanceSpec& spec) {
  if (spec.member_count < 1)
    throw std::invalid_argument("family needs at least one member");
  if (spec.spread <= 0)
    throw std::invalid_argument("spread must be positive");
  const ConvexPolytope body = make_body(spec.body, spec.seed);
  const int n = body.dimension();

  // Centers on a dyadic grid inside [0, spread]^n.
  constexpr std::int64_t kDenom = 64;
  const Integer hi = rational_ceil(spec.spread * kDenom);
  Rng rng(derive_seed(spec.seed, 0xFA771ull));
  std::vector<FamilyMember> members;
  members.reserve(static_cast<std::size_t>(spec.member_count));
  for (int i = 0; i < spec.member_count; ++i) {
    FamilyMember m;
    m.ratio = spec.translates
                  ? Rational(1)
                  : Rational(8 + static_cast<std::int64_t>(rng.below(25)), 16);
    std::vector<Rational> c;
    for (int k = 0; k < n; ++k)
      c.push_back(Rational(
          static_cast<std::int64_t>(rng.below(hi.convert_to<std::uint64_t>() + 1)),
          kDenom));
    m.center = make_point(std::move(c));
    members.push_back(std::move(m));
  }
  return HomothetFamily(body, std::move(members));
}

}  // namespace homothets

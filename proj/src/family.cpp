#include "homothets/family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "homothets/covering.hpp"
#include "homothets/homothety.hpp"

namespace homothets {

namespace {

bool member_before(const HomothetFamily& fam, int a, int b) {
  const auto& ma = fam.members()[static_cast<std::size_t>(a)];
  const auto& mb = fam.members()[static_cast<std::size_t>(b)];
  if (ma.ratio != mb.ratio) return ma.ratio < mb.ratio;
  if (ma.center == mb.center) return a < b;
  return lex_less(ma.center, mb.center);
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Integer int_pow(int base, int exp) {
  Integer r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

HomothetFamily::HomothetFamily(ConvexPolytope base,
                               std::vector<FamilyMember> members)
    : base_(std::move(base)), members_(std::move(members)) {
  if (base_.empty())
    throw std::invalid_argument("family base must be nonempty");
  realized_.reserve(members_.size());
  for (const auto& m : members_) {
    if (m.ratio <= 0)
      throw std::invalid_argument("homothety ratio must be positive");
    if (m.center.dimension() != base_.dimension())
      throw std::invalid_argument("member center dimension mismatch");
    realized_.push_back(apply_homothety(base_, Homothety(m.ratio, m.center)));
  }
}

bool HomothetFamily::translates_only() const {
  for (std::size_t i = 1; i < members_.size(); ++i)
    if (members_[i].ratio != members_[0].ratio) return false;
  return true;
}

IntersectionGraph intersection_graph(const HomothetFamily& family) {
  IntersectionGraph g;
  g.size = family.size();
  g.adjacent.assign(static_cast<std::size_t>(g.size),
                    std::vector<char>(static_cast<std::size_t>(g.size), 0));
  for (int i = 0; i < g.size; ++i)
    for (int j = i + 1; j < g.size; ++j)
      if (intersects(family.realized(i), family.realized(j)).has_value()) {
        g.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        g.adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
      }
  return g;
}

bool validate_independence(const HomothetFamily& family,
                           const IndependenceCertificate& cert) {
  for (std::size_t a = 0; a < cert.indices.size(); ++a) {
    const int i = cert.indices[a];
    if (i < 0 || i >= family.size()) return false;
    for (std::size_t b = a + 1; b < cert.indices.size(); ++b) {
      const int j = cert.indices[b];
      if (j < 0 || j >= family.size() || i == j) return false;
      if (intersects(family.realized(i), family.realized(j)).has_value())
        return false;
    }
  }
  return true;
}

bool validate_transversal(const HomothetFamily& family,
                          const TransversalCertificate& cert) {
  if (static_cast<int>(cert.assignment.size()) != family.size()) return false;
  for (int i = 0; i < family.size(); ++i) {
    const int p = cert.assignment[static_cast<std::size_t>(i)];
    if (p < 0 || p >= static_cast<int>(cert.points.size())) return false;
    if (!contains_point(family.realized(i), cert.points[static_cast<std::size_t>(p)]))
      return false;
  }
  return true;
}

GreedyTransversal greedy_transversal(const HomothetFamily& family) {
  if (!family.base().is_body())
    throw std::invalid_argument("greedy transversal needs a body as base");
  GreedyTransversal out;
  out.certificate.assignment.assign(static_cast<std::size_t>(family.size()), -1);

  std::vector<int> remaining(static_cast<std::size_t>(family.size()));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::sort(remaining.begin(), remaining.end(),
            [&](int a, int b) { return member_before(family, a, b); });

  while (!remaining.empty()) {
    const int rep = remaining.front();
    const Rational ratio = family.members()[static_cast<std::size_t>(rep)].ratio;
    const ConvexPolytope& rep_body = family.realized(rep);

    std::vector<int> group;
    std::vector<Point> meet;  // witness point inside member and representative
    std::vector<int> rest;
    for (int i : remaining) {
      auto w = intersects(family.realized(i), rep_body);
      if (w.has_value()) {
        group.push_back(i);
        meet.push_back(*w);
      } else {
        rest.push_back(i);
      }
    }

    // Translates of ratio*base meeting the representative have their
    // offsets in this difference body; cover it by reflected tiles, and
    // each tile offset lands inside every member whose (shrunken) offset
    // its tile accounts for.
    const ConvexPolytope tile = reflect(scale(family.base(), ratio));
    const ConvexPolytope centers = minkowski_sum(rep_body, tile);
    const Cover cover = tile_cover(centers, tile);

    const int first_point = static_cast<int>(out.certificate.points.size());
    for (const auto& t : cover.translations)
      out.certificate.points.push_back(t);

    for (std::size_t g = 0; g < group.size(); ++g) {
      const int i = group[g];
      const Rational mu =
          ratio / family.members()[static_cast<std::size_t>(i)].ratio;
      ConvexPolytope shrunk =
          mu == 1 ? family.realized(i)
                  : apply_homothety(family.realized(i),
                                    Homothety(mu, (1 - mu) * meet[g]));
      int found = -1;
      for (std::size_t j = 0; j < cover.translations.size() && found < 0; ++j)
        if (contains_point(shrunk, cover.translations[j]))
          found = static_cast<int>(j);
      if (found < 0)
        throw std::logic_error("cover must hit every shrunken group member");
      out.certificate.assignment[static_cast<std::size_t>(i)] = first_point + found;
    }

    GreedyGroup record;
    record.representative = rep;
    record.representative_ratio = ratio;
    record.members = group;
    record.translations = cover.translations;
    out.groups.push_back(std::move(record));
    out.representatives.indices.push_back(rep);
    remaining = std::move(rest);
  }
  return out;
}

namespace {

std::vector<unsigned> adjacency_masks(const HomothetFamily& family) {
  const IntersectionGraph g = intersection_graph(family);
  std::vector<unsigned> adj(static_cast<std::size_t>(g.size), 0);
  for (int i = 0; i < g.size; ++i)
    for (int j = 0; j < g.size; ++j)
      if (g.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        adj[static_cast<std::size_t>(i)] |= 1u << j;
  return adj;
}

void best_independent(const std::vector<unsigned>& adj, unsigned candidates,
                      unsigned current, unsigned& best) {
  if (std::popcount(current) + std::popcount(candidates) <=
      std::popcount(best))
    return;
  if (candidates == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  const int v = std::countr_zero(candidates);
  best_independent(adj, candidates & ~adj[static_cast<std::size_t>(v)] & ~(1u << v),
                   current | (1u << v), best);
  best_independent(adj, candidates & ~(1u << v), current, best);
}

void require_cap(const HomothetFamily& family, int cap, const char* what) {
  if (family.size() > cap)
    throw CapExceededError(std::string(what) + ": family has " +
                           std::to_string(family.size()) +
                           " members, cap is " + std::to_string(cap));
}

}  // namespace

IndependenceCertificate exact_independence(const HomothetFamily& family,
                                           int cap) {
  require_cap(family, cap, "exact independence");
  const auto adj = adjacency_masks(family);
  unsigned best = 0;
  best_independent(adj, family.size() ? (1u << family.size()) - 1 : 0, 0, best);
  IndependenceCertificate cert;
  for (int i = 0; i < family.size(); ++i)
    if (best >> i & 1u) cert.indices.push_back(i);
  return cert;
}

namespace {

struct CoverSearch {
  const std::vector<unsigned>* maximal;
  unsigned full;
  std::vector<int> best;
  std::vector<int> chosen;

  void run(unsigned uncovered) {
    if (!uncovered) {
      if (best.empty() || chosen.size() < best.size()) best = chosen;
      return;
    }
    if (!best.empty() && chosen.size() + 1 >= best.size()) return;
    const int v = std::countr_zero(uncovered);
    for (std::size_t s = 0; s < maximal->size(); ++s) {
      if (!((*maximal)[s] >> v & 1u)) continue;
      chosen.push_back(static_cast<int>(s));
      run(uncovered & ~(*maximal)[s]);
      chosen.pop_back();
    }
  }
};

}  // namespace

TransversalCertificate exact_transversal(const HomothetFamily& family,
                                         int cap) {
  require_cap(family, cap, "exact transversal");
  const int n = family.size();
  TransversalCertificate cert;
  if (n == 0) return cert;
  const int d = family.dimension();

  std::vector<const ConvexPolytope*> bodies;
  for (int i = 0; i < n; ++i) bodies.push_back(&family.realized(i));

  const auto adj = adjacency_masks(family);
  auto meets = [&](std::vector<int> idx) {
    std::vector<const ConvexPolytope*> sel;
    for (int i : idx) sel.push_back(bodies[static_cast<std::size_t>(i)]);
    return common_point(sel).has_value();
  };

  // Joint feasibility tables at the sizes the Helly number requires.
  std::vector<std::vector<std::vector<char>>> triple;
  std::vector<char> quad;
  triple.assign(static_cast<std::size_t>(n),
                std::vector<std::vector<char>>(
                    static_cast<std::size_t>(n),
                    std::vector<char>(static_cast<std::size_t>(n), 0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(adj[static_cast<std::size_t>(i)] >> j & 1u)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!(adj[static_cast<std::size_t>(i)] >> k & 1u)) continue;
        if (!(adj[static_cast<std::size_t>(j)] >> k & 1u)) continue;
        const char f = meets({i, j, k}) ? 1 : 0;
        triple[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = f;
      }
    }
  auto triple_ok = [&](int a, int b, int c) {
    int x = std::min({a, b, c}), z = std::max({a, b, c});
    int y = a + b + c - x - z;
    return triple[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] != 0;
  };
  auto quad_index = [&](int a, int b, int c, int e) {
    int v[4] = {a, b, c, e};
    std::sort(v, v + 4);
    return ((v[0] * n + v[1]) * n + v[2]) * n + v[3];
  };
  if (d == 3) {
    quad.assign(static_cast<std::size_t>(n * n * n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          if (!triple_ok(i, j, k)) continue;
          for (int l = k + 1; l < n; ++l) {
            if (!triple_ok(i, j, l) || !triple_ok(i, k, l) ||
                !triple_ok(j, k, l))
              continue;
            quad[static_cast<std::size_t>(quad_index(i, j, k, l))] =
                meets({i, j, k, l}) ? 1 : 0;
          }
        }
  }

  // feasible[mask]: the members of mask share a point. By Helly it is
  // enough that every (d+1)-subset does.
  const unsigned full = (n == 32) ? ~0u : (1u << n) - 1;
  std::vector<char> feasible(static_cast<std::size_t>(full) + 1, 0);
  feasible[0] = 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int sz = std::popcount(mask);
    if (sz == 1) {
      feasible[mask] = 1;
      continue;
    }
    const int v = std::countr_zero(mask);
    const unsigned rest = mask & (mask - 1);
    if (!feasible[rest]) continue;
    bool ok = true;
    if (sz == 2) {
      const int w = std::countr_zero(rest);
      ok = (adj[static_cast<std::size_t>(v)] >> w & 1u) != 0;
    } else if (sz == 3) {
      int w[2], c = 0;
      for (int i = 0; i < n; ++i)
        if (rest >> i & 1u) w[c++] = i;
      ok = triple_ok(v, w[0], w[1]);
    } else if (d == 3 && sz == 4) {
      int w[3], c = 0;
      for (int i = 0; i < n; ++i)
        if (rest >> i & 1u) w[c++] = i;
      ok = quad[static_cast<std::size_t>(quad_index(v, w[0], w[1], w[2]))] != 0;
    } else if (d == 2) {
      for (int i = 0; i < n && ok; ++i) {
        if (!(rest >> i & 1u)) continue;
        for (int j = i + 1; j < n && ok; ++j)
          if (rest >> j & 1u) ok = triple_ok(v, i, j);
      }
    } else {
      for (int i = 0; i < n && ok; ++i) {
        if (!(rest >> i & 1u)) continue;
        for (int j = i + 1; j < n && ok; ++j) {
          if (!(rest >> j & 1u)) continue;
          for (int k = j + 1; k < n && ok; ++k)
            if (rest >> k & 1u)
              ok = quad[static_cast<std::size_t>(quad_index(v, i, j, k))] != 0;
        }
      }
    }
    feasible[mask] = ok ? 1 : 0;
  }

  std::vector<unsigned> maximal;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (!feasible[mask]) continue;
    bool is_max = true;
    for (int v = 0; v < n && is_max; ++v)
      if (!(mask >> v & 1u) && feasible[mask | (1u << v)]) is_max = false;
    if (is_max) maximal.push_back(mask);
  }
  std::sort(maximal.begin(), maximal.end(), [](unsigned a, unsigned b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  CoverSearch search{&maximal, full, {}, {}};
  search.run(full);

  for (std::size_t s = 0; s < search.best.size(); ++s) {
    const unsigned mask = maximal[static_cast<std::size_t>(search.best[s])];
    std::vector<const ConvexPolytope*> sel;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) sel.push_back(bodies[static_cast<std::size_t>(i)]);
    auto w = common_point(sel);
    if (!w.has_value())
      throw std::logic_error("feasible subfamily must have a common point");
    cert.points.push_back(*w);
  }
  cert.assignment.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < search.best.size() &&
                            cert.assignment[static_cast<std::size_t>(i)] < 0;
         ++s)
      if (maximal[static_cast<std::size_t>(search.best[s])] >> i & 1u)
        cert.assignment[static_cast<std::size_t>(i)] = static_cast<int>(s);
  }
  return cert;
}

BoundReport bound_report(const HomothetFamily& family, int exact_cap) {
  if (!family.base().is_body())
    throw std::invalid_argument("bound report needs a body as base");
  BoundReport report;
  report.dimension = family.dimension();
  report.member_count = family.size();

  const ConvexPolytope& base = family.base();
  const ConvexPolytope reflected = reflect(base);
  report.vol_ratio =
      volume(minkowski_sum(scale(base, 2), reflected)) / volume(base);

  // Symmetric up to translation: -K is a translate of K exactly when the
  // reflected vertex set, realigned at its lexicographic minimum, matches.
  {
    const Point shift =
        base.vertices().front() - reflected.vertices().front();
    report.symmetric =
        translate(reflected, shift).vertices() == base.vertices();
  }

  const int n = report.dimension;
  report.rz = rz_factor(n);
  report.symmetric_cap = int_pow(3, n);
  report.general_cap = int_pow(2, n) * binomial(2 * n, n);

  const GreedyTransversal greedy = greedy_transversal(family);
  report.nu_greedy = static_cast<int>(greedy.groups.size());
  report.tau_greedy = static_cast<int>(greedy.certificate.points.size());

  if (family.size() <= exact_cap) {
    report.nu_exact =
        static_cast<int>(exact_independence(family, exact_cap).indices.size());
    report.tau_exact =
        static_cast<int>(exact_transversal(family, exact_cap).points.size());
  } else {
    report.cap_exceeded = true;
  }
  return report;
}

ConvexPolytope s_minus_k(const ConvexPolytope& s, const ConvexPolytope& k) {
  return minkowski_sum(s, reflect(k));
}

}  // namespace homothets

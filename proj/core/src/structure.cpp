#include "groupkit/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gk {

PPower p_part(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw Error("p_part: " + std::to_string(p) + " is not prime");
  PPower out{p, 0, 1};
  while (n % p == 0) {
    n /= p;
    ++out.exponent;
    out.value *= p;
  }
  return out;
}

namespace {

Group extend_by(const Group& cur, const Perm& x) {
  std::vector<Perm> gens = cur.generators();
  gens.push_back(x);
  return Group::generated(cur.degree(), std::move(gens));
}

// Prime of a nontrivial prime-power-order group; throws otherwise.
std::uint64_t p_group_prime(const Group& g) {
  auto primes = prime_factors(g.order());
  if (primes.size() != 1)
    throw Error("expected a p-group, got order " + std::to_string(g.order()));
  return primes[0];
}

}  // namespace

Group sylow_subgroup(const Group& g, std::uint64_t p, std::size_t cap) {
  const std::uint64_t target = p_part(g.order(), p).value;
  Group q = Group::trivial(g.degree());
  while (q.order() < target) {
    Group n = normalizer(g, q, cap);
    bool grew = false;
    for (const auto& x : n.elements(cap)) {
      if (q.contains(x)) continue;
      if (!is_power_of(element_order(x), p)) continue;
      // Reduce x to a power whose image modulo q has order exactly p.
      Perm y = x;
      while (true) {
        Perm yp = power(y, p);
        if (q.contains(yp)) break;
        y = std::move(yp);
      }
      q = extend_by(q, y);
      grew = true;
      break;
    }
    if (!grew)
      throw Error("sylow_subgroup: growth stalled below the full p-part");
  }
  return q;
}

Group o_p(const NormalLattice& lat, std::uint64_t p) {
  Group j = Group::trivial(lat.ambient.degree());
  for (const auto& node : lat.nodes)
    if (node.order() > 1 && is_power_of(node.order(), p)) j = join(j, node);
  return j;
}

Group o_p(const Group& g, std::uint64_t p) {
  return o_p(normal_subgroups(g), p);
}

Group o_p_prime(const NormalLattice& lat, std::uint64_t p) {
  Group j = Group::trivial(lat.ambient.degree());
  for (const auto& node : lat.nodes)
    if (node.order() % p != 0) j = join(j, node);
  return j;
}

Group o_p_prime(const Group& g, std::uint64_t p) {
  return o_p_prime(normal_subgroups(g), p);
}

Group o_p_prime_p(const NormalLattice& lat, std::uint64_t p) {
  Group base = o_p_prime(lat, p);
  Group j = base;
  for (const auto& node : lat.nodes) {
    if (node.order() % base.order() != 0) continue;
    if (!base.is_subgroup_of(node)) continue;
    if (is_power_of(node.order() / base.order(), p)) j = join(j, node);
  }
  return j;
}

Group o_p_prime_p(const Group& g, std::uint64_t p) {
  return o_p_prime_p(normal_subgroups(g), p);
}

bool is_p_soluble(const std::vector<ChiefFactorPair>& series, std::uint64_t p) {
  for (const auto& f : series)
    if (f.factor_order % p == 0 && !is_power_of(f.factor_order, p))
      return false;
  return true;
}

bool is_p_soluble(const Group& g, std::uint64_t p) {
  return is_p_soluble(chief_series(g), p);
}

bool is_p_supersoluble(const std::vector<ChiefFactorPair>& series,
                       std::uint64_t p) {
  for (const auto& f : series)
    if (f.factor_order % p == 0 && f.factor_order != p) return false;
  return true;
}

bool is_p_supersoluble(const Group& g, std::uint64_t p) {
  return is_p_supersoluble(chief_series(g), p);
}

namespace {

// Shared ascent: admit a cover (W, L) when pred(|L|/|W|) holds; join all
// admissible uppers each round until nothing moves.
Group hypercenter_ascent(const NormalLattice& lat,
                         const std::function<bool(std::uint64_t)>& central) {
  int cur = 0;  // trivial node
  while (true) {
    Group next = lat.nodes[cur];
    for (int j : lat.covers_above(cur)) {
      std::uint64_t fo = lat.nodes[j].order() / lat.nodes[cur].order();
      if (central(fo)) next = join(next, lat.nodes[j]);
    }
    if (next.order() == lat.nodes[cur].order()) return lat.nodes[cur];
    int idx = lat.index_of(next);
    if (idx < 0) throw Error("hypercenter ascent left the lattice");
    cur = idx;
  }
}

}  // namespace

Group z_u(const NormalLattice& lat) {
  return hypercenter_ascent(
      lat, [](std::uint64_t fo) { return is_prime(fo); });
}

Group z_u(const Group& g) { return z_u(normal_subgroups(g)); }

Group z_u_p(const NormalLattice& lat, std::uint64_t p) {
  return hypercenter_ascent(lat, [p](std::uint64_t fo) {
    return fo % p != 0 || fo == p;
  });
}

Group z_u_p(const Group& g, std::uint64_t p) {
  return z_u_p(normal_subgroups(g), p);
}

namespace {

// One BFS level: all subgroups of order p*|S| over the given subgroups
// of equal order, deduplicated by element set.
std::vector<Group> next_subgroup_level(const Group& p_group, std::uint64_t p,
                                       const std::vector<Group>& level) {
  std::map<std::vector<Perm>, Group> out;
  for (const auto& s : level) {
    Group n = normalizer(p_group, s);
    for (const auto& x : n.elements()) {
      if (s.contains(x)) continue;
      if (!s.contains(power(x, p))) continue;
      Group t = extend_by(s, x);
      out.emplace(t.elements(), t);
    }
  }
  std::vector<Group> result;
  result.reserve(out.size());
  for (auto& [key, grp] : out) result.push_back(grp);
  return result;
}

}  // namespace

std::vector<Group> subgroups_of_order(const Group& p_group, std::uint64_t d) {
  const std::uint64_t p = p_group_prime(p_group);
  if (d >= p_group.order())
    throw Error("subgroups_of_order: d must be smaller than |P|");
  if (!is_power_of(d, p))
    throw Error("subgroups_of_order: d is not a power of p");
  std::vector<Group> level{Group::trivial(p_group.degree())};
  for (std::uint64_t size = 1; size < d; size *= p)
    level = next_subgroup_level(p_group, p, level);
  return level;
}

std::vector<Group> all_subgroups(const Group& p_group) {
  if (p_group.is_trivial()) return {Group::trivial(p_group.degree())};
  const std::uint64_t p = p_group_prime(p_group);
  std::vector<Group> out;
  std::vector<Group> level{Group::trivial(p_group.degree())};
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    level = next_subgroup_level(p_group, p, level);
  }
  return out;
}

std::vector<Group> cyclic_subgroups_of_order4(const Group& two_group) {
  if (!two_group.is_trivial() && p_group_prime(two_group) != 2)
    throw Error("cyclic_subgroups_of_order4: not a 2-group");
  std::map<std::vector<Perm>, Group> out;
  for (const auto& x : two_group.elements()) {
    if (element_order(x) != 4) continue;
    Group c = Group::generated(two_group.degree(), {x});
    out.emplace(c.elements(), c);
  }
  std::vector<Group> result;
  for (auto& [key, grp] : out) result.push_back(grp);
  return result;
}

namespace {

bool is_q8(const Group& g) {
  if (g.order() != 8) return false;
  int involutions = 0;
  bool cyclic = false;
  for (const auto& x : g.elements()) {
    auto o = element_order(x);
    if (o == 2) ++involutions;
    if (o == 8) cyclic = true;
  }
  return !cyclic && involutions == 1;
}

}  // namespace

bool is_quaternion_free(const Group& two_group, std::size_t order_cap) {
  if (two_group.order() > order_cap)
    throw CapExceeded("is_quaternion_free: order " +
                      std::to_string(two_group.order()) + " exceeds cap " +
                      std::to_string(order_cap));
  if (!two_group.is_trivial() && p_group_prime(two_group) != 2)
    throw Error("is_quaternion_free: not a 2-group");
  if (two_group.order() < 8) return true;
  for (const auto& h : all_subgroups(two_group)) {
    if (h.order() < 8 || h.order() % 8 != 0) continue;
    auto hlat = normal_subgroups(h);
    for (const auto& k : hlat.nodes) {
      if (h.order() / k.order() != 8) continue;
      if (is_q8(quotient_group(h, k).group)) return false;
    }
  }
  return true;
}

StructureReport compute_structure_report(const std::string& id, const Group& g,
                                         const NormalLattice& lat) {
  StructureReport rep;
  rep.group_id = id;
  rep.order = g.order();
  rep.z_u_order = z_u(lat).order();
  auto series = chief_series(lat);
  for (std::uint64_t p : prime_factors(g.order())) {
    PrimeStructure ps;
    ps.p = p;
    ps.sylow_order = p_part(g.order(), p).value;
    ps.o_p_order = o_p(lat, p).order();
    ps.o_p_prime_order = o_p_prime(lat, p).order();
    ps.o_p_prime_p_order = o_p_prime_p(lat, p).order();
    ps.z_u_p_order = z_u_p(lat, p).order();
    ps.p_soluble = is_p_soluble(series, p);
    ps.p_supersoluble = is_p_supersoluble(series, p);
    rep.primes.push_back(ps);
  }
  return rep;
}

StructureReport compute_structure_report(const std::string& id,
                                         const Group& g) {
  return compute_structure_report(id, g, normal_subgroups(g));
}

}  // namespace gk

#include "groupkit/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gk {

std::vector<ConjClass> conjugacy_classes(const Group& g, std::size_t cap) {
  const auto& elems = g.elements(cap);
  std::set<Perm> remaining(elems.begin(), elems.end());
  std::vector<ConjClass> classes;
  while (!remaining.empty()) {
    Perm seed = *remaining.begin();  // minimal unassigned element
    std::set<Perm> orbit{seed};
    std::deque<Perm> queue{seed};
    while (!queue.empty()) {
      Perm x = queue.front();
      queue.pop_front();
      for (const auto& s : g.generators()) {
        Perm y = conjugate(x, s);
        if (orbit.insert(y).second) queue.push_back(y);
      }
    }
    ConjClass cls;
    cls.representative = *orbit.begin();
    cls.members.assign(orbit.begin(), orbit.end());
    for (const auto& m : cls.members) remaining.erase(m);
    classes.push_back(std::move(cls));
  }
  // The identity is the minimal element of g, so the identity class is
  // already first.
  return classes;
}

Group normal_closure(const Group& g, const Group& h) {
  if (!h.is_subgroup_of(g))
    throw Error("normal_closure: h is not a subgroup of g");
  Group cur = Group::generated(g.degree(), h.generators());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> gens = cur.generators();
    for (const auto& s : gens) {
      for (const auto& x : g.generators()) {
        Perm c = conjugate(s, x);
        if (!cur.contains(c)) {
          std::vector<Perm> next = cur.generators();
          next.push_back(c);
          cur = Group::generated(g.degree(), std::move(next));
          changed = true;
        }
      }
    }
  }
  return cur;
}

int NormalLattice::index_of(const Group& n) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].same_group_as(n)) return static_cast<int>(i);
  return -1;
}

bool NormalLattice::leq(int i, int j) const {
  if (nodes[j].order() % nodes[i].order() != 0) return false;
  return nodes[i].is_subgroup_of(nodes[j]);
}

std::vector<int> NormalLattice::covers_above(int i) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers)
    if (lo == i) out.push_back(hi);
  return out;
}

std::vector<int> NormalLattice::covers_below(int i) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers)
    if (hi == i) out.push_back(lo);
  return out;
}

NormalLattice normal_subgroups(const Group& g, std::size_t cap) {
  auto classes = conjugacy_classes(g, cap);

  std::map<std::vector<Perm>, Group> seen;
  std::deque<Group> queue;
  Group triv = Group::trivial(g.degree());
  seen.emplace(triv.elements(cap), triv);
  queue.push_back(triv);

  while (!queue.empty()) {
    Group node = queue.front();
    queue.pop_front();
    for (const auto& cls : classes) {
      if (node.contains(cls.representative)) continue;
      // A generating set closed under conjugation generates a normal
      // subgroup, and node itself is normal, so the join is normal.
      std::vector<Perm> gens = node.generators();
      gens.insert(gens.end(), cls.members.begin(), cls.members.end());
      Group jn = Group::generated(g.degree(), std::move(gens));
      auto key = jn.elements(cap);
      if (seen.emplace(std::move(key), jn).second) queue.push_back(jn);
    }
  }

  NormalLattice lat;
  lat.ambient = g;
  for (auto& [key, node] : seen) lat.nodes.push_back(node);
  std::sort(lat.nodes.begin(), lat.nodes.end(),
            [&](const Group& a, const Group& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements(cap) < b.elements(cap);
            });

  const int n = static_cast<int>(lat.nodes.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) le[i][j] = lat.leq(i, j);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) covered = false;
      if (covered) lat.covers.emplace_back(i, j);
    }
  }
  return lat;
}

std::vector<Group> minimal_normal_subgroups(const NormalLattice& lat) {
  if (lat.ambient.is_trivial())
    throw Error("minimal_normal_subgroups: trivial group");
  std::vector<Group> out;
  for (int j : lat.covers_above(0)) out.push_back(lat.nodes[j]);
  return out;
}

std::vector<Group> minimal_normal_subgroups(const Group& g) {
  return minimal_normal_subgroups(normal_subgroups(g));
}

std::vector<Group> maximal_g_invariant_in(const NormalLattice& lat,
                                          const Group& n) {
  if (!is_normal_in(lat.ambient, n))
    throw Error("maximal_g_invariant_in: n is not normal in g");
  int idx = lat.index_of(n);
  if (idx < 0) throw Error("maximal_g_invariant_in: n not found in lattice");
  std::vector<Group> out;
  for (int i : lat.covers_below(idx)) out.push_back(lat.nodes[i]);
  return out;
}

std::vector<Group> maximal_g_invariant_in(const Group& g, const Group& n) {
  return maximal_g_invariant_in(normal_subgroups(g), n);
}

std::vector<ChiefFactorPair> chief_series(const NormalLattice& lat) {
  std::vector<ChiefFactorPair> series;
  int cur = 0;  // trivial node: unique node of order 1, sorted first
  const int top = static_cast<int>(lat.nodes.size()) - 1;
  while (cur != top) {
    auto ups = lat.covers_above(cur);
    int best = -1;
    for (int j : ups) {
      if (best < 0) {
        best = j;
        continue;
      }
      std::uint64_t fo_j = lat.nodes[j].order() / lat.nodes[cur].order();
      std::uint64_t fo_b = lat.nodes[best].order() / lat.nodes[cur].order();
      if (fo_j < fo_b ||
          (fo_j == fo_b && lat.nodes[j].elements() < lat.nodes[best].elements()))
        best = j;
    }
    if (best < 0) throw Error("chief_series: lattice has no cover above node");
    series.push_back({lat.nodes[cur], lat.nodes[best],
                      lat.nodes[best].order() / lat.nodes[cur].order()});
    cur = best;
  }
  return series;
}

std::vector<ChiefFactorPair> chief_series(const Group& g) {
  return chief_series(normal_subgroups(g));
}

bool is_chief_factor(const Group& g, const Group& k, const Group& l) {
  if (!is_normal_in(g, k) || !is_normal_in(g, l))
    throw Error("is_chief_factor: inputs must be normal in g");
  if (k.order() >= l.order() || !k.is_subgroup_of(l)) return false;
  auto lat = normal_subgroups(g);
  int ki = lat.index_of(k), li = lat.index_of(l);
  for (const auto& [lo, hi] : lat.covers)
    if (lo == ki && hi == li) return true;
  return false;
}

struct QuotientMap::Data {
  std::vector<Perm> k_elements;   // sorted
  std::vector<Perm> coset_reps;   // canonical minimal reps, sorted
  std::map<Perm, int> rep_index;
  int quotient_degree = 0;

  Perm canonical_rep(const Perm& y) const {
    Perm best = k_elements.front() * y;
    for (std::size_t i = 1; i < k_elements.size(); ++i) {
      Perm cand = k_elements[i] * y;
      if (cand < best) best = cand;
    }
    return best;
  }
};

Perm QuotientMap::image(const Perm& x) const {
  std::vector<int> images(data_->quotient_degree);
  for (int i = 0; i < data_->quotient_degree; ++i) {
    Perm rep = data_->canonical_rep(data_->coset_reps[i] * x);
    auto it = data_->rep_index.find(rep);
    if (it == data_->rep_index.end())
      throw Error("quotient map applied to an element outside the group");
    images[i] = it->second;
  }
  return Perm(std::move(images));
}

struct QuotientBuilder {
  static QuotientMap make(std::shared_ptr<const QuotientMap::Data> data) {
    QuotientMap m;
    m.data_ = std::move(data);
    return m;
  }
};

Quotient quotient_group(const Group& g, const Group& k, int index_cap) {
  if (!is_normal_in(g, k)) throw Error("quotient_group: k is not normal in g");
  const std::uint64_t index = g.order() / k.order();
  if (index > static_cast<std::uint64_t>(index_cap))
    throw CapExceeded("quotient index " + std::to_string(index) +
                      " exceeds cap " + std::to_string(index_cap));

  auto data = std::make_shared<QuotientMap::Data>();
  data->k_elements = k.elements();

  // BFS over right cosets, each named by its canonical minimal element.
  std::set<Perm> reps;
  std::deque<Perm> queue;
  Perm start = data->canonical_rep(Perm::identity(g.degree()));
  reps.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Perm r = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Perm c = data->canonical_rep(r * s);
      if (reps.insert(c).second) queue.push_back(c);
    }
  }
  if (reps.size() != index)
    throw Error("quotient_group: coset count mismatch");

  data->coset_reps.assign(reps.begin(), reps.end());
  data->quotient_degree = static_cast<int>(data->coset_reps.size());
  for (int i = 0; i < data->quotient_degree; ++i)
    data->rep_index.emplace(data->coset_reps[i], i);

  QuotientMap map = QuotientBuilder::make(data);
  std::vector<Perm> qgens;
  for (const auto& s : g.generators()) qgens.push_back(map.image(s));
  Group q = Group::generated(data->quotient_degree, std::move(qgens));
  if (q.order() != index)
    throw Error("quotient_group: quotient order mismatch");
  return Quotient{std::move(q), std::move(map)};
}

}  // namespace gk

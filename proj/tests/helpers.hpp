// Independent reference implementations used to cross-check the library.
// These deliberately use the dumbest correct algorithm available.
#pragma once

#include <set>
#include <vector>

#include "groupkit/corpus.hpp"
#include "groupkit/lattice.hpp"

namespace gktest {

// Brute-force closure of a generating set under multiplication.
inline std::set<gk::Perm> brute_closure(int degree,
                                        const std::vector<gk::Perm>& gens,
                                        std::size_t cap = 100000) {
  std::set<gk::Perm> elems{gk::Perm::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<gk::Perm> snapshot(elems.begin(), elems.end());
    for (const auto& x : snapshot)
      for (const auto& s : gens) {
        if (elems.insert(x * s).second) grew = true;
        if (elems.size() > cap) throw gk::Error("brute_closure cap");
      }
  }
  return elems;
}

inline std::set<gk::Perm> to_set(const gk::Group& g) {
  const auto& e = g.elements();
  return {e.begin(), e.end()};
}

// All subgroups of g generated by at most max_gens elements; complete
// whenever every subgroup of g needs at most max_gens generators.
inline std::vector<gk::Group> brute_subgroups(const gk::Group& g,
                                              int max_gens) {
  const auto& elems = g.elements();
  std::set<std::vector<gk::Perm>> seen;
  std::vector<gk::Group> out;
  std::vector<std::vector<gk::Perm>> frontier{{}};
  for (int depth = 0; depth <= max_gens; ++depth) {
    std::vector<std::vector<gk::Perm>> next;
    for (const auto& gens : frontier) {
      gk::Group s = gens.empty() ? gk::Group::trivial(g.degree())
                                 : gk::Group::generated(g.degree(), gens);
      if (seen.insert(s.elements()).second) out.push_back(s);
      if (depth == max_gens) continue;
      for (const auto& x : elems) {
        auto g2 = gens;
        g2.push_back(x);
        next.push_back(std::move(g2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Normal subgroups as unions of conjugacy classes: every subset of the
// class list whose union is multiplicatively closed. Exponential in the
// class count; callers keep it under ~12 classes.
inline std::vector<std::set<gk::Perm>> normal_subgroups_by_classes(
    const gk::Group& g) {
  auto classes = gk::conjugacy_classes(g);
  const std::size_t k = classes.size();
  std::vector<std::set<gk::Perm>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity class
    std::set<gk::Perm> u;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i))
        u.insert(classes[i].members.begin(), classes[i].members.end());
    bool closed = true;
    for (const auto& a : u) {
      for (const auto& b : u)
        if (!u.count(a * b)) { closed = false; break; }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(u));
  }
  return out;
}

// Hypercentral test straight from the definition: z is admissible when
// some maximal chain of normal subgroups from 1 to z has only admissible
// factors (all chains agree by Jordan-Holder).
template <typename FactorOk>
gk::Group hypercenter_oracle(const gk::NormalLattice& lat, FactorOk ok) {
  const int n = static_cast<int>(lat.nodes.size());
  std::vector<char> admissible(n, 0);
  admissible[0] = 1;  // the trivial node
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [lo, hi] : lat.covers)
      if (admissible[lo] && !admissible[hi] &&
          ok(lat.nodes[hi].order() / lat.nodes[lo].order())) {
        admissible[hi] = 1;
        grew = true;
      }
  }
  int best = 0;
  for (int i = 0; i < n; ++i)
    if (admissible[i] && lat.nodes[i].order() > lat.nodes[best].order())
      best = i;
  return lat.nodes[best];
}

}  // namespace gktest

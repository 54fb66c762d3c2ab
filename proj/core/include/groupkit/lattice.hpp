#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "groupkit/group.hpp"

namespace gk {

inline constexpr int kQuotientIndexCap = 1024;

struct ConjClass {
  Perm representative;        // minimal member
  std::vector<Perm> members;  // sorted
};

/// Conjugacy classes of g; identity class first, the rest ordered by
/// representative.
std::vector<ConjClass> conjugacy_classes(const Group& g,
                                         std::size_t cap = kElementCap);

/// Smallest normal subgroup of g containing h (the closure H^G).
Group normal_closure(const Group& g, const Group& h);

/// A covering pair (K, L) in the normal-subgroup lattice: a chief
/// factor L/K of the ambient group.
struct ChiefFactorPair {
  Group lower;
  Group upper;
  std::uint64_t factor_order = 0;
};

/// The full normal-subgroup lattice of a fixed ambient group.
/// Immutable after construction; safe for concurrent readers.
struct NormalLattice {
  Group ambient;
  std::vector<Group> nodes;  // ascending by (order, canonical element set)
  std::vector<std::pair<int, int>> covers;  // (lower, upper) node indices

  int index_of(const Group& n) const;  // -1 when absent
  bool leq(int i, int j) const;        // inclusion of nodes
  std::vector<int> covers_above(int i) const;
  std::vector<int> covers_below(int i) const;
};

/// Every normal subgroup is a union of conjugacy classes and is
/// generated by the classes it contains, so the lattice is the
/// breadth-first closure of joins of class closures.
NormalLattice normal_subgroups(const Group& g, std::size_t cap = kElementCap);

std::vector<Group> minimal_normal_subgroups(const NormalLattice& lat);
std::vector<Group> minimal_normal_subgroups(const Group& g);

/// All maximal G-invariant subgroups of n (n normal in the ambient
/// group): the K with (K, n) a covering pair. Empty iff n is trivial.
std::vector<Group> maximal_g_invariant_in(const NormalLattice& lat,
                                          const Group& n);
std::vector<Group> maximal_g_invariant_in(const Group& g, const Group& n);

/// Ascending chief series 1 = K_0 < ... < K_r = G, deterministic: each
/// step takes the cover of least factor order, ties broken by canonical
/// element order of the upper node.
std::vector<ChiefFactorPair> chief_series(const NormalLattice& lat);
std::vector<ChiefFactorPair> chief_series(const Group& g);

bool is_chief_factor(const Group& g, const Group& k, const Group& l);

struct Quotient;
Quotient quotient_group(const Group& g, const Group& k, int index_cap);

/// The natural epimorphism g -> g/k, evaluable on arbitrary elements
/// of g.
class QuotientMap {
 public:
  Perm image(const Perm& x) const;

 private:
  friend struct QuotientBuilder;
  friend Quotient quotient_group(const Group&, const Group&, int);
  struct Data;
  std::shared_ptr<const Data> data_;
};

struct Quotient {
  Group group;  // faithful permutation group on the right cosets of k
  QuotientMap map;
};

/// g/k as the right-coset action (faithful since k is normal). Coset
/// labels are sorted by canonical minimal coset representative, so the
/// result is deterministic. Throws when k is not normal in g or the
/// index exceeds the cap.
Quotient quotient_group(const Group& g, const Group& k, int index_cap);
inline Quotient quotient_group(const Group& g, const Group& k) {
  return quotient_group(g, k, kQuotientIndexCap);
}

}  // namespace gk

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupkit/lattice.hpp"

namespace gk {

inline constexpr std::size_t kQuaternionFreeCap = 256;

struct PPower {
  std::uint64_t p = 0;
  int exponent = 0;
  std::uint64_t value = 1;
};

/// Largest power of p dividing n (the p-part |n|_p).
PPower p_part(std::uint64_t n, std::uint64_t p);

/// Sylow p-subgroup by normalizer growth: repeatedly adjoin a p-element
/// of N_G(Q) \ Q whose image modulo Q has order p. A maximal p-subgroup
/// reached this way has the full p-part of |G|.
Group sylow_subgroup(const Group& g, std::uint64_t p,
                     std::size_t cap = kElementCap);

/// Largest normal p-subgroup, computed as the join of all lattice nodes
/// of p-power order (the set is join-closed).
Group o_p(const NormalLattice& lat, std::uint64_t p);
Group o_p(const Group& g, std::uint64_t p);

/// Largest normal subgroup of order coprime to p.
Group o_p_prime(const NormalLattice& lat, std::uint64_t p);
Group o_p_prime(const Group& g, std::uint64_t p);

/// O_{p'p}(G): the preimage of O_p(G/O_{p'}(G)); computed inside the
/// lattice as the join of all nodes containing O_{p'}(G) with p-power
/// factor over it.
Group o_p_prime_p(const NormalLattice& lat, std::uint64_t p);
Group o_p_prime_p(const Group& g, std::uint64_t p);

/// Every chief factor order is a power of p or coprime to p.
bool is_p_soluble(const std::vector<ChiefFactorPair>& series, std::uint64_t p);
bool is_p_soluble(const Group& g, std::uint64_t p);

/// Every chief factor order is coprime to p or exactly p.
bool is_p_supersoluble(const std::vector<ChiefFactorPair>& series,
                       std::uint64_t p);
bool is_p_supersoluble(const Group& g, std::uint64_t p);

/// Supersoluble hypercenter Z_U(G): greedy ascent joining all minimal
/// normal subgroups of G/W of prime order until a fixed point.
Group z_u(const NormalLattice& lat);
Group z_u(const Group& g);

/// p-supersoluble hypercenter Z_{U_p}(G): ascent step admits factors of
/// order p or coprime to p.
Group z_u_p(const NormalLattice& lat, std::uint64_t p);
Group z_u_p(const Group& g, std::uint64_t p);

/// All subgroups of a p-group of order d, by level BFS: subgroups of
/// order p^{k+1} are exactly <S, x> for S of order p^k and x in
/// N_P(S) \ S with x^p in S. Requires d < |P|.
std::vector<Group> subgroups_of_order(const Group& p_group, std::uint64_t d);

/// Every subgroup of a p-group, smallest order first.
std::vector<Group> all_subgroups(const Group& p_group);

std::vector<Group> cyclic_subgroups_of_order4(const Group& two_group);

/// True iff no section H/K of the 2-group is isomorphic to Q8.
/// Q8 recognition: order 8, noncyclic, exactly one involution.
bool is_quaternion_free(const Group& two_group,
                        std::size_t order_cap = kQuaternionFreeCap);

struct PrimeStructure {
  std::uint64_t p = 0;
  std::uint64_t sylow_order = 1;
  std::uint64_t o_p_order = 1;
  std::uint64_t o_p_prime_order = 1;
  std::uint64_t o_p_prime_p_order = 1;
  std::uint64_t z_u_p_order = 1;
  bool p_soluble = false;
  bool p_supersoluble = false;
};

struct StructureReport {
  std::string group_id;
  std::uint64_t order = 1;
  std::uint64_t z_u_order = 1;
  std::vector<PrimeStructure> primes;  // one record per prime divisor
};

StructureReport compute_structure_report(const std::string& id, const Group& g,
                                         const NormalLattice& lat);
StructureReport compute_structure_report(const std::string& id,
                                         const Group& g);

}  // namespace gk

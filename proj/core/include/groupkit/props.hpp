#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupkit/lattice.hpp"

namespace gk {

/// Evidence for one failed pi-condition.
struct PropertyWitness {
  Group lower;                 // K
  Group subject;               // HK, or HK n L for the Pi-property
  std::optional<Group> upper;  // L (Pi-property only)
  std::uint64_t index = 1;     // |G : N_G(subject)|
  PrimeSet pi;                 // pi(|subject| / |K|)
  std::uint64_t offending_prime = 0;
};

struct PropertyVerdict {
  bool holds = true;
  std::size_t conditions_checked = 0;
  std::vector<PropertyWitness> witnesses;  // all failures, not just the first
};

/// True iff every prime divisor of n lies in pi. 1 is a pi-number for
/// every pi, including the empty set.
bool pi_number(std::uint64_t n, const PrimeSet& pi);

/// H satisfies the L-Pi-property in G when |G/K : N_{G/K}(HK/K)| is a
/// pi(HK/K)-number for every maximal G-invariant subgroup K of H^G.
/// Vacuously true when H^G has no maximal G-invariant subgroup (H
/// trivial). Works entirely inside G via N_{G/K}(X/K) = N_G(X)/K.
PropertyVerdict satisfies_l_pi(const NormalLattice& lat, const Group& h);
PropertyVerdict satisfies_l_pi(const Group& g, const Group& h);

/// H satisfies the Pi-property in G when for every chief factor L/K,
/// |G/K : N_{G/K}(HK/K n L/K)| is a pi(HK/K n L/K)-number. Quantified
/// over every covering pair of the normal lattice.
PropertyVerdict satisfies_pi(const NormalLattice& lat, const Group& h);
PropertyVerdict satisfies_pi(const Group& g, const Group& h);

/// Human-readable rendering of a verdict and its witnesses.
std::string explain(const PropertyVerdict& v);

}  // namespace gk

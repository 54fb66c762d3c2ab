#include "groupkit/props.hpp"

namespace gk {

bool pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (std::uint64_t p : prime_factors(n))
    if (!pi.contains(p)) return false;
  return true;
}

namespace {

// Checks one condition: |G : N_G(subject)| must be a pi(|subject|/|K|)-
// number. Appends a witness on failure.
void check_condition(const NormalLattice& lat, const Group& lower,
                     const Group& subject, std::optional<Group> upper,
                     PropertyVerdict& verdict) {
  ++verdict.conditions_checked;
  const Group& g = lat.ambient;
  std::uint64_t index;
  if (subject.order() == lower.order()) {
    index = 1;  // subject = K is normal in G, so the normalizer is all of G
  } else {
    index = g.order() / normalizer(g, subject).order();
  }
  PrimeSet pi = PrimeSet::of(subject.order() / lower.order());
  if (pi_number(index, pi)) return;
  std::uint64_t offending = 0;
  for (std::uint64_t q : prime_factors(index))
    if (!pi.contains(q)) {
      offending = q;
      break;
    }
  verdict.holds = false;
  verdict.witnesses.push_back(
      PropertyWitness{lower, subject, std::move(upper), index, pi, offending});
}

}  // namespace

PropertyVerdict satisfies_l_pi(const NormalLattice& lat, const Group& h) {
  if (!h.is_subgroup_of(lat.ambient))
    throw Error("satisfies_l_pi: h is not a subgroup of g");
  PropertyVerdict verdict;
  Group closure = normal_closure(lat.ambient, h);
  // Trivial closure has no maximal G-invariant subgroup: vacuous pass.
  for (const Group& k : maximal_g_invariant_in(lat, closure))
    check_condition(lat, k, join(h, k), std::nullopt, verdict);
  return verdict;
}

PropertyVerdict satisfies_l_pi(const Group& g, const Group& h) {
  return satisfies_l_pi(normal_subgroups(g), h);
}

PropertyVerdict satisfies_pi(const NormalLattice& lat, const Group& h) {
  if (!h.is_subgroup_of(lat.ambient))
    throw Error("satisfies_pi: h is not a subgroup of g");
  PropertyVerdict verdict;
  for (const auto& [lo, hi] : lat.covers) {
    const Group& k = lat.nodes[lo];
    const Group& l = lat.nodes[hi];
    Group hk = join(h, k);
    // X/K = HK/K n L/K with K <= X, computed as X = HK n L inside G.
    Group x = intersection(hk, l);
    check_condition(lat, k, x, l, verdict);
  }
  return verdict;
}

PropertyVerdict satisfies_pi(const Group& g, const Group& h) {
  return satisfies_pi(normal_subgroups(g), h);
}

std::string explain(const PropertyVerdict& v) {
  if (v.holds) {
    if (v.conditions_checked == 0) return "PASS (vacuous)";
    return "PASS (" + std::to_string(v.conditions_checked) +
           " conditions checked)";
  }
  std::string out = "FAIL (" + std::to_string(v.witnesses.size()) + " of " +
                    std::to_string(v.conditions_checked) +
                    " conditions violated)\n";
  for (const auto& w : v.witnesses) {
    out += "  chief factor over K of order " + std::to_string(w.lower.order());
    if (w.upper)
      out += " with L of order " + std::to_string(w.upper->order());
    out += ": subgroup of order " + std::to_string(w.subject.order()) +
           ", index " + std::to_string(w.index) + ", pi = " + to_string(w.pi) +
           ", offending prime " + std::to_string(w.offending_prime) + "\n";
  }
  return out;
}

}  // namespace gk

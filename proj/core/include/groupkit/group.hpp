#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "groupkit/perm.hpp"

namespace gk {

/// Groups whose full element set may be materialized. Anything larger
/// fails loudly (CapExceeded); there is no approximation path.
inline constexpr std::size_t kElementCap = 20000;

/// A permutation group given by generators, backed by a stabilizer
/// chain (deterministic Schreier-Sims). Immutable after construction;
/// the element set is cached write-once, so any number of readers may
/// share a Group.
class Group {
 public:
  Group() = default;  // invalid until assigned

  static Group trivial(int degree);
  static Group generated(int degree, std::vector<Perm> gens);

  /// Subgroup construction: every generator must pass the ambient
  /// membership test. The result records the ambient group.
  static Group subgroup_of(const Group& ambient, std::vector<Perm> gens);

  bool valid() const { return impl_ != nullptr; }
  int degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  /// Membership by sifting through the stabilizer chain.
  bool contains(const Perm& x) const;

  /// The full element set in canonical (lexicographic) order. Throws
  /// CapExceeded when order() > cap; never truncates.
  const std::vector<Perm>& elements(std::size_t cap = kElementCap) const;

  /// True iff every generator of *this lies in other (same degree).
  bool is_subgroup_of(const Group& other) const;

  /// Equality as subgroups of Sym(degree): same degree and same element
  /// set (decided via orders plus generator membership, no enumeration).
  bool same_group_as(const Group& other) const;

  /// Ambient group recorded by subgroup_of, or an invalid Group.
  Group ambient() const;

 private:
  struct Impl;
  static std::shared_ptr<Impl> make_impl(int degree, std::vector<Perm> gens);
  std::shared_ptr<const Impl> impl_;
};

/// N_g(h) by full element scan of g; requires h <= g and |g| <= cap.
/// Exact at desk scale and doubles as its own specification.
Group normalizer(const Group& g, const Group& h,
                 std::size_t cap = kElementCap);

/// C_g(h) = {x in g : x commutes with every element of h}.
Group centralizer(const Group& g, const Group& h,
                  std::size_t cap = kElementCap);

/// The group generated by {x^-1 s x : s generator of h}.
Group conjugate_subgroup(const Group& h, const Perm& x);

/// Group generated by the generators of a and b together.
Group join(const Group& a, const Group& b);

/// a n b, by scanning the smaller factor's elements.
Group intersection(const Group& a, const Group& b,
                   std::size_t cap = kElementCap);

/// True iff n <= g and n is invariant under conjugation by g's generators.
bool is_normal_in(const Group& g, const Group& n);

}  // namespace gk

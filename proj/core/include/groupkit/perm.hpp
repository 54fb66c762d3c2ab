#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "groupkit/common.hpp"

namespace gk {

/// A permutation of {0..degree-1}, stored as its image sequence.
/// External cycle notation is 1-based; the shift happens only at
/// parse/format boundaries.
///
/// Composition is left-to-right everywhere: (a*b)(x) = b(a(x)),
/// i.e. a*b means "apply a, then b".
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right composition: result maps x to b(a(x)). Throws on
/// degree mismatch.
Perm operator*(const Perm& a, const Perm& b);

/// x^{-1} * g * x.
Perm conjugate(const Perm& g, const Perm& x);

/// p^k (k >= 0).
Perm power(const Perm& p, std::uint64_t k);

/// Least k >= 1 with p^k = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Perm& p);

/// Nontrivial cycles of p, each starting at its smallest point, cycles
/// ordered by first point. 0-based.
std::vector<std::vector<int>> cycles(const Perm& p);

/// Disjoint-cycle notation with 1-based points, "()" for the identity.
std::string to_cycle_string(const Perm& p);

/// Parse disjoint-cycle notation (possibly several cycles, e.g.
/// "(1,2)(3,4)") into a permutation of the given degree. Points are
/// 1-based. Throws ParseError on bad syntax, a point out of range, or a
/// point repeated within a cycle.
/// line/col_offset shift the positions reported in ParseError, for
/// callers that embed the cycle expression inside a larger file.
Perm parse_cycles(const std::string& text, int degree, int line = 1,
                  int col_offset = 0);

}  // namespace gk

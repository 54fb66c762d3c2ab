#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A size cap was exceeded; the computation refuses rather than truncating.
struct CapExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending. prime_factors(1) = {}.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Full factorization as (prime, exponent) pairs, ascending by prime.
std::vector<std::pair<std::uint64_t, int>> factorization(std::uint64_t n);

/// True iff n is a power of p (n = p^k, k >= 0).
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// A sorted set of primes, the usual pi(n) of prime divisors.
struct PrimeSet {
  std::vector<std::uint64_t> primes;

  static PrimeSet of(std::uint64_t n) { return PrimeSet{prime_factors(n)}; }

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
  }
  bool operator==(const PrimeSet&) const = default;
};

std::string to_string(const PrimeSet& pi);

}  // namespace gk

#include "groupkit/perm.hpp"

#include <numeric>

namespace gk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorization(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::string to_string(const PrimeSet& pi) {
  std::string s = "{";
  for (std::size_t i = 0; i < pi.primes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pi.primes[i]);
  }
  return s + "}";
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw Error("image sequence is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.images_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (int x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error("degree mismatch in composition: " +
                std::to_string(a.degree()) + " vs " +
                std::to_string(b.degree()));
  std::vector<int> v(a.degree());
  for (int x = 0; x < a.degree(); ++x) v[x] = b(a(x));
  return Perm(std::move(v));
}

Perm conjugate(const Perm& g, const Perm& x) { return x.inverse() * g * x; }

Perm power(const Perm& p, std::uint64_t k) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (const auto& c : cycles(p)) ord = std::lcm<std::uint64_t>(ord, c.size());
  return ord;
}

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      cyc.push_back(x);
      seen[x] = 1;
      x = p(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string to_cycle_string(const Perm& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s;
}

Perm parse_cycles(const std::string& text, int degree, int line,
                  int col_offset) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto col = [&] { return col_offset + static_cast<int>(i) + 1; };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  skip_ws();
  if (i >= text.size()) throw ParseError("expected a cycle expression", line, col());
  bool any_cycle = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw ParseError(std::string("expected '(' but found '") + text[i] + "'",
                       line, col());
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cyc.empty()) {
        if (text[i] != ',' && text[i] != ' ')
          throw ParseError(std::string("expected ',' or ')' but found '") +
                               text[i] + "'",
                           line, col());
        if (text[i] == ',') ++i;
        skip_ws();
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point number", line, col());
      int start_col = col();
      long v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1 << 20) throw ParseError("point number too large", line, start_col);
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                             std::to_string(degree),
                         line, start_col);
      int pt = static_cast<int>(v) - 1;
      if (used[pt])
        throw ParseError("duplicate point " + std::to_string(v), line, start_col);
      used[pt] = 1;
      cyc.push_back(pt);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", line, col());
    ++i;  // ')'
    any_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
    if (i >= text.size()) break;
  }
  if (!any_cycle) throw ParseError("expected a cycle expression", line, col());
  return Perm(std::move(images));
}

}  // namespace gk

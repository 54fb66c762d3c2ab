#include "groupkit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace gk {

namespace {

struct Level {
  int base = -1;
  std::vector<Perm> gens;           // generate the current stabilizer
  std::map<int, Perm> transversal;  // point -> u with u(base) = point
};

// Deterministic textbook Schreier-Sims. No generator filtering: by
// Schreier's lemma each level's generators generate the stabilizer
// exactly, so sifting is an exact membership test. Fine at desk scale.
std::vector<Level> build_chain(int degree, std::vector<Perm> gens) {
  std::vector<Level> levels;
  while (!gens.empty()) {
    int b = -1;
    for (int x = 0; x < degree && b < 0; ++x)
      for (const auto& g : gens)
        if (g(x) != x) {
          b = x;
          break;
        }
    if (b < 0) break;  // all generators are the identity

    Level lvl;
    lvl.base = b;
    lvl.gens = gens;
    lvl.transversal.emplace(b, Perm::identity(degree));
    std::deque<int> queue{b};
    while (!queue.empty()) {
      int pt = queue.front();
      queue.pop_front();
      const Perm u = lvl.transversal.at(pt);
      for (const auto& s : gens) {
        int img = s(pt);
        if (!lvl.transversal.count(img)) {
          lvl.transversal.emplace(img, u * s);
          queue.push_back(img);
        }
      }
    }

    std::set<Perm> next;
    for (const auto& [pt, u] : lvl.transversal) {
      for (const auto& s : gens) {
        const Perm& uq = lvl.transversal.at(s(pt));
        Perm schreier = (u * s) * uq.inverse();
        if (!schreier.is_identity()) next.insert(std::move(schreier));
      }
    }
    gens.assign(next.begin(), next.end());
    levels.push_back(std::move(lvl));
  }
  return levels;
}

bool chain_contains(const std::vector<Level>& levels, Perm x) {
  for (const auto& lvl : levels) {
    auto it = lvl.transversal.find(x(lvl.base));
    if (it == lvl.transversal.end()) return false;
    x = x * it->second.inverse();
  }
  return x.is_identity();
}

}  // namespace

struct Group::Impl {
  int degree = 0;
  std::vector<Perm> gens;  // sorted, deduplicated, identity removed
  std::vector<Level> levels;
  std::uint64_t order = 1;
  std::shared_ptr<const Impl> ambient;

  mutable std::mutex elems_mutex;
  mutable std::vector<Perm> elems;  // empty until computed; sorted

  const std::vector<Perm>& elements(std::size_t cap) const {
    std::lock_guard lock(elems_mutex);
    if (!elems.empty()) return elems;
    if (order > cap)
      throw CapExceeded("group of order " + std::to_string(order) +
                        " exceeds element cap " + std::to_string(cap));
    std::vector<Perm> acc{Perm::identity(degree)};
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      std::vector<Perm> next;
      next.reserve(acc.size() * it->transversal.size());
      for (const auto& [pt, u] : it->transversal)
        for (const auto& e : acc) next.push_back(e * u);
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    elems = std::move(acc);
    return elems;
  }
};

std::shared_ptr<Group::Impl> Group::make_impl(int degree,
                                              std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree));
  std::erase_if(gens, [](const Perm& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  auto impl = std::make_shared<Group::Impl>();
  impl->degree = degree;
  impl->gens = std::move(gens);
  impl->levels = build_chain(degree, impl->gens);
  impl->order = 1;
  for (const auto& lvl : impl->levels) impl->order *= lvl.transversal.size();
  return impl;
}

Group Group::trivial(int degree) { return generated(degree, {}); }

Group Group::generated(int degree, std::vector<Perm> gens) {
  Group g;
  g.impl_ = make_impl(degree, std::move(gens));
  return g;
}

Group Group::subgroup_of(const Group& ambient, std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (!ambient.contains(g))
      throw Error("generator " + to_cycle_string(g) +
                  " lies outside the ambient group");
  auto impl = make_impl(ambient.degree(), std::move(gens));
  impl->ambient = ambient.impl_;
  Group g;
  g.impl_ = std::move(impl);
  return g;
}

int Group::degree() const { return impl_->degree; }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }
std::uint64_t Group::order() const { return impl_->order; }

bool Group::contains(const Perm& x) const {
  if (x.degree() != degree())
    throw Error("degree mismatch in membership test");
  return chain_contains(impl_->levels, x);
}

const std::vector<Perm>& Group::elements(std::size_t cap) const {
  return impl_->elements(cap);
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool Group::same_group_as(const Group& other) const {
  return degree() == other.degree() && order() == other.order() &&
         is_subgroup_of(other);
}

Group Group::ambient() const {
  Group g;
  if (impl_) g.impl_ = impl_->ambient;
  return g;
}

namespace {

Group extend_by(const Group& cur, const Perm& x) {
  std::vector<Perm> gens = cur.generators();
  gens.push_back(x);
  return Group::generated(cur.degree(), std::move(gens));
}

}  // namespace

Group normalizer(const Group& g, const Group& h, std::size_t cap) {
  if (!h.is_subgroup_of(g)) throw Error("normalizer: h is not a subgroup of g");
  Group cur = Group::generated(g.degree(), h.generators());
  for (const auto& x : g.elements(cap)) {
    if (cur.contains(x)) continue;
    bool normalizes = true;
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) cur = extend_by(cur, x);
  }
  return cur;
}

Group centralizer(const Group& g, const Group& h, std::size_t cap) {
  if (!h.is_subgroup_of(g))
    throw Error("centralizer: h is not a subgroup of g");
  Group cur = Group::trivial(g.degree());
  for (const auto& x : g.elements(cap)) {
    if (cur.contains(x)) continue;
    bool commutes = true;
    for (const auto& s : h.generators())
      if (s * x != x * s) {
        commutes = false;
        break;
      }
    if (commutes) cur = extend_by(cur, x);
  }
  return cur;
}

Group conjugate_subgroup(const Group& h, const Perm& x) {
  if (x.degree() != h.degree())
    throw Error("degree mismatch in subgroup conjugation");
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const auto& s : h.generators()) gens.push_back(conjugate(s, x));
  return Group::generated(h.degree(), std::move(gens));
}

Group join(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in join");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group::generated(a.degree(), std::move(gens));
}

Group intersection(const Group& a, const Group& b, std::size_t cap) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in intersection");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& big = a.order() <= b.order() ? b : a;
  Group cur = Group::trivial(a.degree());
  for (const auto& x : small.elements(cap)) {
    if (cur.contains(x)) continue;
    if (big.contains(x)) cur = extend_by(cur, x);
  }
  return cur;
}

bool is_normal_in(const Group& g, const Group& n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& s : n.generators())
      if (!n.contains(conjugate(s, x))) return false;
  return true;
}

}  // namespace gk

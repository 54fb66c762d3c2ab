#include "doctest.h"
#include "groupkit/props.hpp"
#include "helpers.hpp"

using namespace gk;
using namespace gktest;

namespace {

std::vector<Group> subgroups_of_order_in(const Group& g, std::uint64_t d) {
  std::set<std::vector<Perm>> seen;
  std::vector<Group> out;
  const auto& elems = g.elements();
  for (const auto& x : elems)
    for (const auto& y : elems) {
      Group s = Group::subgroup_of(g, {x, y});
      if (s.order() != d) continue;
      if (seen.insert(s.elements()).second) out.push_back(s);
    }
  return out;
}

}  // namespace

TEST_CASE("pi_number") {
  CHECK(pi_number(1, PrimeSet{}));
  CHECK(pi_number(12, PrimeSet::of(6)));
  CHECK_FALSE(pi_number(10, PrimeSet::of(6)));
  CHECK(pi_number(8, PrimeSet::of(2)));
}

TEST_CASE("all order-4 subgroups of S4 have the localized property") {
  Group s4 = symmetric(4);
  auto lat = normal_subgroups(s4);
  auto subs = subgroups_of_order_in(s4, 4);
  REQUIRE(subs.size() == 7);  // 3 cyclic, V4, 3 noncyclic non-normal
  for (const auto& h : subs) CHECK(satisfies_l_pi(lat, h).holds);
}

TEST_CASE("a 4-cycle fails the chief-factor property with the V4 witness") {
  Group s4 = symmetric(4);
  auto lat = normal_subgroups(s4);
  Group h = Group::subgroup_of(s4, {parse_cycles("(1,2,3,4)", 4)});
  auto v = satisfies_pi(lat, h);
  CHECK_FALSE(v.holds);
  REQUIRE(!v.witnesses.empty());
  const auto& w = v.witnesses.front();
  CHECK(w.lower.order() == 1);
  REQUIRE(w.upper.has_value());
  CHECK(w.upper->order() == 4);  // V4
  CHECK(w.index == 3);
  CHECK(w.offending_prime == 3);
  CHECK(w.pi == PrimeSet::of(2));
  CHECK(explain(v).find("FAIL") != std::string::npos);
}

TEST_CASE("the chief-factor property implies the localized one") {
  for (Group g : {symmetric(4), special_linear_2_3(), dihedral(12)}) {
    auto lat = normal_subgroups(g);
    const auto& elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); i += 3) {
      Group h = Group::subgroup_of(g, {elems[i]});
      if (satisfies_pi(lat, h).holds) CHECK(satisfies_l_pi(lat, h).holds);
    }
  }
}

TEST_CASE("both properties are conjugation-invariant") {
  Group g = symmetric(4);
  auto lat = normal_subgroups(g);
  Group h = Group::subgroup_of(g, {parse_cycles("(1,2,3,4)", 4)});
  for (const auto& x : g.elements()) {
    Group hx = conjugate_subgroup(h, x);
    CHECK(satisfies_l_pi(lat, hx).holds == satisfies_l_pi(lat, h).holds);
    CHECK(satisfies_pi(lat, hx).holds == satisfies_pi(lat, h).holds);
  }
}

TEST_CASE("trivial and normal subgroups pass vacuously or directly") {
  Group g = symmetric(4);
  auto lat = normal_subgroups(g);
  auto vt = satisfies_l_pi(lat, Group::trivial(4));
  CHECK(vt.holds);
  CHECK(vt.conditions_checked == 0);
  for (const auto& n : lat.nodes) {
    CHECK(satisfies_l_pi(lat, n).holds);
    CHECK(satisfies_pi(lat, n).holds);
  }
}

TEST_CASE("joining with a normal subgroup preserves the property") {
  // library-level statement of the first transfer lemma
  Group g = special_linear_2_3();
  auto lat = normal_subgroups(g);
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); i += 2) {
    Group h = Group::subgroup_of(g, {elems[i]});
    if (!satisfies_l_pi(lat, h).holds) continue;
    for (const auto& n : lat.nodes)
      CHECK(satisfies_l_pi(lat, join(h, n)).holds);
  }
}

TEST_CASE("lattice and convenience overloads agree") {
  Group g = symmetric(4);
  auto lat = normal_subgroups(g);
  Group h = Group::subgroup_of(g, {parse_cycles("(1,2,3,4)", 4)});
  CHECK(satisfies_l_pi(lat, h).holds == satisfies_l_pi(g, h).holds);
  CHECK(satisfies_pi(lat, h).holds == satisfies_pi(g, h).holds);
}

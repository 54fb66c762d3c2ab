#include <map>

#include "doctest.h"
#include "helpers.hpp"

using namespace gk;
using namespace gktest;

TEST_CASE("conjugacy classes partition the group") {
  for (Group g : {symmetric(4), dihedral(12), special_linear_2_3()}) {
    auto classes = conjugacy_classes(g);
    std::set<Perm> all;
    std::size_t total = 0;
    for (const auto& c : classes) {
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
      CHECK(c.representative == c.members.front());
      total += c.members.size();
      all.insert(c.members.begin(), c.members.end());
    }
    CHECK(total == g.order());
    CHECK(all == to_set(g));
    CHECK(classes.front().representative.is_identity());
  }
}

TEST_CASE("S4 class sizes") {
  auto classes = conjugacy_classes(symmetric(4));
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("normal lattice equals the union-of-classes enumeration") {
  for (Group g : {symmetric(4), dihedral(16), alternating(5),
                  special_linear_2_3(),
                  direct_product(cyclic(2), symmetric(3))}) {
    auto lat = normal_subgroups(g);
    auto oracle = normal_subgroups_by_classes(g);
    std::set<std::set<Perm>> got, want;
    for (const auto& n : lat.nodes) got.insert(to_set(n));
    for (auto& s : oracle) want.insert(std::move(s));
    CHECK(got == want);
  }
}

TEST_CASE("lattice covers admit no intermediate node") {
  auto lat = normal_subgroups(direct_product(cyclic(2), symmetric(4)));
  for (const auto& [lo, hi] : lat.covers) {
    CHECK(lat.leq(lo, hi));
    CHECK(lo != hi);
    for (int m = 0; m < static_cast<int>(lat.nodes.size()); ++m) {
      if (m == lo || m == hi) continue;
      bool intermediate = lat.leq(lo, m) && lat.leq(m, hi);
      CHECK_FALSE(intermediate);
    }
  }
}

TEST_CASE("normal closure") {
  Group s4 = symmetric(4);
  Group h = Group::subgroup_of(s4, {parse_cycles("(1,2)(3,4)", 4)});
  CHECK(normal_closure(s4, h).order() == 4);  // V4
  Group t = Group::subgroup_of(s4, {parse_cycles("(1,2)", 4)});
  CHECK(normal_closure(s4, t).order() == 24);
}

TEST_CASE("chief series factors are invariant under the series choice") {
  // Jordan-Holder: any maximal chain through the lattice yields the
  // same multiset of factor orders as the canonical series.
  for (Group g : {symmetric(4), special_linear_2_3(), dihedral(20)}) {
    auto lat = normal_subgroups(g);
    auto series = chief_series(lat);
    std::multiset<std::uint64_t> canon;
    for (const auto& cf : series) canon.insert(cf.factor_order);

    // walk an arbitrary maximal chain: always pick the *last* cover
    std::multiset<std::uint64_t> other;
    int at = 0;
    while (lat.nodes[at].order() < g.order()) {
      auto ups = lat.covers_above(at);
      REQUIRE(!ups.empty());
      int nxt = ups.back();
      other.insert(lat.nodes[nxt].order() / lat.nodes[at].order());
      at = nxt;
    }
    CHECK(canon == other);
  }
}

TEST_CASE("chief series of S4 is 4, 3, 2 from the bottom") {
  auto series = chief_series(symmetric(4));
  REQUIRE(series.size() == 3);
  CHECK(series[0].factor_order == 4);
  CHECK(series[1].factor_order == 3);
  CHECK(series[2].factor_order == 2);
  for (const auto& cf : series)
    CHECK(is_chief_factor(symmetric(4), cf.lower, cf.upper));
}

TEST_CASE("minimal normal subgroups") {
  auto mins = minimal_normal_subgroups(symmetric(4));
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);

  auto mins2 = minimal_normal_subgroups(cyclic(6));
  std::multiset<std::uint64_t> orders;
  for (const auto& m : mins2) orders.insert(m.order());
  CHECK(orders == std::multiset<std::uint64_t>{2, 3});
}

TEST_CASE("maximal invariant subgroups are the covers below") {
  Group g = direct_product(cyclic(2), cyclic(2));
  auto lat = normal_subgroups(g);
  auto maxes = maximal_g_invariant_in(lat, g);
  CHECK(maxes.size() == 3);
  for (const auto& m : maxes) CHECK(m.order() == 2);
  CHECK(maximal_g_invariant_in(lat, Group::trivial(g.degree())).empty());
}

TEST_CASE("quotient group is a faithful coset action") {
  Group s4 = symmetric(4);
  auto lat = normal_subgroups(s4);
  Group v4 = lat.nodes[1];
  REQUIRE(v4.order() == 4);
  Quotient q = quotient_group(s4, v4);
  CHECK(q.group.order() == 6);

  // the map is a homomorphism with kernel exactly v4
  const auto& elems = s4.elements();
  for (std::size_t i = 0; i < elems.size(); i += 5)
    for (std::size_t j = 0; j < elems.size(); j += 7)
      CHECK(q.map.image(elems[i] * elems[j]) ==
            q.map.image(elems[i]) * q.map.image(elems[j]));
  for (const auto& x : elems)
    CHECK(q.map.image(x).is_identity() == v4.contains(x));
}

TEST_CASE("quotient determinism and caps") {
  Group g = dihedral(24);
  auto lat = normal_subgroups(g);
  Group n = lat.nodes[1];
  Quotient a = quotient_group(g, n);
  Quotient b = quotient_group(g, n);
  CHECK(a.group.generators() == b.group.generators());
  CHECK_THROWS_AS(quotient_group(g, Group::trivial(g.degree()), 4),
                  CapExceeded);
  CHECK_THROWS_AS(
      quotient_group(symmetric(4),
                     Group::subgroup_of(symmetric(4),
                                        {parse_cycles("(1,2)", 4)})),
      Error);  // not normal
}

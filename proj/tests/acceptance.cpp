// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "groupkit/harness.hpp"

using namespace gk;

namespace {

int failures = 0;

void report(int number, const char* what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << what << "\n";
  if (!ok) ++failures;
}

// 1: the worked example separating the two embedding properties.
bool worked_example() {
  Group s4 = symmetric(4);
  auto lat = normal_subgroups(s4);

  std::set<std::vector<Perm>> seen;
  std::vector<Group> order4;
  const auto& elems = s4.elements();
  for (const auto& x : elems)
    for (const auto& y : elems) {
      Group s = Group::subgroup_of(s4, {x, y});
      if (s.order() == 4 && seen.insert(s.elements()).second)
        order4.push_back(s);
    }
  if (order4.size() != 7) return false;
  for (const auto& h : order4)
    if (!satisfies_l_pi(lat, h).holds) return false;

  Group c4 = Group::subgroup_of(s4, {parse_cycles("(1,2,3,4)", 4)});
  auto v = satisfies_pi(lat, c4);
  if (v.holds || v.witnesses.empty()) return false;
  const auto& w = v.witnesses.front();
  return w.lower.order() == 1 && w.upper && w.upper->order() == 4 &&
         w.index == 3;
}

// 2: S4 is not 2-supersoluble and appears as the sharpness example.
bool sharpness() {
  if (is_p_supersoluble(symmetric(4), 2)) return false;
  auto rep = verify_theorem_a({{"S4", symmetric(4)}});
  for (const auto& c : rep.cases)
    if (c.group == "S4" && c.p == 2 && c.d == 4 &&
        c.status == CaseStatus::Sharpness)
      return true;
  return false;
}

// 3: main-theorem sweep over the full corpus, zero violations, timed.
bool sweep(const std::vector<NamedGroup>& corpus) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = verify_theorem_a(corpus);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return corpus.size() >= 60 && !rep.has_violation() && secs < 600.0;
}

// 4: every lemma suite verifies non-vacuously with zero violations.
bool lemma_suites(const std::vector<NamedGroup>& corpus) {
  auto rep = verify_lemma_suite(corpus);
  if (rep.has_violation()) return false;
  auto summary = rep.suite_summary();
  const char* suites[] = {"lemma-2.1.1", "lemma-2.1.2", "lemma-2.1.3",
                          "lemma-2.5",   "lemma-2.7",   "lemma-2.8",
                          "lemma-2.9",   "lemma-2.10",  "theorem-3.1",
                          "theorem-3.2", "lemma-3.3",   "lemma-3.4",
                          "theorem-3.5", "theorem-3.6"};
  for (const char* s : suites) {
    auto it = summary.find(s);
    if (it == summary.end() || it->second[1] == 0 || it->second[2] != 0)
      return false;
  }
  return true;
}

// 5: independent oracles agree with the engine over the whole corpus.
bool oracles(const std::vector<NamedGroup>& corpus) {
  // order vs brute-force closure, every corpus group of order <= 2000
  for (const auto& ng : corpus) {
    const Group& g = ng.group;
    if (g.order() > 2000) continue;
    std::set<Perm> closure{Perm::identity(g.degree())};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Perm> snap(closure.begin(), closure.end());
      for (const auto& x : snap)
        for (const auto& s : g.generators())
          if (closure.insert(x * s).second) grew = true;
    }
    if (g.order() != closure.size()) return false;
  }

  // normalizer and centralizer vs a definition scan, cyclic subgroups
  for (const auto& ng : corpus) {
    const Group& g = ng.group;
    if (g.order() > 60) continue;
    const auto& elems = g.elements();
    Group h = Group::subgroup_of(g, {elems.back()});
    auto h_elems = h.elements();
    std::set<Perm> h_set(h_elems.begin(), h_elems.end());
    std::set<Perm> norm, cent;
    for (const auto& x : elems) {
      std::set<Perm> conj;
      for (const auto& e : h_set) conj.insert(conjugate(e, x));
      if (conj == h_set) norm.insert(x);
      bool commutes = true;
      for (const auto& e : h_set)
        if (e * x != x * e) commutes = false;
      if (commutes) cent.insert(x);
    }
    auto ne = normalizer(g, h).elements();
    auto ce = centralizer(g, h).elements();
    if (std::set<Perm>(ne.begin(), ne.end()) != norm) return false;
    if (std::set<Perm>(ce.begin(), ce.end()) != cent) return false;
  }

  // normal lattice vs unions of conjugacy classes, <= 12 classes
  for (const auto& ng : corpus) {
    const Group& g = ng.group;
    auto classes = conjugacy_classes(g);
    if (classes.size() > 12) continue;
    std::set<std::set<Perm>> want;
    for (std::size_t mask = 1; mask < (std::size_t{1} << classes.size());
         mask += 2) {
      std::set<Perm> u;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (mask & (std::size_t{1} << i))
          u.insert(classes[i].members.begin(), classes[i].members.end());
      bool closed = true;
      for (const auto& a : u) {
        for (const auto& b : u)
          if (!u.count(a * b)) { closed = false; break; }
        if (!closed) break;
      }
      if (closed) want.insert(std::move(u));
    }
    std::set<std::set<Perm>> got;
    for (const auto& n : normal_subgroups(g).nodes) {
      auto e = n.elements();
      got.insert(std::set<Perm>(e.begin(), e.end()));
    }
    if (got != want) return false;
  }

  // greedy hypercenters vs the chain-based definition, every group
  for (const auto& ng : corpus) {
    const Group& g = ng.group;
    auto lat = normal_subgroups(g);
    auto chain_best = [&](auto factor_ok) {
      std::vector<char> adm(lat.nodes.size(), 0);
      adm[0] = 1;
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& [lo, hi] : lat.covers)
          if (adm[lo] && !adm[hi] &&
              factor_ok(lat.nodes[hi].order() / lat.nodes[lo].order())) {
            adm[hi] = 1;
            grew = true;
          }
      }
      int best = 0;
      for (std::size_t i = 0; i < lat.nodes.size(); ++i)
        if (adm[i] && lat.nodes[i].order() > lat.nodes[best].order())
          best = static_cast<int>(i);
      return lat.nodes[best];
    };
    if (!z_u(lat).same_group_as(
            chain_best([](std::uint64_t f) { return is_prime(f); })))
      return false;
    for (std::uint64_t p : prime_factors(g.order()))
      if (!z_u_p(lat, p).same_group_as(chain_best(
              [p](std::uint64_t f) { return f == p || f % p != 0; })))
        return false;
  }
  return true;
}

// 6: landmark structural values.
bool landmarks() {
  if (z_u(symmetric(4)).order() != 1) return false;
  if (z_u_p(special_linear_2_3(), 2).order() != 2) return false;

  Group opp = o_p_prime_p(symmetric(4), 2);
  if (opp.order() != 4) return false;
  for (const auto& x : opp.elements())
    if (!x.is_identity() && element_order(x) != 2) return false;

  auto series = chief_series(symmetric(4));
  if (series.size() != 3 || series[0].factor_order != 4 ||
      series[1].factor_order != 3 || series[2].factor_order != 2)
    return false;

  return is_quaternion_free(dihedral(8)) &&
         !is_quaternion_free(generalized_quaternion(8)) &&
         !is_quaternion_free(generalized_quaternion(16));
}

// 7: byte-identical machine reports for equal seeds.
bool deterministic_reports(const std::vector<NamedGroup>& corpus) {
  HarnessOptions opt;
  std::ostringstream a, b;
  CampaignReport ra = verify_theorem_a(corpus, opt);
  merge_reports(ra, verify_lemma_suite(corpus, opt));
  write_machine_report(ra, a);
  CampaignReport rb = verify_theorem_a(corpus, opt);
  merge_reports(rb, verify_lemma_suite(corpus, opt));
  write_machine_report(rb, b);
  return !a.str().empty() && a.str() == b.str();
}

}  // namespace

int main() {
  auto corpus = builtin_corpus(200);
  std::vector<NamedGroup> small(corpus.begin(),
                                corpus.begin() + std::min<std::size_t>(
                                                     corpus.size(), 25));

  report(1, "worked example separates the two embedding properties",
         worked_example());
  report(2, "S4 shows the size conditions are sharp", sharpness());
  report(3, "main-theorem sweep: >=60 groups, zero violations, in time",
         sweep(corpus));
  report(4, "all lemma suites verify non-vacuously, zero violations",
         lemma_suites(corpus));
  report(5, "engine agrees with independent oracles", oracles(corpus));
  report(6, "landmark structural values", landmarks());
  report(7, "machine reports byte-identical across runs",
         deterministic_reports(small));

  std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}

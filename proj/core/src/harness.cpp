#include "groupkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gk {

namespace {

using Json = nlohmann::ordered_json;

struct GroupCtx {
  std::string name;
  Group g;
  NormalLattice lat;
  std::vector<ChiefFactorPair> series;
  const HarnessOptions* opt = nullptr;
  std::mt19937_64 rng;

  std::map<std::vector<Perm>, bool> lpi_cache;
  std::map<std::uint64_t, Group> sylow_cache;
  Group z_u_group;
  std::map<std::uint64_t, Group> z_u_p_cache;

  GroupCtx(const NamedGroup& ng, const HarnessOptions& options,
           std::uint64_t rng_seed)
      : name(ng.name),
        g(ng.group),
        lat(normal_subgroups(ng.group, options.element_cap)),
        series(chief_series(lat)),
        opt(&options),
        rng(rng_seed) {}

  bool lpi(const Group& h) {
    auto key = h.elements(opt->element_cap);
    auto it = lpi_cache.find(key);
    if (it != lpi_cache.end()) return it->second;
    bool holds = satisfies_l_pi(lat, h).holds;
    lpi_cache.emplace(std::move(key), holds);
    return holds;
  }

  const Group& sylow(std::uint64_t p) {
    auto it = sylow_cache.find(p);
    if (it == sylow_cache.end())
      it = sylow_cache.emplace(p, sylow_subgroup(g, p, opt->element_cap)).first;
    return it->second;
  }

  const Group& hypercenter() {
    if (!z_u_group.valid()) z_u_group = z_u(lat);
    return z_u_group;
  }

  const Group& p_hypercenter(std::uint64_t p) {
    auto it = z_u_p_cache.find(p);
    if (it == z_u_p_cache.end()) it = z_u_p_cache.emplace(p, z_u_p(lat, p)).first;
    return it->second;
  }
};

// All subgroups of the given order in a p-group; |P| itself is allowed.
std::vector<Group> p_subgroups_of_order(const Group& p_group,
                                        std::uint64_t d) {
  if (d == p_group.order()) return {p_group};
  if (d == 1) return {Group::trivial(p_group.degree())};
  return subgroups_of_order(p_group, d);
}

bool all_lpi(GroupCtx& ctx, const std::vector<Group>& subs) {
  for (const auto& s : subs)
    if (!ctx.lpi(s)) return false;
  return true;
}

// Deterministic sample of subgroups generated by one or two elements.
std::vector<Group> sample_subgroups(GroupCtx& ctx) {
  const auto& elems = ctx.g.elements(ctx.opt->element_cap);
  std::map<std::vector<Perm>, Group> seen;
  std::size_t want = ctx.opt->subgroup_samples;
  for (std::size_t tries = 0; tries < 6 * want && seen.size() < want;
       ++tries) {
    const Perm& x = elems[ctx.rng() % elems.size()];
    const Perm& y = elems[ctx.rng() % elems.size()];
    Group s = Group::generated(ctx.g.degree(),
                               tries % 2 ? std::vector<Perm>{x}
                                         : std::vector<Perm>{x, y});
    seen.emplace(s.elements(ctx.opt->element_cap), s);
  }
  std::vector<Group> out;
  for (auto& [key, grp] : seen) out.push_back(grp);
  return out;
}

// At most `limit` nodes, evenly spaced through the sorted node list;
// keeps runs deterministic on lattices with many nodes.
std::vector<int> select_nodes(const NormalLattice& lat, std::size_t limit,
                              bool skip_trivial) {
  std::vector<int> idx;
  for (int i = skip_trivial ? 1 : 0; i < static_cast<int>(lat.nodes.size());
       ++i)
    idx.push_back(i);
  if (idx.size() <= limit) return idx;
  std::vector<int> out;
  for (std::size_t k = 0; k < limit; ++k)
    out.push_back(idx[k * idx.size() / limit]);
  return out;
}

std::string order_of(const Group& g) { return std::to_string(g.order()); }

void add_instance(CampaignReport& rep, std::string suite, const GroupCtx& ctx,
                  std::string detail, InstanceStatus status) {
  rep.instances.push_back(
      {std::move(suite), ctx.name, std::move(detail), status});
}

// ---------------------------------------------------------------- Theorem A

void theorem_a_for_group(GroupCtx& ctx, CampaignReport& rep) {
  const std::uint64_t order = ctx.g.order();
  for (std::uint64_t p : prime_factors(order)) {
    const Group& P = ctx.sylow(p);
    if (P.order() <= p) continue;  // no d with 1 < d < |P|
    // |P n O_{p'p}(G)| is the p-part of |O_{p'p}(G)| since the
    // intersection is a Sylow p-subgroup of the normal O_{p'p}(G).
    const std::uint64_t opp_p =
        p_part(o_p_prime_p(ctx.lat, p).order(), p).value;
    const bool conclusion = is_p_supersoluble(ctx.series, p);

    bool qfree = true;
    bool qfree_known = false;
    std::vector<Group> cyclic4;
    bool cyclic4_known = false;

    for (std::uint64_t d = p; d < P.order(); d *= p) {
      auto subs = subgroups_of_order(P, d);
      if (subs.size() > ctx.opt->instance_cap) {
        rep.skipped.push_back(ctx.name + ": p=" + std::to_string(p) +
                              " d=" + std::to_string(d) + ": " +
                              std::to_string(subs.size()) +
                              " subgroups exceed instance cap");
        continue;
      }
      TheoremACase c;
      c.group = ctx.name;
      c.order = order;
      c.p = p;
      c.d = d;
      c.size_d_eq_p = (d == p);
      c.size_opp = (d <= opp_p / p);
      c.size_sqrt = (d * d <= P.order());
      c.hyp1 = all_lpi(ctx, subs);
      if (d == p && p == 2) {
        if (!qfree_known) {
          qfree = is_quaternion_free(P, ctx.opt->qfree_cap);
          qfree_known = true;
        }
        c.hyp2_applicable = !qfree;
        if (c.hyp2_applicable) {
          if (!cyclic4_known) {
            cyclic4 = cyclic_subgroups_of_order4(P);
            cyclic4_known = true;
          }
          c.hyp2 = all_lpi(ctx, cyclic4);
        }
      }
      c.conclusion = conclusion;
      c.converse_note = conclusion && !c.hyp1;

      const bool any_size = c.size_d_eq_p || c.size_opp || c.size_sqrt;
      const bool hyps = c.hyp1 && (!c.hyp2_applicable || c.hyp2);
      if (any_size && hyps && !conclusion)
        c.status = CaseStatus::Violation;
      else if (!any_size && c.hyp1 && !conclusion)
        c.status = CaseStatus::Sharpness;
      else
        c.status = CaseStatus::Ok;
      rep.cases.push_back(std::move(c));
    }
  }
}

// ------------------------------------------------------------- Lemma suites

void suite_2_1(GroupCtx& ctx, CampaignReport& rep) {
  auto samples = sample_subgroups(ctx);

  // (1): H L-Pi implies HN L-Pi.
  for (int ni : select_nodes(ctx.lat, 12, false)) {
    const Group& n = ctx.lat.nodes[ni];
    for (const auto& h : samples) {
      std::string detail = "|H|=" + order_of(h) + " |N|=" + order_of(n);
      if (!ctx.lpi(h)) {
        add_instance(rep, "lemma-2.1.1", ctx, detail,
                     InstanceStatus::HypothesisFailed);
        continue;
      }
      add_instance(rep, "lemma-2.1.1", ctx, detail,
                   ctx.lpi(join(h, n)) ? InstanceStatus::Verified
                                       : InstanceStatus::Violated);
    }
  }

  // (2) and (3): transfer to the quotient G/N.
  for (int ni : select_nodes(ctx.lat, 8, true)) {
    const Group& n = ctx.lat.nodes[ni];
    Quotient q;
    try {
      q = quotient_group(ctx.g, n, ctx.opt->quotient_cap);
    } catch (const CapExceeded&) {
      rep.skipped.push_back(ctx.name + ": quotient by node of order " +
                            order_of(n) + " exceeds index cap");
      continue;
    }
    NormalLattice qlat = normal_subgroups(q.group, ctx.opt->element_cap);
    auto image_of = [&](const Group& h) {
      std::vector<Perm> gens;
      for (const auto& s : h.generators()) gens.push_back(q.map.image(s));
      return Group::generated(q.group.degree(), std::move(gens));
    };

    for (const auto& h : samples) {
      std::string detail = "|H|=" + order_of(h) + " |N|=" + order_of(n);
      bool lhs = ctx.lpi(h);
      if (lhs) {
        Group img = image_of(join(h, n));
        add_instance(rep, "lemma-2.1.2", ctx, detail,
                     satisfies_l_pi(qlat, img).holds
                         ? InstanceStatus::Verified
                         : InstanceStatus::Violated);
      } else {
        add_instance(rep, "lemma-2.1.2", ctx, detail,
                     InstanceStatus::HypothesisFailed);
      }

      // (3) needs N <= H or coprime orders; then L-Pi transfers both ways.
      bool coprime = std::gcd(h.order(), n.order()) == 1;
      bool contained = n.is_subgroup_of(h);
      if (!coprime && !contained) continue;
      Group img = image_of(join(h, n));
      bool rhs = satisfies_l_pi(qlat, img).holds;
      add_instance(rep, "lemma-2.1.3", ctx,
                   detail + (contained ? " N<=H" : " coprime"),
                   lhs == rhs ? InstanceStatus::Verified
                              : InstanceStatus::Violated);
    }
  }
}

void suite_2_5(GroupCtx& ctx, CampaignReport& rep) {
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    std::string detail = "p=" + std::to_string(p);
    if (!is_p_soluble(ctx.series, p)) {
      add_instance(rep, "lemma-2.5", ctx, detail + " (not p-soluble)",
                   InstanceStatus::HypothesisFailed);
      continue;
    }
    Group opp = o_p_prime_p(ctx.lat, p);
    bool ok = p_part(ctx.g.order() / opp.order(), p).value <
              p_part(opp.order(), p).value;
    add_instance(rep, "lemma-2.5", ctx, detail,
                 ok ? InstanceStatus::Verified : InstanceStatus::Violated);
  }
}

// N <= Z_{U_p}(G) iff the order-p subgroups of a Sylow p-subgroup P of
// N lie in Z_{U_p}(G), plus the cyclic order-4 subgroups when P is not
// quaternion-free. An equivalence, so every instance is decisive.
void suite_2_6(GroupCtx& ctx, CampaignReport& rep) {
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    const Group& z = ctx.p_hypercenter(p);
    for (const auto& node : ctx.lat.nodes) {
      if (node.is_trivial()) continue;
      Group pn = node.order() % p == 0
                     ? sylow_subgroup(node, p, ctx.opt->element_cap)
                     : Group::trivial(ctx.g.degree());
      bool cond = true;
      if (!pn.is_trivial()) {
        for (const auto& s : p_subgroups_of_order(pn, p))
          cond = cond && s.is_subgroup_of(z);
        if (cond && p == 2 && !is_quaternion_free(pn, ctx.opt->qfree_cap))
          for (const auto& s : cyclic_subgroups_of_order4(pn))
            cond = cond && s.is_subgroup_of(z);
      }
      bool concl = node.is_subgroup_of(z);
      add_instance(rep, "lemma-2.6", ctx,
                   "p=" + std::to_string(p) + " |N|=" + order_of(node),
                   cond == concl ? InstanceStatus::Verified
                                 : InstanceStatus::Violated);
    }
  }
}

void suite_2_7(const HarnessOptions& opt, CampaignReport& rep) {
  struct Fixture {
    std::string name;
    Group g;
    Group n;
  };
  std::vector<Fixture> fixtures;
  {
    Group s5 = symmetric(5);
    fixtures.push_back({"S5/A5", s5, Group::subgroup_of(s5, alternating(5).generators())});
    Group s6 = symmetric(6);
    fixtures.push_back({"S6/A6", s6, Group::subgroup_of(s6, alternating(6).generators())});
  }
  for (const auto& f : fixtures) {
    bool simple_nonabelian = false;
    {
      auto nlat = normal_subgroups(f.n, opt.element_cap);
      bool abelian = true;
      for (const auto& a : f.n.generators()) {
        for (const auto& b : f.n.generators())
          if (a * b != b * a) abelian = false;
      }
      simple_nonabelian = nlat.nodes.size() == 2 && !abelian;
    }
    bool trivial_centralizer =
        centralizer(f.g, f.n, opt.element_cap).is_trivial();
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      LemmaInstance inst;
      inst.suite = "lemma-2.7";
      inst.group = f.name;
      inst.detail = "p=" + std::to_string(p);
      if (!simple_nonabelian || !trivial_centralizer ||
          f.n.order() % p != 0) {
        inst.status = InstanceStatus::HypothesisFailed;
      } else {
        bool ok = p_part(f.g.order() / f.n.order(), p).value <
                  p_part(f.n.order(), p).value;
        inst.status = ok ? InstanceStatus::Verified : InstanceStatus::Violated;
      }
      rep.instances.push_back(std::move(inst));
    }
  }
}

void suite_2_8(GroupCtx& ctx, CampaignReport& rep) {
  if (ctx.g.is_trivial()) return;
  for (const auto& n : minimal_normal_subgroups(ctx.lat)) {
    if (!is_prime(n.order())) continue;
    const std::uint64_t p = n.order();
    // All subgroups of order p of G.
    std::map<std::vector<Perm>, Group> ks;
    for (const auto& x : ctx.g.elements(ctx.opt->element_cap)) {
      if (element_order(x) != p) continue;
      Group k = Group::generated(ctx.g.degree(), {x});
      ks.emplace(k.elements(), k);
      if (ks.size() >= ctx.opt->instance_cap) break;
    }
    for (auto& [key, k] : ks) {
      std::string detail =
          "p=" + std::to_string(p) + " |N|=" + order_of(n);
      if (!ctx.lpi(join(k, n))) {
        add_instance(rep, "lemma-2.8", ctx, detail,
                     InstanceStatus::HypothesisFailed);
        continue;
      }
      add_instance(rep, "lemma-2.8", ctx, detail,
                   ctx.lpi(k) ? InstanceStatus::Verified
                              : InstanceStatus::Violated);
    }
  }
}

void suite_2_9(GroupCtx& ctx, CampaignReport& rep) {
  if (ctx.g.is_trivial()) return;
  auto minimals = minimal_normal_subgroups(ctx.lat);
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    const Group& P = ctx.sylow(p);
    for (std::uint64_t d = p; d <= P.order(); d *= p) {
      auto subs = p_subgroups_of_order(P, d);
      if (subs.size() > ctx.opt->instance_cap) continue;
      bool relevant = false;
      for (const auto& n : minimals)
        if (n.order() % d == 0) relevant = true;
      if (!relevant) continue;
      bool hyp = all_lpi(ctx, subs);
      std::size_t minimal_p_count = 0;
      for (const auto& n : minimals)
        if (n.order() % p == 0) ++minimal_p_count;
      for (const auto& n : minimals) {
        if (n.order() % d != 0) continue;
        std::string detail = "p=" + std::to_string(p) +
                             " d=" + std::to_string(d) + " |N|=" + order_of(n);
        if (!hyp) {
          add_instance(rep, "lemma-2.9", ctx, detail,
                       InstanceStatus::HypothesisFailed);
          continue;
        }
        bool ok = n.order() == d;
        if (d >= p * p) ok = ok && minimal_p_count == 1;
        add_instance(rep, "lemma-2.9", ctx, detail,
                     ok ? InstanceStatus::Verified : InstanceStatus::Violated);
      }
    }
  }
}

void suite_2_10(GroupCtx& ctx, CampaignReport& rep) {
  if (ctx.g.is_trivial()) return;
  for (const auto& n : minimal_normal_subgroups(ctx.lat)) {
    for (std::uint64_t p : prime_factors(n.order())) {
      Group pn = sylow_subgroup(n, p, ctx.opt->element_cap);
      std::size_t count = 0;
      for (const auto& h : all_subgroups(pn)) {
        if (h.is_trivial()) continue;
        if (++count > ctx.opt->instance_cap) break;
        std::string detail = "p=" + std::to_string(p) + " |H|=" + order_of(h) +
                             " |N|=" + order_of(n);
        if (!ctx.lpi(h)) {
          add_instance(rep, "lemma-2.10", ctx, detail,
                       InstanceStatus::HypothesisFailed);
          continue;
        }
        add_instance(rep, "lemma-2.10", ctx, detail,
                     is_power_of(n.order(), p) ? InstanceStatus::Verified
                                               : InstanceStatus::Violated);
      }
    }
  }
}

// L-Pi hypotheses of the two hypercenter theorems for a p-group P inside
// the ambient group of ctx: every subgroup of order p, plus every cyclic
// subgroup of order 4 when p = 2 and P is not quaternion-free.
bool small_subgroup_hypotheses(GroupCtx& ctx, const Group& P, std::uint64_t p,
                               bool& evaluated) {
  evaluated = true;
  if (P.is_trivial()) return true;  // nothing quantified
  if (!all_lpi(ctx, p_subgroups_of_order(P, p))) return false;
  if (p == 2 && !is_quaternion_free(P, ctx.opt->qfree_cap))
    return all_lpi(ctx, cyclic_subgroups_of_order4(P));
  return true;
}

void suite_3_1(GroupCtx& ctx, CampaignReport& rep) {
  for (const auto& node : ctx.lat.nodes) {
    if (node.is_trivial()) continue;
    auto primes = prime_factors(node.order());
    if (primes.size() != 1) continue;  // P must be a p-group
    const std::uint64_t p = primes[0];
    bool evaluated = false;
    bool hyps = small_subgroup_hypotheses(ctx, node, p, evaluated);
    std::string detail = "p=" + std::to_string(p) + " |P|=" + order_of(node);
    if (!hyps) {
      add_instance(rep, "theorem-3.1", ctx, detail,
                   InstanceStatus::HypothesisFailed);
      continue;
    }
    add_instance(rep, "theorem-3.1", ctx, detail,
                 node.is_subgroup_of(ctx.hypercenter())
                     ? InstanceStatus::Verified
                     : InstanceStatus::Violated);
  }
}

void suite_3_2(GroupCtx& ctx, CampaignReport& rep) {
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    for (const auto& node : ctx.lat.nodes) {
      if (node.is_trivial()) continue;
      Group pn = node.order() % p == 0
                     ? sylow_subgroup(node, p, ctx.opt->element_cap)
                     : Group::trivial(ctx.g.degree());
      bool evaluated = false;
      bool hyps = small_subgroup_hypotheses(ctx, pn, p, evaluated);
      std::string detail = "p=" + std::to_string(p) + " |N|=" + order_of(node);
      if (!hyps) {
        add_instance(rep, "theorem-3.2", ctx, detail,
                     InstanceStatus::HypothesisFailed);
        continue;
      }
      add_instance(rep, "theorem-3.2", ctx, detail,
                   node.is_subgroup_of(ctx.p_hypercenter(p))
                       ? InstanceStatus::Verified
                       : InstanceStatus::Violated);
    }
  }
}

void suite_3_3_and_3_4(GroupCtx& ctx, CampaignReport& rep) {
  if (ctx.g.is_trivial()) return;
  auto minimals = minimal_normal_subgroups(ctx.lat);
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    const Group& P = ctx.sylow(p);
    for (std::uint64_t d = p * p; d < P.order(); d *= p) {
      auto subs = subgroups_of_order(P, d);
      if (subs.size() > ctx.opt->instance_cap) continue;
      bool relevant_33 = false, relevant_34 = false;
      for (const auto& n : minimals) {
        if (n.order() == d / p) relevant_33 = true;
        if (n.order() == d) relevant_34 = true;
      }
      if (!relevant_33 && !relevant_34) continue;
      bool hyp = all_lpi(ctx, subs);
      for (const auto& n : minimals) {
        const bool is33 = n.order() == d / p;
        const bool is34 = n.order() == d;
        if (!is33 && !is34) continue;
        std::string suite = is33 ? "lemma-3.3" : "lemma-3.4";
        std::string detail = "p=" + std::to_string(p) +
                             " d=" + std::to_string(d) + " |N|=" + order_of(n);
        if (!hyp) {
          add_instance(rep, suite, ctx, detail,
                       InstanceStatus::HypothesisFailed);
          continue;
        }
        Quotient q = quotient_group(ctx.g, n, ctx.opt->quotient_cap);
        add_instance(rep, suite, ctx, detail,
                     is_p_supersoluble(q.group, p)
                         ? InstanceStatus::Verified
                         : InstanceStatus::Violated);
      }
    }
  }
}

void suite_3_5_and_3_6(GroupCtx& ctx, CampaignReport& rep) {
  for (std::uint64_t p : prime_factors(ctx.g.order())) {
    const Group& P = ctx.sylow(p);
    const std::uint64_t opp_p =
        p_part(o_p_prime_p(ctx.lat, p).order(), p).value;
    const bool psuper = is_p_supersoluble(ctx.series, p);
    for (std::uint64_t d = p * p; d < P.order(); d *= p) {
      const bool in35 = d <= opp_p / p;
      const bool in36 = d * d <= P.order();
      if (!in35 && !in36) continue;
      auto subs = subgroups_of_order(P, d);
      if (subs.size() > ctx.opt->instance_cap) continue;
      bool hyp = all_lpi(ctx, subs);
      std::string detail = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      auto status = [&](bool applicable) {
        if (!applicable || !hyp) return InstanceStatus::HypothesisFailed;
        return psuper ? InstanceStatus::Verified : InstanceStatus::Violated;
      };
      if (in35)
        add_instance(rep, "theorem-3.5", ctx, detail, status(in35));
      if (in36)
        add_instance(rep, "theorem-3.6", ctx, detail, status(in36));
    }
  }
}

// ----------------------------------------------------------------- Drivers

CampaignReport run_over_corpus(
    const std::vector<NamedGroup>& corpus, const HarnessOptions& opt,
    const std::function<void(GroupCtx&, CampaignReport&)>& per_group) {
  std::vector<CampaignReport> partial(corpus.size());
  auto worker = [&](std::size_t i) {
    partial[i].groups.push_back({corpus[i].name, corpus[i].group.order()});
    try {
      GroupCtx ctx(corpus[i], opt, opt.seed * 1000003 + i);
      per_group(ctx, partial[i]);
    } catch (const CapExceeded& e) {
      partial[i].skipped.push_back(corpus[i].name + ": " + e.what());
    }
  };

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) worker(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futures;
    for (int t = 0; t < jobs; ++t)
      futures.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next.fetch_add(1); i < corpus.size();
             i = next.fetch_add(1))
          worker(i);
      }));
    for (auto& f : futures) f.get();
  }

  CampaignReport rep;
  for (auto& p : partial) merge_reports(rep, std::move(p));
  return rep;
}

}  // namespace

CampaignReport verify_theorem_a(const std::vector<NamedGroup>& corpus,
                                const HarnessOptions& options) {
  return run_over_corpus(corpus, options, theorem_a_for_group);
}

CampaignReport verify_lemma_suite(const std::vector<NamedGroup>& corpus,
                                  const HarnessOptions& options) {
  CampaignReport rep =
      run_over_corpus(corpus, options, [](GroupCtx& ctx, CampaignReport& r) {
        suite_2_1(ctx, r);
        suite_2_5(ctx, r);
        suite_2_6(ctx, r);
        suite_2_8(ctx, r);
        suite_2_9(ctx, r);
        suite_2_10(ctx, r);
        suite_3_1(ctx, r);
        suite_3_2(ctx, r);
        suite_3_3_and_3_4(ctx, r);
        suite_3_5_and_3_6(ctx, r);
      });
  suite_2_7(options, rep);
  return rep;
}

bool CampaignReport::has_violation() const {
  for (const auto& c : cases)
    if (c.status == CaseStatus::Violation) return true;
  for (const auto& i : instances)
    if (i.status == InstanceStatus::Violated) return true;
  return false;
}

std::map<std::string, std::array<std::size_t, 3>>
CampaignReport::suite_summary() const {
  std::map<std::string, std::array<std::size_t, 3>> out;
  for (const auto& i : instances)
    ++out[i.suite][static_cast<std::size_t>(i.status)];
  return out;
}

void merge_reports(CampaignReport& into, CampaignReport&& from) {
  auto move_all = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()),
               std::make_move_iterator(src.end()));
  };
  std::set<std::pair<std::string, std::uint64_t>> have(into.groups.begin(),
                                                       into.groups.end());
  for (auto& g : from.groups)
    if (have.insert(g).second) into.groups.push_back(std::move(g));
  move_all(into.cases, from.cases);
  move_all(into.instances, from.instances);
  move_all(into.skipped, from.skipped);
}

namespace {

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Ok: return "ok";
    case CaseStatus::Sharpness: return "sharpness";
    case CaseStatus::Violation: return "violation";
  }
  return "?";
}

const char* status_name(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::HypothesisFailed: return "hypothesis-failed";
    case InstanceStatus::Verified: return "verified";
    case InstanceStatus::Violated: return "violated";
  }
  return "?";
}

}  // namespace

void write_machine_report(const CampaignReport& report, std::ostream& out) {
  for (const auto& [name, order] : report.groups) {
    Json j;
    j["kind"] = "group";
    j["name"] = name;
    j["order"] = order;
    out << j.dump() << '\n';
  }
  for (const auto& c : report.cases) {
    Json j;
    j["kind"] = "theorem-a";
    j["group"] = c.group;
    j["order"] = c.order;
    j["p"] = c.p;
    j["d"] = c.d;
    j["size_d_eq_p"] = c.size_d_eq_p;
    j["size_opp"] = c.size_opp;
    j["size_sqrt"] = c.size_sqrt;
    j["hyp1"] = c.hyp1;
    j["hyp2_applicable"] = c.hyp2_applicable;
    j["hyp2"] = c.hyp2;
    j["conclusion"] = c.conclusion;
    j["converse_note"] = c.converse_note;
    j["status"] = status_name(c.status);
    out << j.dump() << '\n';
  }
  for (const auto& i : report.instances) {
    Json j;
    j["kind"] = "lemma";
    j["suite"] = i.suite;
    j["group"] = i.group;
    j["detail"] = i.detail;
    j["status"] = status_name(i.status);
    out << j.dump() << '\n';
  }
  for (const auto& s : report.skipped) {
    Json j;
    j["kind"] = "skipped";
    j["reason"] = s;
    out << j.dump() << '\n';
  }
  std::size_t violations = 0;
  for (const auto& c : report.cases)
    if (c.status == CaseStatus::Violation) ++violations;
  for (const auto& i : report.instances)
    if (i.status == InstanceStatus::Violated) ++violations;
  Json j;
  j["kind"] = "summary";
  j["groups"] = report.groups.size();
  j["cases"] = report.cases.size();
  j["instances"] = report.instances.size();
  j["violations"] = violations;
  out << j.dump() << '\n';
}

std::string render_text_report(const CampaignReport& report, double seconds) {
  std::ostringstream out;
  out << "campaign over " << report.groups.size() << " groups: "
      << report.cases.size() << " theorem-a cases, "
      << report.instances.size() << " lemma instances\n";

  std::size_t sharp = 0, viol = 0;
  for (const auto& c : report.cases) {
    if (c.status == CaseStatus::Sharpness) ++sharp;
    if (c.status == CaseStatus::Violation) ++viol;
  }
  if (sharp) {
    out << "sharpness rows (hypotheses hold, no size condition, not "
           "p-supersoluble):\n";
    for (const auto& c : report.cases)
      if (c.status == CaseStatus::Sharpness)
        out << "  " << c.group << " p=" << c.p << " d=" << c.d << "\n";
  }
  for (const auto& [suite, counts] : report.suite_summary())
    out << "  " << suite << ": " << counts[1] << " verified, " << counts[0]
        << " hypothesis-failed, " << counts[2] << " violated\n";
  for (const auto& c : report.cases)
    if (c.status == CaseStatus::Violation)
      out << "VIOLATION: " << c.group << " p=" << c.p << " d=" << c.d << "\n";
  for (const auto& i : report.instances)
    if (i.status == InstanceStatus::Violated)
      out << "VIOLATION: " << i.suite << " " << i.group << " " << i.detail
          << "\n";
  for (const auto& s : report.skipped) out << "skipped: " << s << "\n";
  out << (viol || report.has_violation() ? "RESULT: FAILED" : "RESULT: PASS")
      << " (" << seconds << " s)\n";
  return out.str();
}

}  // namespace gk

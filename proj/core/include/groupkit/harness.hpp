#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "groupkit/corpus.hpp"
#include "groupkit/props.hpp"
#include "groupkit/structure.hpp"

namespace gk {

struct HarnessOptions {
  std::uint64_t seed = 20250823;
  std::size_t element_cap = kElementCap;
  int quotient_cap = kQuotientIndexCap;
  std::size_t qfree_cap = kQuaternionFreeCap;
  /// Per-group bound on enumerated subgroup instances; beyond it the
  /// suite samples uniformly with the fixed seed.
  std::size_t instance_cap = 5000;
  /// Subgroups sampled per group for the transfer-lemma suites.
  std::size_t subgroup_samples = 8;
  /// Worker threads over distinct groups; the report is merged in
  /// corpus order, so output is independent of the job count.
  int jobs = 1;
};

enum class CaseStatus { Ok, Sharpness, Violation };

/// One (group, p, d) evaluation of the main theorem statement.
struct TheoremACase {
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  bool size_d_eq_p = false;   // d = p
  bool size_opp = false;      // d <= |P n O_{p'p}(G)| / p
  bool size_sqrt = false;     // d^2 <= |P|
  bool hyp1 = false;          // all order-d subgroups of P pass L-Pi
  bool hyp2_applicable = false;  // d = p = 2 and P not quaternion-free
  bool hyp2 = true;           // all cyclic order-4 subgroups pass L-Pi
  bool conclusion = false;    // G is p-supersoluble
  bool converse_note = false; // conclusion holds but hyp1 fails (informational)
  CaseStatus status = CaseStatus::Ok;
};

enum class InstanceStatus { HypothesisFailed, Verified, Violated };

/// One evaluated instance of a universally quantified lemma/theorem.
struct LemmaInstance {
  std::string suite;   // e.g. "lemma-2.5", "theorem-3.2"
  std::string group;
  std::string detail;
  InstanceStatus status = InstanceStatus::HypothesisFailed;
};

struct CampaignReport {
  std::vector<std::pair<std::string, std::uint64_t>> groups;  // name, order
  std::vector<TheoremACase> cases;
  std::vector<LemmaInstance> instances;
  std::vector<std::string> skipped;  // "group: reason"; never silent

  bool has_violation() const;
  /// suite -> (hypothesis-failed, verified, violated) counts.
  std::map<std::string, std::array<std::size_t, 3>> suite_summary() const;
};

CampaignReport verify_theorem_a(const std::vector<NamedGroup>& corpus,
                                const HarnessOptions& options = {});

CampaignReport verify_lemma_suite(const std::vector<NamedGroup>& corpus,
                                  const HarnessOptions& options = {});

void merge_reports(CampaignReport& into, CampaignReport&& from);

/// One structured record per case/instance, stable field order; byte
/// identical across runs with equal corpus, options and seed.
void write_machine_report(const CampaignReport& report, std::ostream& out);

std::string render_text_report(const CampaignReport& report, double seconds);

}  // namespace gk

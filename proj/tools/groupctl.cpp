// groupctl: command-line front end for the group computation library.
//
// Exit codes: 0 success / property holds, 1 property fails or a
// verification campaign found a violation, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "groupkit/harness.hpp"

namespace {

using namespace gk;

struct GroupSource {
  std::string builtin;  // name in the builtin corpus
  std::string file;     // path to a .grp file

  Group resolve(std::string* name_out = nullptr) const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open " + file);
      std::ostringstream text;
      text << in.rdbuf();
      GroupFile gf = parse_group_file(text.str());
      if (name_out) *name_out = gf.name;
      return build_group(gf);
    }
    for (const auto& ng : builtin_corpus(400))
      if (ng.name == builtin) {
        if (name_out) *name_out = ng.name;
        return ng.group;
      }
    throw Error("unknown builtin group '" + builtin +
                "' (try e.g. S4, A5, D8, Q8, C12, SL(2,3))");
  }
};

void add_group_options(CLI::App* cmd, GroupSource& src) {
  auto* g = cmd->add_option("-g,--group", src.builtin,
                            "builtin group name (S4, A5, D8, Q8, C12, ...)");
  auto* f = cmd->add_option("-f,--file", src.file, "group file (.grp)");
  g->excludes(f);
  cmd->callback([&src, cmd] {
    if (src.builtin.empty() && src.file.empty())
      throw CLI::ValidationError(cmd->get_name(),
                                 "one of --group/--file is required");
  });
}

Group parse_subgroup(const Group& g, const std::string& spec) {
  std::vector<Perm> gens;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (part.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(parse_cycles(part, g.degree()));
  return Group::subgroup_of(g, std::move(gens));
}

int cmd_info(const GroupSource& src) {
  std::string name;
  Group g = src.resolve(&name);
  NormalLattice lat = normal_subgroups(g);
  StructureReport rep = compute_structure_report(name, g, lat);

  std::cout << "group: " << name << "\n"
            << "degree: " << g.degree() << "\n"
            << "order: " << g.order() << "\n";
  std::cout << "normal subgroup orders:";
  for (const auto& n : lat.nodes) std::cout << " " << n.order();
  std::cout << "\nchief factor orders:";
  for (const auto& cf : chief_series(lat)) std::cout << " " << cf.factor_order;
  std::cout << "\nZ_U order: " << rep.z_u_order << "\n";
  for (const auto& ps : rep.primes)
    std::cout << "p=" << ps.p << ": |P|=" << ps.sylow_order
              << " O_p=" << ps.o_p_order << " O_p'=" << ps.o_p_prime_order
              << " O_p'p=" << ps.o_p_prime_p_order
              << " Z_Up=" << ps.z_u_p_order
              << (ps.p_soluble ? " p-soluble" : "")
              << (ps.p_supersoluble ? " p-supersoluble" : "") << "\n";
  return 0;
}

int cmd_check(const GroupSource& src, const std::string& prop,
              const std::string& subgroup_spec) {
  Group g = src.resolve();
  Group h = parse_subgroup(g, subgroup_spec);
  NormalLattice lat = normal_subgroups(g);
  PropertyVerdict v =
      prop == "pi" ? satisfies_pi(lat, h) : satisfies_l_pi(lat, h);
  std::cout << explain(v) << "\n";
  return v.holds ? 0 : 1;
}

int cmd_psuper(const GroupSource& src, std::uint64_t p) {
  Group g = src.resolve();
  bool ok = is_p_supersoluble(g, p);
  std::cout << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& corpus_dir,
               std::uint64_t max_order, const std::string& json_path,
               const HarnessOptions& opt) {
  std::vector<NamedGroup> corpus = corpus_dir.empty()
                                       ? builtin_corpus(max_order)
                                       : load_corpus_dir(corpus_dir);
  auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  if (suite == "theorem-a" || suite == "all")
    merge_reports(rep, verify_theorem_a(corpus, opt));
  if (suite == "lemmas" || suite == "all")
    merge_reports(rep, verify_lemma_suite(corpus, opt));
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw Error("cannot open " + json_path);
    write_machine_report(rep, out);
  }
  std::cout << render_text_report(rep, secs);
  return rep.has_violation() ? 1 : 0;
}

int cmd_corpus(std::uint64_t max_order, const std::string& out_dir,
               const std::string& import_dir) {
  auto entries = generate_corpus(max_order, out_dir, import_dir);
  std::cout << "wrote " << entries.size() << " groups to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group computations: structure, embedding properties, "
               "verification campaigns"};
  app.require_subcommand(1);

  HarnessOptions opt;

  GroupSource info_src;
  auto* info = app.add_subcommand("info", "structural invariants of a group");
  add_group_options(info, info_src);

  GroupSource check_src;
  std::string prop = "lpi";
  std::string subgroup_spec;
  auto* check =
      app.add_subcommand("check", "test an embedding property of a subgroup");
  add_group_options(check, check_src);
  check->add_option("--prop", prop, "property to test")
      ->check(CLI::IsMember({"lpi", "pi"}));
  check
      ->add_option("--subgroup", subgroup_spec,
                   "generators in cycle notation, ';'-separated")
      ->required();

  GroupSource psuper_src;
  std::uint64_t psuper_p = 2;
  auto* psuper = app.add_subcommand("psuper", "test p-supersolubility");
  add_group_options(psuper, psuper_src);
  psuper->add_option("-p,--prime", psuper_p, "the prime p")->required();

  std::string suite = "all";
  std::string corpus_dir, json_path;
  std::uint64_t max_order = 200;
  auto* verify =
      app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--suite", suite, "which campaign")
      ->check(CLI::IsMember({"theorem-a", "lemmas", "all"}));
  verify->add_option("--corpus", corpus_dir,
                     "directory of .grp files (default: builtin corpus)");
  verify->add_option("--max-order", max_order,
                     "builtin corpus order bound");
  verify->add_option("--json", json_path, "write machine report here");
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--jobs", opt.jobs, "worker threads");
  verify->add_option("--element-cap", opt.element_cap,
                     "largest group enumerated");
  verify->add_option("--quotient-cap", opt.quotient_cap,
                     "largest quotient index");
  verify->add_option("--instance-cap", opt.instance_cap,
                     "subgroup instances per (group, p, d)");

  std::string corpus_out = "corpus", corpus_import;
  std::uint64_t corpus_max = 200;
  auto* corpus =
      app.add_subcommand("corpus", "write the builtin corpus as .grp files");
  corpus->add_option("--max-order", corpus_max, "order bound");
  corpus->add_option("--out", corpus_out, "output directory");
  corpus->add_option("--import", corpus_import,
                     "directory of extra .grp files to include");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(info_src);
    if (*check) return cmd_check(check_src, prop, subgroup_spec);
    if (*psuper) return cmd_psuper(psuper_src, psuper_p);
    if (*verify)
      return cmd_verify(suite, corpus_dir, max_order, json_path, opt);
    if (*corpus) return cmd_corpus(corpus_max, corpus_out, corpus_import);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

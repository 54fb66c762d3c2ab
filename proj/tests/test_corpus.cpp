#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "groupkit/structure.hpp"
#include "helpers.hpp"

using namespace gk;
namespace fs = std::filesystem;

TEST_CASE("constructor orders") {
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(cyclic(17).order() == 17);
  CHECK(dihedral(14).order() == 14);
  CHECK(generalized_quaternion(8).order() == 8);
  CHECK(generalized_quaternion(32).order() == 32);
  CHECK(special_linear_2_3().order() == 24);
  CHECK(direct_product(symmetric(3), cyclic(4)).order() == 24);
}

TEST_CASE("A_n contains only even permutations") {
  for (int n : {4, 5, 6}) {
    Group an = alternating(n);
    Group sn_embedded = Group::generated(n, symmetric(n).generators());
    CHECK(an.is_subgroup_of(sn_embedded));
  }
}

TEST_CASE("generalized quaternion groups have a unique involution") {
  for (int order : {8, 16, 32}) {
    Group q = generalized_quaternion(order);
    int involutions = 0;
    for (const auto& x : q.elements())
      if (element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
    // noncyclic: no element has full order
    for (const auto& x : q.elements())
      CHECK(element_order(x) < static_cast<std::uint64_t>(order));
  }
}

TEST_CASE("the matrix group fixture is 2-closed with quaternion Sylow") {
  Group g = special_linear_2_3();
  Group syl2 = sylow_subgroup(g, 2);
  CHECK(syl2.order() == 8);
  CHECK_FALSE(is_quaternion_free(syl2));
  CHECK(is_normal_in(g, syl2));
}

TEST_CASE("group file parsing and emission round-trip") {
  const std::string text =
      "# a comment\n"
      "name: V4\n"
      "degree: 4\n"
      "gen: (1,2)(3,4)\n"
      "gen: (1,3)(2,4)\n";
  GroupFile gf = parse_group_file(text);
  CHECK(gf.name == "V4");
  CHECK(gf.degree == 4);
  REQUIRE(gf.generators.size() == 2);
  Group g = build_group(gf);
  CHECK(g.order() == 4);

  GroupFile back = parse_group_file(emit_group_file(to_group_file("V4", g)));
  CHECK(back.name == "V4");
  CHECK(build_group(back).same_group_as(g));
}

TEST_CASE("group file errors carry line and column") {
  CHECK_THROWS_AS(parse_group_file("degree: 4\nname: X\n"), ParseError);
  try {
    parse_group_file("name: X\ndegree: 4\ngen: (1,9)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 5);
  }
  CHECK_THROWS_AS(parse_group_file("name: X\ndegree: nope\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file(""), ParseError);
}

TEST_CASE("builtin corpus is deterministic, within bounds, and large") {
  auto corpus = builtin_corpus(200);
  CHECK(corpus.size() >= 60);
  std::set<std::string> names;
  for (const auto& ng : corpus) {
    CHECK(ng.group.order() <= 200);
    CHECK(names.insert(ng.name).second);  // unique names
  }
  auto again = builtin_corpus(200);
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].name == corpus[i].name);
    CHECK(again[i].group.generators() == corpus[i].group.generators());
  }
  CHECK(builtin_corpus(30).size() < corpus.size());
}

TEST_CASE("corpus generation writes loadable files and a manifest") {
  fs::path dir = fs::temp_directory_path() / "gk_corpus_test";
  fs::remove_all(dir);

  fs::path import_dir = fs::temp_directory_path() / "gk_corpus_import";
  fs::remove_all(import_dir);
  fs::create_directories(import_dir);
  std::ofstream(import_dir / "v4.grp")
      << "name: V4\ndegree: 4\ngen: (1,2)(3,4)\ngen: (1,3)(2,4)\n";

  auto entries = generate_corpus(60, dir, import_dir);
  CHECK(fs::exists(dir / "manifest.txt"));
  bool has_import = false;
  for (const auto& e : entries) {
    CHECK(fs::exists(e.path));
    if (e.source == "file") has_import = true;
  }
  CHECK(has_import);

  auto loaded = load_corpus_dir(dir);
  CHECK(loaded.size() == entries.size());
  std::map<std::string, std::uint64_t> order_by_name;
  for (const auto& e : entries) order_by_name[e.name] = e.order;
  for (const auto& ng : loaded)
    CHECK(ng.group.order() == order_by_name.at(ng.name));

  fs::remove_all(dir);
  fs::remove_all(import_dir);
}

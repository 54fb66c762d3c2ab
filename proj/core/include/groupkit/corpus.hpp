#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "groupkit/group.hpp"

namespace gk {

/// Parsed form of the line-oriented group file format:
///   # comment
///   name: S4
///   degree: 4
///   gen: (1,2)
///   gen: (1,2,3,4)
/// Points are 1-based, "()" denotes the identity.
struct GroupFile {
  std::string name;
  int degree = 0;
  std::vector<std::string> generators;  // cycle-notation strings
};

GroupFile parse_group_file(const std::string& text);
Group build_group(const GroupFile& file);
GroupFile to_group_file(const std::string& name, const Group& g);
std::string emit_group_file(const GroupFile& file);

// Standard constructors. Orders: n!, n!/2, n, 2n, 2^k, |a|*|b|.
Group symmetric(int n);
Group alternating(int n);
Group cyclic(int n);
Group dihedral(int order);                // order = 2n, n >= 3
Group generalized_quaternion(int order);  // order = 2^k >= 8
Group direct_product(const Group& a, const Group& b);

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
Group special_linear_2_3();

struct NamedGroup {
  std::string name;
  Group group;
};

struct CorpusEntry {
  std::string name;
  std::uint64_t order = 0;
  std::string source;  // "constructed" or "file"
  std::string path;
};

/// The deterministic verification corpus: constructor families plus
/// fixtures, every order <= max_order.
std::vector<NamedGroup> builtin_corpus(std::uint64_t max_order);

/// Writes one .grp file per corpus group into out_dir, imports any
/// user-supplied .grp files from import_dir, and writes a manifest
/// (name, order, source, path; tab-separated, one record per line).
std::vector<CorpusEntry> generate_corpus(
    std::uint64_t max_order, const std::filesystem::path& out_dir,
    const std::filesystem::path& import_dir = {});

/// Loads every .grp file of a directory, sorted by filename.
std::vector<NamedGroup> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace gk

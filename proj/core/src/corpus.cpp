#include "groupkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gk {

namespace {

// Splits "key: value", returns {key, value, value_col} or throws.
struct KeyValue {
  std::string key;
  std::string value;
  int value_col = 0;
};

KeyValue split_line(const std::string& line, int lineno) {
  auto colon = line.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected 'key: value'", lineno, 1);
  KeyValue kv;
  kv.key = line.substr(0, colon);
  std::size_t start = colon + 1;
  while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
    ++start;
  kv.value = line.substr(start);
  while (!kv.value.empty() &&
         (kv.value.back() == ' ' || kv.value.back() == '\t' ||
          kv.value.back() == '\r'))
    kv.value.pop_back();
  kv.value_col = static_cast<int>(start) + 1;
  return kv;
}

}  // namespace

GroupFile parse_group_file(const std::string& text) {
  GroupFile file;
  bool have_name = false, have_degree = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    while (!trimmed.empty() &&
           (trimmed.back() == '\r' || trimmed.back() == ' ' ||
            trimmed.back() == '\t'))
      trimmed.pop_back();
    std::size_t first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;

    KeyValue kv = split_line(trimmed, lineno);
    if (kv.key == "name") {
      if (have_name) throw ParseError("duplicate 'name' line", lineno, 1);
      if (kv.value.empty())
        throw ParseError("empty group name", lineno, kv.value_col);
      file.name = kv.value;
      have_name = true;
    } else if (kv.key == "degree") {
      if (!have_name)
        throw ParseError("'degree' must follow 'name'", lineno, 1);
      if (have_degree) throw ParseError("duplicate 'degree' line", lineno, 1);
      try {
        std::size_t used = 0;
        int d = std::stoi(kv.value, &used);
        if (used != kv.value.size() || d < 1) throw std::invalid_argument("");
        file.degree = d;
      } catch (const std::exception&) {
        throw ParseError("invalid degree '" + kv.value + "'", lineno,
                         kv.value_col);
      }
      have_degree = true;
    } else if (kv.key == "gen") {
      if (!have_degree)
        throw ParseError("'gen' must follow 'degree'", lineno, 1);
      // Validate the cycle expression now so errors carry file positions.
      parse_cycles(kv.value, file.degree, lineno, kv.value_col - 1);
      file.generators.push_back(kv.value);
    } else {
      throw ParseError("unknown key '" + kv.key + "'", lineno, 1);
    }
  }
  if (!have_name) throw ParseError("missing 'name' line", lineno, 1);
  if (!have_degree) throw ParseError("missing 'degree' line", lineno, 1);
  return file;
}

Group build_group(const GroupFile& file) {
  std::vector<Perm> gens;
  gens.reserve(file.generators.size());
  for (const auto& s : file.generators)
    gens.push_back(parse_cycles(s, file.degree));
  return Group::generated(file.degree, std::move(gens));
}

GroupFile to_group_file(const std::string& name, const Group& g) {
  GroupFile file;
  file.name = name;
  file.degree = g.degree();
  for (const auto& p : g.generators())
    file.generators.push_back(to_cycle_string(p));
  return file;
}

std::string emit_group_file(const GroupFile& file) {
  std::string out = "name: " + file.name + "\n";
  out += "degree: " + std::to_string(file.degree) + "\n";
  for (const auto& g : file.generators) out += "gen: " + g + "\n";
  return out;
}

namespace {

Perm cycle_perm(int degree, const std::vector<int>& cyc) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (std::size_t k = 0; k < cyc.size(); ++k)
    images[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return Perm(std::move(images));
}

}  // namespace

Group symmetric(int n) {
  if (n < 1) throw Error("symmetric: n must be >= 1");
  if (n == 1) return Group::trivial(1);
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i;
  return Group::generated(n, {cycle_perm(n, {0, 1}), cycle_perm(n, full)});
}

Group alternating(int n) {
  if (n < 3) throw Error("alternating: n must be >= 3");
  if (n == 3) return Group::generated(3, {cycle_perm(3, {0, 1, 2})});
  std::vector<int> big;
  if (n % 2 == 1)
    for (int i = 0; i < n; ++i) big.push_back(i);  // n-cycle, even
  else
    for (int i = 1; i < n; ++i) big.push_back(i);  // (n-1)-cycle, even
  return Group::generated(n, {cycle_perm(n, {0, 1, 2}), cycle_perm(n, big)});
}

Group cyclic(int n) {
  if (n < 1) throw Error("cyclic: n must be >= 1");
  if (n == 1) return Group::trivial(1);
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i;
  return Group::generated(n, {cycle_perm(n, full)});
}

Group dihedral(int order) {
  if (order < 6 || order % 2 != 0)
    throw Error("dihedral: order must be an even number >= 6");
  const int n = order / 2;
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group::generated(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

Group generalized_quaternion(int order) {
  if (order < 8 || !is_power_of(static_cast<std::uint64_t>(order), 2))
    throw Error("generalized_quaternion: order must be 2^k >= 8");
  // Elements a^i b^j (0 <= i < order/2, j in {0,1}) with b^2 = a^{order/4},
  // b^-1 a b = a^-1; points are the elements, generators act by right
  // multiplication.
  const int half = order / 2;
  const int quarter = order / 4;
  auto idx = [&](int i, int j) { return j * half + ((i % half) + half) % half; };
  std::vector<int> by_a(order), by_b(order);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < half; ++i) {
      // (a^i b^j) * a
      by_a[idx(i, j)] = j == 0 ? idx(i + 1, 0) : idx(i - 1, 1);
      // (a^i b^j) * b
      by_b[idx(i, j)] = j == 0 ? idx(i, 1) : idx(i + quarter, 0);
    }
  }
  return Group::generated(order, {Perm(std::move(by_a)), Perm(std::move(by_b))});
}

Group direct_product(const Group& a, const Group& b) {
  const int da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> images(da + db);
    for (int i = 0; i < da; ++i) images[i] = g(i);
    for (int i = 0; i < db; ++i) images[da + i] = da + i;
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> images(da + db);
    for (int i = 0; i < da; ++i) images[i] = i;
    for (int i = 0; i < db; ++i) images[da + i] = da + g(i);
    gens.emplace_back(std::move(images));
  }
  return Group::generated(da + db, std::move(gens));
}

Group special_linear_2_3() {
  // Nonzero vectors of F_3^2 in lexicographic order; matrices act as
  // v -> Mv. Generators [[1,1],[0,1]] and [[1,0],[1,1]].
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == std::make_pair(x, y)) return static_cast<int>(i);
    throw Error("unreachable");
  };
  auto mat_perm = [&](int a, int b, int c, int d) {
    std::vector<int> images(8);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      images[i] = index_of((a * x + b * y) % 3, (c * x + d * y) % 3);
    }
    return Perm(std::move(images));
  };
  return Group::generated(8, {mat_perm(1, 1, 0, 1), mat_perm(1, 0, 1, 1)});
}

std::vector<NamedGroup> builtin_corpus(std::uint64_t max_order) {
  std::vector<NamedGroup> all;
  auto add = [&](const std::string& name, const Group& g) {
    if (g.order() <= max_order) all.push_back({name, g});
  };

  for (int n = 2; n <= 32; ++n) add("C" + std::to_string(n), cyclic(n));
  for (int n = 3; n <= 16; ++n)
    add("D" + std::to_string(2 * n), dihedral(2 * n));
  for (int n = 3; n <= 6; ++n) add("S" + std::to_string(n), symmetric(n));
  for (int n = 4; n <= 6; ++n) add("A" + std::to_string(n), alternating(n));
  for (int k = 8; k <= 32; k *= 2)
    add("Q" + std::to_string(k), generalized_quaternion(k));
  add("SL23", special_linear_2_3());

  add("C2xC2", direct_product(cyclic(2), cyclic(2)));
  add("C2xC4", direct_product(cyclic(2), cyclic(4)));
  add("C2xC8", direct_product(cyclic(2), cyclic(8)));
  add("C2xC2xC2", direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))));
  add("C4xC4", direct_product(cyclic(4), cyclic(4)));
  add("C3xC3", direct_product(cyclic(3), cyclic(3)));
  add("C5xC5", direct_product(cyclic(5), cyclic(5)));
  add("C2xQ8", direct_product(cyclic(2), generalized_quaternion(8)));
  add("C2xD8", direct_product(cyclic(2), dihedral(8)));
  add("C3xS3", direct_product(cyclic(3), symmetric(3)));
  add("S3xS3", direct_product(symmetric(3), symmetric(3)));
  add("C2xA4", direct_product(cyclic(2), alternating(4)));
  add("C4xA4", direct_product(cyclic(4), alternating(4)));
  add("C2xS4", direct_product(cyclic(2), symmetric(4)));
  add("C3xA4", direct_product(cyclic(3), alternating(4)));
  add("C2xC2xS3", direct_product(direct_product(cyclic(2), cyclic(2)), symmetric(3)));
  add("C3xSL23", direct_product(cyclic(3), special_linear_2_3()));
  add("C5xS3", direct_product(cyclic(5), symmetric(3)));
  add("C2xC2xC2xC2", direct_product(direct_product(cyclic(2), cyclic(2)),
                                    direct_product(cyclic(2), cyclic(2))));
  return all;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t max_order,
                                         const std::filesystem::path& out_dir,
                                         const std::filesystem::path& import_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create directory " + out_dir.string());

  std::vector<CorpusEntry> entries;
  auto write_file = [&](const std::string& name, const Group& g,
                        const std::string& source) {
    std::string fname = name + ".grp";
    std::ofstream out(out_dir / fname);
    if (!out) throw Error("cannot write " + (out_dir / fname).string());
    out << emit_group_file(to_group_file(name, g));
    entries.push_back({name, g.order(), source, (out_dir / fname).string()});
  };

  for (const auto& ng : builtin_corpus(max_order))
    write_file(ng.name, ng.group, "constructed");

  if (!import_dir.empty() && fs::is_directory(import_dir)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(import_dir))
      if (e.path().extension() == ".grp") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      std::ifstream in(p);
      std::stringstream buf;
      buf << in.rdbuf();
      GroupFile gf = parse_group_file(buf.str());
      Group g = build_group(gf);
      if (g.order() > max_order) continue;
      write_file(gf.name, g, "file");
    }
  }

  std::ofstream man(out_dir / "manifest.txt");
  if (!man) throw Error("cannot write manifest in " + out_dir.string());
  for (const auto& e : entries)
    man << e.name << '\t' << e.order << '\t' << e.source << '\t' << e.path
        << '\n';
  return entries;
}

std::vector<NamedGroup> load_corpus_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw Error("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGroup> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    GroupFile gf;
    try {
      gf = parse_group_file(buf.str());
    } catch (const ParseError& pe) {
      throw ParseError(p.filename().string() + ": " + pe.what(), pe.line,
                       pe.col);
    }
    out.push_back({gf.name, build_group(gf)});
  }
  return out;
}

}  // namespace gk

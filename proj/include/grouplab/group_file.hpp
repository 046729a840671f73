#ifndef GROUPLAB_GROUP_FILE_HPP_
#define GROUPLAB_GROUP_FILE_HPP_

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab {

// Line-oriented group definition:
//
//   # comment
//   name D8
//   degree 4
//   family dihedral        (optional)
//   params 8               (optional)
//   gen (1 2 3 4)
//   gen (1 4)(2 3)
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generator_lines;
  std::string family;
  std::string params;

  FiniteGroup build(std::size_t order_cap = kDefaultOrderCap) const {
    std::vector<Permutation> gens;
    for (const auto& line : generator_lines) gens.push_back(parse_cycles(line, degree));
    return FiniteGroup::generate(degree, gens, order_cap).named(name);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline GroupFile parse_group_file_text(std::string_view text) {
  GroupFile f;
  bool have_name = false;
  bool have_degree = false;
  std::vector<std::pair<std::size_t, std::string>> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = detail::trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view value = sp == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(sp));
    if (key == "name") {
      if (value.empty()) throw ParseError("name requires a value", line_no);
      if (have_name) throw ParseError("duplicate name", line_no);
      f.name = std::string(value);
      have_name = true;
    } else if (key == "degree") {
      if (have_degree) throw ParseError("duplicate degree", line_no);
      std::size_t d = 0;
      if (value.empty()) throw ParseError("degree requires a value", line_no);
      for (char c : value) {
        if (c < '0' || c > '9') throw ParseError("degree must be a positive integer", line_no);
        d = d * 10 + static_cast<std::size_t>(c - '0');
        if (d > 1000000) throw ParseError("degree too large", line_no);
      }
      if (d == 0) throw ParseError("degree must be a positive integer", line_no);
      f.degree = d;
      have_degree = true;
    } else if (key == "gen") {
      if (value.empty()) throw ParseError("gen requires a cycle string", line_no);
      gens.emplace_back(line_no, std::string(value));
    } else if (key == "family") {
      f.family = std::string(value);
    } else if (key == "params") {
      f.params = std::string(value);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  if (!have_name) throw ParseError("missing 'name' line");
  if (!have_degree) throw ParseError("missing 'degree' line");
  if (gens.empty()) throw ParseError("at least one 'gen' line is required");
  for (const auto& [ln, g] : gens) {
    try {
      (void)parse_cycles(g, f.degree);
    } catch (const Error& e) {
      throw ParseError(e.what(), ln);
    }
    f.generator_lines.push_back(g);
  }
  return f;
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

inline NamedGroup parse_group_file(std::string_view text, std::size_t order_cap = kDefaultOrderCap) {
  GroupFile f = parse_group_file_text(text);
  return {f.name, f.build(order_cap)};
}

inline NamedGroup read_group_file(const std::string& path, std::size_t order_cap = kDefaultOrderCap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), order_cap);
}

inline std::string write_group_file(const FiniteGroup& g, const std::string& name,
                                    const std::string& family = {}, const std::string& params = {}) {
  std::string out = "name " + name + "\ndegree " + std::to_string(g.degree()) + "\n";
  if (!family.empty()) out += "family " + family + "\n";
  if (!params.empty()) out += "params " + params + "\n";
  if (g.generators().empty()) out += "gen ()\n";
  for (const auto& p : g.generators()) out += "gen " + format_cycles(p) + "\n";
  return out;
}

}  // namespace grouplab

#endif  // GROUPLAB_GROUP_FILE_HPP_

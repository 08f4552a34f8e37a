#include "permchar/group_file.hpp"

#include <cctype>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_degree(std::string_view text, std::size_t line) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "degree needs a value", line);
  std::size_t value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "degree must be a positive integer, got '" + std::string(text) + "'", line);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1'000'000) throw Error(ErrorCode::ParseError, "degree too large", line);
  }
  if (value == 0) throw Error(ErrorCode::ParseError, "degree must be at least 1", line);
  return value;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  bool have_name = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;

    std::size_t split = 0;
    while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
    const std::string_view keyword = line.substr(0, split);
    const std::string_view rest = trim(line.substr(split));

    if (keyword == "name") {
      if (have_name) throw Error(ErrorCode::ParseError, "name given twice", line_no);
      if (rest.empty()) throw Error(ErrorCode::ParseError, "name needs a value", line_no);
      spec.name = std::string(rest);
      have_name = true;
    } else if (keyword == "degree") {
      if (spec.degree != 0) throw Error(ErrorCode::ParseError, "degree given twice", line_no);
      spec.degree = parse_degree(rest, line_no);
    } else if (keyword == "gen") {
      if (spec.degree == 0) throw Error(ErrorCode::ParseError, "gen before degree", line_no);
      spec.generators.push_back(perm_from_cycles(rest, spec.degree, line_no));
    } else {
      throw Error(ErrorCode::ParseError, "unknown keyword '" + std::string(keyword) + "'", line_no);
    }
  }
  if (spec.degree == 0) throw Error(ErrorCode::ParseError, "missing degree line", line_no);
  return spec;
}

PermGroup parse_group_file(std::string_view text, std::size_t order_cap) {
  GroupSpec spec = parse_group_spec(text);
  return group_from_generators(spec.degree, std::move(spec.generators), order_cap, std::move(spec.name));
}

std::string render_group_file(const GroupSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name " + spec.name + "\n";
  out += "degree " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += "gen " + to_cycle_string(g) + "\n";
  return out;
}

std::string render_group_file(const PermGroup& group) {
  const auto gens = group.generators();
  return render_group_file(GroupSpec{group.name(), group.degree(), {gens.begin(), gens.end()}});
}

std::string canonical_group_file(std::string_view text) { return render_group_file(parse_group_spec(text)); }

SubgroupHandle parse_subgroup_arg(std::string_view text, const PermGroup& group) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view word = trim(text.substr(start, end - start));
    start = end + 1;
    if (word.empty()) continue;
    Permutation p = perm_from_cycles(word, group.degree());
    if (!group.find(p)) {
      throw Error(ErrorCode::NotInGroup, to_cycle_string(p) + " is not an element of " + describe_group(group));
    }
    gens.push_back(std::move(p));
  }
  return SubgroupHandle::generated(group, std::move(gens));
}

}  // namespace permchar

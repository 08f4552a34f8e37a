#include "permchar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permchar/catalog.hpp"
#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"
#include "permchar/group_file.hpp"
#include "permchar/report.hpp"
#include "permchar/sweep.hpp"

namespace permchar {
namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct CommonOptions {
  std::string group;
  std::string group_file;
  std::string format = "text";
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t sweep_cap = kDefaultSweepCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermGroup load_group(const CommonOptions& o) {
  if (o.group.empty() == o.group_file.empty()) {
    throw Error(ErrorCode::ParseError, "give exactly one of --group and --group-file");
  }
  if (!o.group.empty()) return catalog_lookup(o.group, o.order_cap);
  return parse_group_file(read_file(o.group_file), o.order_cap);
}

void add_group_source(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--group", o.group, "Catalog group name, e.g. C4, S3, GL(3,2), C2xC4");
  cmd->add_option("--group-file", o.group_file, "Group file path");
}

void add_output(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--order-cap", o.order_cap, "Largest group order to enumerate");
  cmd->add_option("--sweep-cap", o.sweep_cap, "Largest group order for subgroup enumeration");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation characters, coset actions and normal subgroups"};
  app.name(args.empty() ? "permchar" : args.front());
  app.require_subcommand(1);

  CommonOptions common;
  std::string subgroup_arg, normal_arg, element_arg, u_arg, v_arg;
  bool pointwise = false;
  bool via_fgs = false;
  bool expect_none = false;
  bool timing = false;
  std::size_t search_cap = kDefaultGassmannCap;
  std::size_t theorem_cap = kDefaultGassmannCap;
  std::size_t max_order = 24;
  unsigned threads = 1;
  std::vector<std::string> group_names;
  std::vector<std::string> extra_groups;
  std::string entry_name;
  std::string parse_path;

  auto* lemma = app.add_subcommand("check-lemma", "1_UN^G(g) = (1/|N|) sum over N of 1_U^G(gn)");
  add_group_source(lemma, common);
  add_output(lemma, common);
  lemma->add_option("--subgroup", subgroup_arg, "Generators of U (cycle words separated by ';')");
  lemma->add_option("--normal", normal_arg, "Generators of the normal subgroup N");
  lemma->add_option("--element", element_arg, "Check one element instead of every class representative");
  lemma->add_flag("--pointwise", pointwise, "Check every element, not just class representatives");
  lemma->add_flag("--via-fgs", via_fgs, "Recompute the left side through orbit splitting");

  auto* fgs = app.add_subcommand("check-fgs", "Average fixed points over gN equals the non-split orbit count");
  add_group_source(fgs, common);
  add_output(fgs, common);
  fgs->add_option("--subgroup", subgroup_arg, "Act on the right cosets of this subgroup (default: trivial)");
  fgs->add_option("--normal", normal_arg, "Generators of N");
  fgs->add_option("--element", element_arg, "Check one g instead of every element");

  auto* theorem = app.add_subcommand("check-theorem", "1_U^G = 1_V^G implies 1_UN^G = 1_VN^G");
  add_group_source(theorem, common);
  add_output(theorem, common);
  theorem->add_option("--u", u_arg, "Generators of U");
  theorem->add_option("--v", v_arg, "Generators of V");
  theorem->add_option("--normal", normal_arg, "Generators of the normal subgroup N");

  auto* klingen = app.add_subcommand("falsify-klingen", "Find sigma with 1_UN^G(sigma) > 0 and 1_U^G(sigma) = 0");
  add_group_source(klingen, common);
  add_output(klingen, common);
  klingen->add_option("--subgroup", subgroup_arg, "Generators of U");
  klingen->add_option("--normal", normal_arg, "Generators of the normal subgroup N");
  klingen->add_flag("--expect-none", expect_none, "Succeed only when no witness exists");

  auto* gassmann = app.add_subcommand("gassmann-search", "Non-conjugate subgroups with equal permutation characters");
  add_group_source(gassmann, common);
  add_output(gassmann, common);
  gassmann->add_option("--search-cap", search_cap, "Largest group order to search");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run every check over catalog groups");
  add_output(sweep_cmd, common);
  sweep_cmd->add_option("--max-order", max_order, "Sweep catalog groups up to this order");
  sweep_cmd->add_option("--groups", group_names, "Explicit catalog names instead of --max-order");
  sweep_cmd->add_option("--include", extra_groups, "Additional catalog names to append");
  sweep_cmd->add_option("--theorem-cap", theorem_cap, "Largest order for the theorem-only sweep");
  sweep_cmd->add_option("--threads", threads, "Groups swept in parallel");
  sweep_cmd->add_flag("--timing", timing, "Include wall time in the report");

  auto* catalog = app.add_subcommand("catalog", "List catalog groups or print one as a group file");
  add_output(catalog, common);
  catalog->add_option("--max-order", max_order, "Only list entries up to this order");
  catalog->add_option("--name", entry_name, "Print this group as a group file");

  auto* parse = app.add_subcommand("parse", "Syntax-check a group file and print its canonical form");
  add_output(parse, common);
  parse->add_option("file", parse_path, "Group file")->required();

  // CLI11 consumes a vector of arguments from the back.
  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    const Format format = parse_format(common.format);

    if (lemma->parsed()) {
      const PermGroup group = load_group(common);
      const SubgroupHandle u = parse_subgroup_arg(subgroup_arg, group);
      const SubgroupHandle n = parse_subgroup_arg(normal_arg, group);
      std::vector<LemmaCheck> checks;
      if (!element_arg.empty()) {
        const Permutation g = perm_from_cycles(element_arg, group.degree());
        checks.push_back(via_fgs ? check_lemma_via_fgs(group, u, n, g) : check_lemma_avg(group, u, n, g));
      } else if (via_fgs) {
        if (pointwise) {
          for (const auto& g : group.elements()) checks.push_back(check_lemma_via_fgs(group, u, n, g));
        } else {
          for (const auto& cls : group.classes()) {
            checks.push_back(check_lemma_via_fgs(group, u, n, group.element(cls.representative)));
          }
        }
      } else {
        checks = check_lemma_all(group, u, n, pointwise);
      }
      out << render_report(checks, format);
      return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.holds; }) ? kOk
                                                                                                  : kCheckFailed;
    }

    if (fgs->parsed()) {
      const PermGroup group = load_group(common);
      const SubgroupHandle u = parse_subgroup_arg(subgroup_arg, group);
      const SubgroupHandle n = parse_subgroup_arg(normal_arg, group);
      const ActionHom action = coset_action(group, u);
      std::vector<FgsCheck> checks;
      if (!element_arg.empty()) {
        checks.push_back(check_fgs(action, n, perm_from_cycles(element_arg, group.degree())));
      } else {
        for (const auto& g : group.elements()) checks.push_back(check_fgs(action, n, g));
      }
      out << render_report(checks, format);
      return std::all_of(checks.begin(), checks.end(), [](const FgsCheck& c) { return c.holds; }) ? kOk
                                                                                                : kCheckFailed;
    }

    if (theorem->parsed()) {
      const PermGroup group = load_group(common);
      const TheoremCheck check = check_theorem(group, parse_subgroup_arg(u_arg, group),
                                               parse_subgroup_arg(v_arg, group), parse_subgroup_arg(normal_arg, group));
      out << render_report(check, format);
      return check.violated() ? kCheckFailed : kOk;
    }

    if (klingen->parsed()) {
      const PermGroup group = load_group(common);
      const SubgroupHandle u = parse_subgroup_arg(subgroup_arg, group);
      const SubgroupHandle n = parse_subgroup_arg(normal_arg, group);
      const KlingenReport report{group.name().empty() ? "G" : group.name(), u.label(), n.label(),
                                 falsify_klingen_step(group, u, n)};
      out << render_report(report, format);
      return report.witness.has_value() != expect_none ? kOk : kCheckFailed;
    }

    if (gassmann->parsed()) {
      const PermGroup group = load_group(common);
      const GassmannReport report{group.name().empty() ? "G" : group.name(), group.order(),
                                  gassmann_pairs(group, search_cap)};
      out << render_report(report, format);
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      std::vector<PermGroup> universe;
      if (group_names.empty()) {
        universe = catalog_universe(max_order, common.order_cap);
      } else {
        for (const auto& name : group_names) universe.push_back(catalog_lookup(name, common.order_cap));
      }
      for (const auto& name : extra_groups) universe.push_back(catalog_lookup(name, common.order_cap));
      SweepOptions options;
      options.sweep_cap = common.sweep_cap;
      options.pointwise_cap = common.sweep_cap;
      options.theorem_cap = std::max(theorem_cap, common.sweep_cap);
      options.threads = threads;
      const SweepReport report = sweep(universe, options);
      out << render_report(report, format, timing);
      if (!report.truncated.empty()) return kUsage;
      return report.violations.empty() ? kOk : kCheckFailed;
    }

    if (catalog->parsed()) {
      if (!entry_name.empty()) {
        out << render_group_file(catalog_lookup(entry_name, common.order_cap));
        return kOk;
      }
      out << render_report(CatalogListing{catalog_selection(max_order)}, format);
      return kOk;
    }

    if (parse->parsed()) {
      const std::string text = read_file(parse_path);
      const std::string canonical = canonical_group_file(text);
      const PermGroup group = parse_group_file(text, common.order_cap);
      out << render_report(ParseReport{canonical, group.degree(), group.order()}, format);
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace permchar

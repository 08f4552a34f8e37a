#include "permchar/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {
namespace {

using json = nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string angle(const std::string& label) { return "<" + label + ">"; }

/// Rows of cells, padded so columns line up.
class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

json lemma_json(const LemmaCheck& c) {
  json j = {
      {"group", c.group}, {"u", c.u},         {"n", c.n},
      {"g", to_cycle_string(c.g)}, {"lhs", c.lhs}, {"rhs", c.rhs().to_string()},
      {"holds", c.holds}, {"witness", nullptr},
  };
  if (c.route) {
    j["route"] = {{"direct_value", c.route->direct_value},
                  {"fixed_n_orbits", c.route->fixed_n_orbits},
                  {"nonsplit_orbits", c.route->nonsplit_orbits},
                  {"h", c.route->h}};
  }
  return j;
}

json counts_json(const SweepCounts& c) {
  return {
      {"order_checks", c.order_checks},
      {"lemma_class_checks", c.lemma_class_checks},
      {"lemma_pointwise_checks", c.lemma_pointwise_checks},
      {"route_checks", c.route_checks},
      {"fgs_checks", c.fgs_checks},
      {"theorem_checks", c.theorem_checks},
      {"theorem_nonconjugate", c.theorem_nonconjugate},
      {"frobenius_checks", c.frobenius_checks},
      {"equality_oracle_checks", c.equality_oracle_checks},
  };
}

json violation_json(const Violation& v) {
  return {{"check", v.check}, {"group", v.group}, {"instance", v.instance}, {"detail", v.detail}};
}

std::vector<std::string> counts_cells(const SweepCounts& c) {
  return {"lemma=" + std::to_string(c.lemma_class_checks),
          "pointwise=" + std::to_string(c.lemma_pointwise_checks),
          "route=" + std::to_string(c.route_checks),
          "fgs=" + std::to_string(c.fgs_checks),
          "theorem=" + std::to_string(c.theorem_checks),
          "nonconjugate=" + std::to_string(c.theorem_nonconjugate),
          "frobenius=" + std::to_string(c.frobenius_checks),
          "equality=" + std::to_string(c.equality_oracle_checks),
          "order=" + std::to_string(c.order_checks)};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "' (expected text or json)");
}

std::string render_report(const std::vector<LemmaCheck>& checks, Format format) {
  const auto holding = std::count_if(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.holds; });
  if (format == Format::Json) {
    json doc = {{"kind", "lemma"}, {"checks", json::array()}};
    for (const auto& c : checks) doc["checks"].push_back(lemma_json(c));
    doc["summary"] = {{"checks", checks.size()}, {"holding", holding}, {"all_hold", holding == std::ssize(checks)}};
    return dump(doc);
  }
  std::string out = "averaging lemma";
  if (!checks.empty()) {
    out += ": group=" + checks.front().group + " U=" + angle(checks.front().u) + " N=" + angle(checks.front().n);
  }
  out += "\n";
  Table table;
  for (const auto& c : checks) {
    std::vector<std::string> row = {"g=" + to_cycle_string(c.g), "lhs=" + std::to_string(c.lhs),
                                    "rhs=" + c.rhs().to_string(), "holds=" + yes_no(c.holds)};
    if (c.route) {
      row.push_back("fixed_n_orbits=" + std::to_string(c.route->fixed_n_orbits));
      row.push_back("nonsplit=" + std::to_string(c.route->nonsplit_orbits));
      row.push_back("H=" + angle(c.route->h));
    }
    table.add(std::move(row));
  }
  out += table.render();
  out += std::to_string(checks.size()) + " checks, " + std::to_string(holding) + " hold\n";
  return out;
}

std::string render_report(const std::vector<FgsCheck>& checks, Format format) {
  const auto holding = std::count_if(checks.begin(), checks.end(), [](const FgsCheck& c) { return c.holds; });
  if (format == Format::Json) {
    json doc = {{"kind", "fgs"}, {"checks", json::array()}};
    for (const auto& c : checks) {
      doc["checks"].push_back({{"group", c.group},
                               {"action", c.action},
                               {"h", c.h},
                               {"n", c.n},
                               {"g", to_cycle_string(c.g)},
                               {"average", c.average().to_string()},
                               {"r", c.r},
                               {"holds", c.holds}});
    }
    doc["summary"] = {{"checks", checks.size()}, {"holding", holding}, {"all_hold", holding == std::ssize(checks)}};
    return dump(doc);
  }
  std::string out = "orbit-splitting lemma";
  if (!checks.empty()) {
    out += ": group=" + checks.front().group + " cosets of " + angle(checks.front().action) +
           " N=" + angle(checks.front().n);
  }
  out += "\n";
  Table table;
  for (const auto& c : checks) {
    table.add({"g=" + to_cycle_string(c.g), "H=" + angle(c.h), "average=" + c.average().to_string(),
               "r=" + std::to_string(c.r), "holds=" + yes_no(c.holds)});
  }
  out += table.render();
  out += std::to_string(checks.size()) + " checks, " + std::to_string(holding) + " hold\n";
  return out;
}

std::string render_report(const TheoremCheck& c, Format format) {
  if (format == Format::Json) {
    return dump({{"kind", "theorem"},
                 {"group", c.group},
                 {"u", c.u},
                 {"v", c.v},
                 {"n", c.n},
                 {"hypothesis", c.hypothesis_holds},
                 {"conclusion", c.conclusion_holds},
                 {"vacuous", c.vacuous},
                 {"holds", !c.violated()}});
  }
  Table table;
  table.add({"group=" + c.group, "U=" + angle(c.u), "V=" + angle(c.v), "N=" + angle(c.n)});
  table.add({"hypothesis=" + yes_no(c.hypothesis_holds), "conclusion=" + yes_no(c.conclusion_holds),
             "vacuous=" + yes_no(c.vacuous), "holds=" + yes_no(!c.violated())});
  return "normal-subgroup theorem\n" + table.render();
}

std::string render_report(const KlingenReport& r, Format format) {
  if (format == Format::Json) {
    json doc = {{"kind", "klingen-step"}, {"group", r.group}, {"u", r.u}, {"n", r.n},
                {"note", "step-level counterexample"}};
    if (r.witness) {
      doc["witness"] = {{"sigma", to_cycle_string(r.witness->sigma)},
                        {"un_value", r.witness->un_value},
                        {"u_value", r.witness->u_value}};
    } else {
      doc["witness"] = nullptr;
    }
    return dump(doc);
  }
  std::string out = "step-level counterexample: group=" + r.group + " U=" + angle(r.u) + " N=" + angle(r.n) + "\n";
  if (r.witness) {
    Table table;
    table.add({"witness=" + to_cycle_string(r.witness->sigma), "1_UN=" + std::to_string(r.witness->un_value),
               "1_U=" + std::to_string(r.witness->u_value)});
    out += table.render();
  } else {
    out += "witness=none\n";
  }
  return out;
}

std::string render_report(const GassmannReport& r, Format format) {
  if (format == Format::Json) {
    json doc = {{"kind", "gassmann"}, {"group", r.group}, {"order", r.order}, {"pairs", json::array()}};
    for (const auto& p : r.pairs) {
      doc["pairs"].push_back({{"u", p.u.label()},
                              {"v", p.v.label()},
                              {"order", p.u.order()},
                              {"index", r.order / p.u.order()},
                              {"character", p.character}});
    }
    doc["summary"] = {{"pairs", r.pairs.size()}};
    return dump(doc);
  }
  std::string out = "gassmann pairs: group=" + r.group + " order=" + std::to_string(r.order) + "\n";
  Table table;
  for (const auto& p : r.pairs) {
    std::string values;
    for (auto v : p.character) values += (values.empty() ? "" : ",") + std::to_string(v);
    table.add({"U=" + angle(p.u.label()), "V=" + angle(p.v.label()), "order=" + std::to_string(p.u.order()),
               "character=[" + values + "]"});
  }
  out += table.render();
  out += std::to_string(r.pairs.size()) + " pairs\n";
  return out;
}

std::string render_report(const CatalogListing& listing, Format format) {
  if (format == Format::Json) {
    json doc = {{"kind", "catalog"}, {"entries", json::array()}};
    for (const CatalogEntry* e : listing.entries) {
      doc["entries"].push_back({{"name", e->name},
                                {"family", e->family},
                                {"degree", e->degree},
                                {"order", e->expected_order},
                                {"generators", e->generators},
                                {"factors", e->factors}});
    }
    return dump(doc);
  }
  Table table;
  for (const CatalogEntry* e : listing.entries) {
    std::string gens;
    for (const auto& g : e->generators) gens += (gens.empty() ? "" : ";") + g;
    for (const auto& f : e->factors) gens += (gens.empty() ? "" : " x ") + f;
    table.add({e->name, e->family, "degree=" + std::to_string(e->degree), "order=" + std::to_string(e->expected_order),
               gens});
  }
  return table.render();
}

std::string render_report(const ParseReport& r, Format format) {
  if (format == Format::Json) {
    return dump({{"kind", "group-file"}, {"canonical", r.canonical}, {"degree", r.degree}, {"order", r.order}});
  }
  return r.canonical + "# order " + std::to_string(r.order) + "\n";
}

std::string render_report(const SweepReport& r, Format format, bool include_timing) {
  if (format == Format::Json) {
    json doc = {{"kind", "sweep"},
                {"universe", r.universe},
                {"sweep_cap", r.sweep_cap},
                {"theorem_cap", r.theorem_cap},
                {"totals", counts_json(r.totals)},
                {"violations", json::array()},
                {"groups", json::array()},
                {"truncated", r.truncated.empty() ? json(nullptr) : json(r.truncated)},
                {"clean", r.clean()}};
    for (const auto& v : r.violations) doc["violations"].push_back(violation_json(v));
    for (const auto& g : r.groups) {
      doc["groups"].push_back({{"group", g.group},
                               {"order", g.order},
                               {"degree", g.degree},
                               {"chain_order", g.chain_order},
                               {"classes", g.classes},
                               {"subgroups", g.subgroups},
                               {"normal_subgroups", g.normal_subgroups},
                               {"scope", g.scope},
                               {"counts", counts_json(g.counts)},
                               {"violations", g.violations.size()}});
    }
    if (include_timing) doc["wall_seconds"] = r.wall_seconds;
    return dump(doc);
  }
  std::string out = "sweep over " + std::to_string(r.universe.size()) + " groups (sweep cap " +
                    std::to_string(r.sweep_cap) + ", theorem cap " + std::to_string(r.theorem_cap) + ")\n";
  Table table;
  for (const auto& g : r.groups) {
    std::vector<std::string> row = {g.group, "order=" + std::to_string(g.order),
                                    "subgroups=" + std::to_string(g.subgroups),
                                    "normal=" + std::to_string(g.normal_subgroups), g.scope};
    for (auto& cell : counts_cells(g.counts)) row.push_back(std::move(cell));
    row.push_back("violations=" + std::to_string(g.violations.size()));
    table.add(std::move(row));
  }
  std::vector<std::string> total = {"total", "", "", "", ""};
  for (auto& cell : counts_cells(r.totals)) total.push_back(std::move(cell));
  total.push_back("violations=" + std::to_string(r.violations.size()));
  table.add(std::move(total));
  out += table.render();
  for (const auto& v : r.violations) {
    out += "VIOLATION " + v.check + " group=" + v.group + " " + v.instance + ": " + v.detail + "\n";
  }
  if (!r.truncated.empty()) out += "TRUNCATED " + r.truncated + "\n";
  if (include_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall time %.3f s\n", r.wall_seconds);
    out += buf;
  }
  return out;
}

}  // namespace permchar

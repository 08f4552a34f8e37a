// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Optional argument: path to the permchar binary, used for the determinism check.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permchar/catalog.hpp"
#include "permchar/cycle_notation.hpp"
#include "permchar/report.hpp"
#include "permchar/stabilizer_chain.hpp"
#include "permchar/sweep.hpp"
#include "permchar/theorems.hpp"

using namespace permchar;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::size_t kUniverseOrder = 24;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << s << "s";
  return ss.str();
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double took = seconds_since(start);
  if (budget_seconds > 0 && took > budget_seconds) {
    o.pass = false;
    o.detail += " (over budget " + fmt_seconds(budget_seconds) + ")";
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << o.detail << " ("
            << fmt_seconds(took) << ")" << std::endl;
}

SweepReport& main_sweep() {
  // Shared by criteria 2-6: the sweep over the catalog up to order 24 plus the order-168 group.
  static SweepReport report = [] {
    std::vector<PermGroup> universe = catalog_universe(kUniverseOrder);
    universe.push_back(catalog_lookup("GL(3,2)"));
    return sweep(universe);
  }();
  return report;
}

std::size_t violations_of(const SweepReport& r, const std::string& check) {
  std::size_t n = 0;
  for (const auto& v : r.violations) n += v.check == check ? 1 : 0;
  return n;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<PermGroup> universe = catalog_universe(kUniverseOrder);
  std::cout << "universe: " << universe.size() << " catalog groups of order <= " << kUniverseOrder << std::endl;

  criterion(1, "C4 counterexample", 0.001, [] {
    const PermGroup c4 = catalog_lookup("C4");
    const SubgroupHandle n = SubgroupHandle::generated(c4, {perm_from_cycles("(1 3)(2 4)", 4)});
    const auto w = falsify_klingen_step(c4, trivial_subgroup(c4), n);
    if (!w) return Outcome{false, "no witness"};
    const bool ok = to_cycle_string(w->sigma) == "(1 3)(2 4)" && w->u_value == 0 && w->un_value == 2;
    return Outcome{ok, "sigma=" + to_cycle_string(w->sigma) + " 1_U=" + std::to_string(w->u_value) +
                           " 1_UN=" + std::to_string(w->un_value)};
  });

  criterion(2, "averaging lemma over order <= 24", 60, [&] {
    std::uint64_t checks = 0, bad = 0;
    for (const PermGroup& g : universe) {
      const auto subs = subgroups(g);
      for (const auto& n : normal_subgroups(g)) {
        for (const auto& u : subs) {
          for (const auto& c : check_lemma_all(g, u, n)) {
            ++checks;
            if (!c.holds || c.rhs_numerator % c.n_order != 0) ++bad;
          }
        }
      }
    }
    const SweepReport& r = main_sweep();
    const std::size_t swept = violations_of(r, "lemma") + violations_of(r, "lemma-pointwise");
    return Outcome{bad == 0 && swept == 0 && checks > 0 && checks == r.totals.lemma_class_checks,
                   std::to_string(checks) + " class checks, " + std::to_string(r.totals.lemma_pointwise_checks) +
                       " pointwise, violations " + std::to_string(bad + swept)};
  });

  criterion(3, "orbit-splitting lemma over order <= 24", 120, [&] {
    std::uint64_t checks = 0, bad = 0;
    for (const PermGroup& g : universe) {
      const auto subs = subgroups(g);
      const auto normals = normal_subgroups(g);
      for (const auto& u : subs) {
        const ActionHom action = coset_action(g, u);
        for (const auto& n : normals) {
          for (const auto& x : g.elements()) {
            ++checks;
            if (!check_fgs(action, n, x).holds) ++bad;
          }
        }
      }
    }
    const SweepReport& r = main_sweep();
    const std::size_t swept = violations_of(r, "fgs");
    return Outcome{bad == 0 && swept == 0 && checks > 0 && checks == r.totals.fgs_checks,
                   std::to_string(checks) + " instances, violations " + std::to_string(bad + swept)};
  });

  criterion(4, "direct value = fixed N-orbits = non-split orbits", 120, [&] {
    std::uint64_t checks = 0, bad = 0;
    for (const PermGroup& g : universe) {
      const auto subs = subgroups(g);
      for (const auto& n : normal_subgroups(g)) {
        for (const auto& u : subs) {
          for (const auto& cls : g.classes()) {
            const LemmaCheck c = check_lemma_via_fgs(g, u, n, g.element(cls.representative));
            ++checks;
            if (!c.holds || !c.route || c.route->direct_value != c.route->fixed_n_orbits ||
                c.route->fixed_n_orbits != c.route->nonsplit_orbits || c.lhs != c.route->direct_value) {
              ++bad;
            }
          }
        }
      }
    }
    const SweepReport& r = main_sweep();
    const std::size_t swept = violations_of(r, "orbit-route");
    return Outcome{bad == 0 && swept == 0 && checks == r.totals.route_checks,
                   std::to_string(checks) + " instances, violations " + std::to_string(bad + swept)};
  });

  criterion(5, "normal-subgroup theorem, with the order-168 group", 600, [] {
    const SweepReport& r = main_sweep();
    const PermGroup l = catalog_lookup("GL(3,2)");
    const auto pairs = gassmann_pairs(l);
    std::size_t nonvacuous = 0, bad = violations_of(r, "theorem");
    for (const auto& p : pairs) {
      if (are_conjugate_subgroups(l, p.u, p.v)) ++bad;
      for (const auto& n : normal_subgroups(l, kDefaultGassmannCap)) {
        const TheoremCheck t = check_theorem(l, p.u, p.v, n);
        if (t.violated() || !t.hypothesis_holds) ++bad;
        nonvacuous += t.hypothesis_holds ? 1 : 0;
      }
    }
    const bool covered = !r.groups.empty() && r.groups.back().group == "GL(3,2)" && r.truncated.empty();
    return Outcome{bad == 0 && covered && !pairs.empty() && nonvacuous > 0,
                   std::to_string(r.totals.theorem_checks) + " equal-character instances (" +
                       std::to_string(r.totals.theorem_nonconjugate) + " non-conjugate), " +
                       std::to_string(pairs.size()) + " Gassmann pairs in GL(3,2), violations " +
                       std::to_string(bad)};
  });

  criterion(6, "Frobenius formula and pointwise equality oracles", 0, [] {
    const SweepReport& r = main_sweep();
    const std::size_t bad = violations_of(r, "frobenius") + violations_of(r, "character-equality");
    return Outcome{bad == 0 && r.totals.frobenius_checks > 0 && r.totals.equality_oracle_checks > 0,
                   std::to_string(r.totals.frobenius_checks) + " character values, " +
                       std::to_string(r.totals.equality_oracle_checks) + " character comparisons, discrepancies " +
                       std::to_string(bad)};
  });

  criterion(7, "enumerated order = stabilizer-chain order", 0, [] {
    std::size_t bad = 0, n = 0;
    for (const auto& entry : catalog_entries()) {
      const PermGroup g = build_catalog_entry(entry);
      ++n;
      if (order_by_stabilizer_chain(g) != g.order()) ++bad;
    }
    return Outcome{bad == 0, std::to_string(n) + " catalog groups, discrepancies " + std::to_string(bad)};
  });

  criterion(8, "sweep reports are byte-identical", 0, [&] {
    const std::string a = render_report(sweep(universe), Format::Json);
    SweepOptions threaded;
    threaded.threads = 4;
    const std::string b = render_report(sweep(universe, threaded), Format::Json);
    bool ok = a == b;
    std::string detail = std::to_string(a.size()) + " bytes in-process";
    if (!cli.empty()) {
      const std::string cmd = "'" + cli + "' sweep --max-order 24 --format json";
      const std::string first = run_command(cmd);
      const std::string second = run_command(cmd);
      ok = ok && !first.empty() && first == second && first == a;
      detail += ", " + std::to_string(first.size()) + " bytes from two CLI runs";
    }
    return Outcome{ok, detail};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}

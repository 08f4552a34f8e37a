#include <algorithm>

#include "doctest.h"
#include "permchar/catalog.hpp"
#include "permchar/error.hpp"
#include "permchar/sweep.hpp"
#include "permchar/theorems.hpp"
#include "test_support.hpp"

using namespace permchar;
using test::cyc;

namespace {

PermGroup c4() { return catalog_lookup("C4"); }
PermGroup s3() { return catalog_lookup("S3"); }

SubgroupHandle sub(const PermGroup& g, std::vector<Permutation> gens) {
  return SubgroupHandle::generated(g, std::move(gens));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

const Permutation x = cyc("(1 2 3 4)", 4);
const Permutation x2 = cyc("(1 3)(2 4)", 4);

}  // namespace

TEST_CASE("check_lemma_avg") {
  const PermGroup g = c4();
  const SubgroupHandle n = sub(g, {x2});
  const LemmaCheck c = check_lemma_avg(g, trivial_subgroup(g), n, x2);
  CHECK(c.lhs == 2);
  CHECK(c.rhs_numerator == 4);
  CHECK(c.n_order == 2);
  CHECK(c.rhs().to_string() == "4/2");
  CHECK(c.holds);

  const PermGroup s = s3();
  const SubgroupHandle a3 = sub(s, {cyc("(1 2 3)", 3)});
  const LemmaCheck d = check_lemma_avg(s, sub(s, {cyc("(1 2)", 3)}), a3, cyc("(1 2)", 3));
  CHECK(d.lhs == 1);
  CHECK(d.rhs_numerator == 3);
  CHECK(d.rhs().to_string() == "3/3");
  CHECK(d.holds);

  SUBCASE("trivial N degenerates to the character") {
    const SubgroupHandle u = sub(s, {cyc("(1 2)", 3)});
    const auto chi = perm_character(s, u);
    for (const auto& y : s.elements()) {
      const LemmaCheck e = check_lemma_avg(s, u, trivial_subgroup(s), y);
      CHECK(e.lhs == character_value(chi, y));
      CHECK(e.rhs_numerator == e.lhs);
      CHECK(e.holds);
    }
  }

  SUBCASE("errors") {
    const SubgroupHandle t = sub(s, {cyc("(1 3)", 3)});
    CHECK(code_of([&] { check_lemma_avg(s, trivial_subgroup(s), t, cyc("(1 3)", 3)); }) == ErrorCode::NotNormal);
    CHECK(code_of([&] { check_lemma_avg(s, trivial_subgroup(g), a3, cyc("(1 3)", 3)); }) == ErrorCode::NotASubgroup);
    CHECK(code_of([&] { check_lemma_avg(g, trivial_subgroup(g), n, cyc("(1 2)", 4)); }) == ErrorCode::NotInGroup);
  }
}

TEST_CASE("check_lemma_all") {
  const PermGroup g = c4();
  const auto checks = check_lemma_all(g, trivial_subgroup(g), sub(g, {x2}));
  REQUIRE(checks.size() == 4);
  const std::vector<std::int64_t> lhs{2, 0, 2, 0};
  const std::vector<std::string> rhs{"4/2", "0/2", "4/2", "0/2"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(checks[i].g == g.element(static_cast<ElementIndex>(i)));
    CHECK(checks[i].lhs == lhs[i]);
    CHECK(checks[i].rhs().to_string() == rhs[i]);
    CHECK(checks[i].holds);
  }

  const PermGroup s = s3();
  for (const auto& n : normal_subgroups(s)) {
    for (const auto& c : check_lemma_all(s, whole_group(s), n)) {
      CHECK(c.lhs == 1);
      CHECK(c.rhs().equals(1));
    }
  }
  const auto sym = check_lemma_all(s, sub(s, {cyc("(1 2)", 3)}), sub(s, {cyc("(1 2 3)", 3)}));
  CHECK(sym.size() == 3);
  CHECK(std::all_of(sym.begin(), sym.end(), [](const LemmaCheck& c) { return c.holds; }));
  CHECK(check_lemma_all(s, trivial_subgroup(s), trivial_subgroup(s), true).size() == 6);

  SUBCASE("holds everywhere on desk-scale groups, pointwise too") {
    for (const char* name : {"D4", "Q8", "A4", "S4", "C2xS3", "D6"}) {
      CAPTURE(name);
      const PermGroup grp = catalog_lookup(name);
      for (const auto& n : normal_subgroups(grp)) {
        for (const auto& u : subgroups(grp)) {
          for (bool pointwise : {false, true}) {
            for (const auto& c : check_lemma_all(grp, u, n, pointwise)) {
              CHECK(c.holds);
              CHECK(c.rhs_numerator % c.n_order == 0);
            }
          }
        }
      }
    }
  }

  SUBCASE("the average depends only on the coset gN") {
    for (const char* name : {"D4", "S4", "C2xD4"}) {
      CAPTURE(name);
      const PermGroup grp = catalog_lookup(name);
      for (const auto& n : normal_subgroups(grp)) {
        for (const auto& u : subgroups(grp)) {
          for (const auto& cls : grp.classes()) {
            const Permutation& y = grp.element(cls.representative);
            const Fraction base = check_lemma_avg(grp, u, n, y).rhs();
            for (const auto& m : n.elements()) CHECK(check_lemma_avg(grp, u, n, compose(y, m)).rhs() == base);
          }
        }
      }
    }
  }
}

TEST_CASE("check_fgs") {
  const PermGroup g = c4();
  const SubgroupHandle n = sub(g, {x2});
  const ActionHom regular = coset_action(g, trivial_subgroup(g));

  const FgsCheck a = check_fgs(regular, n, x);
  CHECK(a.average().to_string() == "0/2");
  CHECK(a.r == 0);
  CHECK(a.holds);

  const FgsCheck b = check_fgs(regular, n, x2);
  CHECK(b.average().to_string() == "4/2");
  CHECK(b.r == 2);
  CHECK(b.holds);

  SUBCASE("trivial N gives the fixed-point count") {
    const PermGroup s = catalog_lookup("S4");
    for (const auto& u : subgroups(s)) {
      const ActionHom act = coset_action(s, u);
      for (const auto& y : s.elements()) {
        const FgsCheck c = check_fgs(act, trivial_subgroup(s), y);
        CHECK(c.r == fixed_points(act, y));
        CHECK(c.average().equals(c.r));
        CHECK(c.holds);
      }
    }
  }

  SUBCASE("N not normal in <N, g>") {
    const PermGroup s = s3();
    const ActionHom act = coset_action(s, trivial_subgroup(s));
    CHECK(code_of([&] { check_fgs(act, sub(s, {cyc("(1 2)", 3)}), cyc("(1 2 3)", 3)); }) ==
          ErrorCode::NotNormalInGeneratedH);
  }

  SUBCASE("holds for subgroups normal only in <N, g>") {
    const PermGroup grp = catalog_lookup("S4");
    for (const auto& u : subgroups(grp)) {
      const ActionHom act = coset_action(grp, u);
      for (const auto& nn : subgroups(grp)) {
        for (const auto& y : grp.elements()) {
          if (!is_normal_in(nn, generated_with(grp, nn, y))) continue;
          CHECK(check_fgs(act, nn, y).holds);
        }
      }
    }
  }
}

TEST_CASE("check_lemma_via_fgs") {
  const PermGroup g = c4();
  const SubgroupHandle n = sub(g, {x2});
  const LemmaCheck a = check_lemma_via_fgs(g, trivial_subgroup(g), n, x);
  REQUIRE(a.route.has_value());
  CHECK(a.route->fixed_n_orbits == 0);
  CHECK(a.route->nonsplit_orbits == 0);
  CHECK(a.rhs().equals(0));
  CHECK(a.holds);

  const LemmaCheck b = check_lemma_via_fgs(g, trivial_subgroup(g), n, x2);
  REQUIRE(b.route.has_value());
  CHECK(b.route->fixed_n_orbits == 2);
  CHECK(b.route->nonsplit_orbits == 2);
  CHECK(b.route->direct_value == 2);
  CHECK(b.rhs().equals(2));
  CHECK(b.holds);

  SUBCASE("both routes agree everywhere") {
    for (const char* name : {"S3", "D4", "A4", "S4", "C2xS3"}) {
      CAPTURE(name);
      const PermGroup grp = catalog_lookup(name);
      for (const auto& nn : normal_subgroups(grp)) {
        for (const auto& u : subgroups(grp)) {
          const auto chi = perm_character(grp, u);
          for (const auto& y : grp.elements()) {
            const LemmaCheck c = check_lemma_via_fgs(grp, u, nn, y);
            CHECK(c.holds);
            CHECK(c.route->direct_value == c.route->fixed_n_orbits);
            CHECK(c.route->fixed_n_orbits == c.route->nonsplit_orbits);
            if (nn.order() == 1) CHECK(c.lhs == character_value(chi, y));
          }
        }
      }
    }
  }
}

TEST_CASE("check_theorem") {
  const PermGroup s = s3();
  const SubgroupHandle a3 = sub(s, {cyc("(1 2 3)", 3)});
  const TheoremCheck a = check_theorem(s, sub(s, {cyc("(1 2)", 3)}), sub(s, {cyc("(1 3)", 3)}), a3);
  CHECK(a.hypothesis_holds);
  CHECK(a.conclusion_holds);
  CHECK_FALSE(a.vacuous);
  CHECK_FALSE(a.violated());

  const PermGroup g = c4();
  const SubgroupHandle n = sub(g, {x2});
  const TheoremCheck b = check_theorem(g, trivial_subgroup(g), n, n);
  CHECK_FALSE(b.hypothesis_holds);
  CHECK(b.vacuous);
  CHECK_FALSE(b.violated());

  const SubgroupHandle t = sub(s, {cyc("(1 2)", 3)});
  const TheoremCheck c = check_theorem(s, t, t, trivial_subgroup(s));
  CHECK(c.hypothesis_holds);
  CHECK(c.conclusion_holds);

  CHECK(code_of([&] { check_theorem(s, t, t, t); }) == ErrorCode::NotNormal);
  CHECK(code_of([&] { check_theorem(s, trivial_subgroup(g), t, a3); }) == ErrorCode::NotASubgroup);
}

TEST_CASE("falsify_klingen_step") {
  const PermGroup g = c4();
  const auto w = falsify_klingen_step(g, trivial_subgroup(g), sub(g, {x2}));
  REQUIRE(w.has_value());
  CHECK(w->sigma == x2);
  CHECK(w->un_value == 2);
  CHECK(w->u_value == 0);
  // The averaging identity still holds on the same instance.
  CHECK(check_lemma_avg(g, trivial_subgroup(g), sub(g, {x2}), w->sigma).holds);

  const PermGroup s = s3();
  for (const auto& n : normal_subgroups(s)) CHECK_FALSE(falsify_klingen_step(s, whole_group(s), n).has_value());

  const auto v = falsify_klingen_step(s, sub(s, {cyc("(1 2)", 3)}), sub(s, {cyc("(1 2 3)", 3)}));
  REQUIRE(v.has_value());
  CHECK(v->sigma.element_order() == 3);
  CHECK(v->sigma == cyc("(1 2 3)", 3));
  CHECK(v->un_value == 1);
  CHECK(v->u_value == 0);

  CHECK(code_of([&] { falsify_klingen_step(s, trivial_subgroup(s), sub(s, {cyc("(1 2)", 3)})); }) ==
        ErrorCode::NotNormal);
}

TEST_CASE("gassmann_pairs") {
  CHECK(gassmann_pairs(c4()).empty());
  CHECK(gassmann_pairs(s3()).empty());
  CHECK(code_of([] { gassmann_pairs(catalog_lookup("S6")); }) == ErrorCode::SweepCapExceeded);

  const PermGroup l = catalog_lookup("GL(3,2)");
  const auto pairs = gassmann_pairs(l);
  REQUIRE(pairs.size() == 6);
  std::vector<std::vector<std::int64_t>> chars;
  for (const auto& p : pairs) {
    CHECK(p.u.order() == p.v.order());
    CHECK(p.u < p.v);
    CHECK_FALSE(are_conjugate_subgroups(l, p.u, p.v).has_value());
    CHECK(characters_equal(perm_character(l, p.u), perm_character(l, p.v)));
    chars.push_back(p.character);
  }
  std::sort(chars.begin(), chars.end());
  const std::vector<std::vector<std::int64_t>> expected{
      {7, 3, 1, 1, 0, 0}, {7, 3, 1, 1, 0, 0}, {14, 2, 0, 2, 0, 0},
      {14, 2, 0, 2, 0, 0}, {42, 6, 0, 0, 0, 0}, {42, 6, 0, 0, 0, 0}};
  CHECK(chars == expected);
  // Some pair has index 7: the two classes of point and line stabilizers.
  CHECK(std::any_of(pairs.begin(), pairs.end(), [](const GassmannPair& p) { return p.u.order() == 24; }));

  SUBCASE("Theorem conclusion on every Gassmann pair") {
    const auto normals = normal_subgroups(l, 400);
    CHECK(normals.size() == 2);
    for (const auto& p : pairs) {
      for (const auto& n : normals) {
        const TheoremCheck t = check_theorem(l, p.u, p.v, n);
        CHECK(t.hypothesis_holds);
        CHECK(t.conclusion_holds);
      }
    }
  }
}

TEST_CASE("sweep") {
  SUBCASE("C4") {
    const GroupSweep row = sweep_group(c4(), {});
    CHECK(row.scope == "full");
    CHECK(row.subgroups == 3);
    CHECK(row.normal_subgroups == 3);
    CHECK(row.classes == 4);
    CHECK(row.counts.lemma_class_checks == 3 * 3 * 4);
    CHECK(row.counts.order_checks == 1);
    CHECK(row.chain_order == 4);
    CHECK(row.violations.empty());
  }

  SUBCASE("empty universe") {
    const SweepReport r = sweep(std::span<const PermGroup>{});
    CHECK(r.groups.empty());
    CHECK(r.totals == SweepCounts{});
    CHECK(r.clean());
  }

  SUBCASE("theorem-only scope and truncation") {
    const PermGroup l = catalog_lookup("GL(3,2)");
    SweepOptions opts;
    const GroupSweep row = sweep_group(l, opts);
    CHECK(row.scope == "theorem-only");
    CHECK(row.counts.lemma_class_checks == 0);
    CHECK(row.counts.theorem_nonconjugate > 0);
    CHECK(row.violations.empty());

    opts.theorem_cap = 100;
    CHECK(code_of([&] { sweep_group(l, opts); }) == ErrorCode::SweepCapExceeded);
    const std::vector<PermGroup> universe{c4(), l, s3()};
    const SweepReport r = sweep(universe, opts);
    CHECK(r.groups.size() == 1);
    CHECK_FALSE(r.truncated.empty());
    CHECK_FALSE(r.clean());
  }

  SUBCASE("deterministic across thread counts") {
    const auto universe = catalog_universe(12, kDefaultOrderCap);
    SweepOptions one;
    SweepOptions many;
    many.threads = 4;
    const SweepReport a = sweep(universe, one);
    const SweepReport b = sweep(universe, many);
    REQUIRE(a.groups.size() == b.groups.size());
    CHECK(a.totals == b.totals);
    for (std::size_t i = 0; i < a.groups.size(); ++i) {
      CHECK(a.groups[i].group == b.groups[i].group);
      CHECK(a.groups[i].counts == b.groups[i].counts);
    }
    CHECK(a.clean());
  }
}

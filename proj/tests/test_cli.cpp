#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "permchar/cli.hpp"

using permchar::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "permchar");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = PERMCHAR_TEST_DATA;

}  // namespace

TEST_CASE("check-lemma") {
  const Run r = run({"check-lemma", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 checks, 4 hold") != std::string::npos);

  const Run j = run({"check-lemma", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("checks").size() == 4);
  CHECK(doc.at("checks").at(2).at("rhs") == "4/2");

  const Run e = run({"check-lemma", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)", "--element",
                     "(1 3)(2 4)", "--via-fgs"});
  CHECK(e.code == 0);
  CHECK(e.out.find("lhs=2") != std::string::npos);

  const Run p = run({"check-lemma", "--group", "S4", "--subgroup", "(1 2)", "--normal", "(1 2)(3 4);(1 3)(2 4)",
                     "--pointwise"});
  CHECK(p.code == 0);
  CHECK(p.out.find("24 checks, 24 hold") != std::string::npos);

  CHECK(run({"check-lemma", "--group", "S3", "--subgroup", "", "--normal", "(1 2)"}).code == 2);
}

TEST_CASE("check-fgs") {
  const Run r = run({"check-fgs", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)", "--element",
                     "(1 2 3 4)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("r=0") != std::string::npos);
  CHECK(run({"check-fgs", "--group", "S3", "--subgroup", "", "--normal", "(1 2)", "--element", "(1 2 3)"}).code == 2);
}

TEST_CASE("check-theorem") {
  const Run r = run({"check-theorem", "--group", "S3", "--u", "(1 2)", "--v", "(1 3)", "--normal", "(1 2 3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hypothesis=true") != std::string::npos);
  CHECK(r.out.find("conclusion=true") != std::string::npos);
  const Run v = run({"check-theorem", "--group", "C4", "--u", "", "--v", "(1 3)(2 4)", "--normal", "(1 3)(2 4)"});
  CHECK(v.code == 0);
  CHECK(v.out.find("vacuous=true") != std::string::npos);
}

TEST_CASE("falsify-klingen") {
  const Run r = run({"falsify-klingen", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness=(1 3)(2 4)") != std::string::npos);
  CHECK(r.out.find("1_UN=2") != std::string::npos);
  CHECK(r.out.find("1_U=0") != std::string::npos);
  CHECK(run({"falsify-klingen", "--group", "C4", "--subgroup", "", "--normal", "(1 3)(2 4)", "--expect-none"}).code ==
        1);

  const Run none = run({"falsify-klingen", "--group", "S3", "--subgroup", "(1 2);(1 2 3)", "--normal", "(1 2 3)"});
  CHECK(none.code == 1);
  CHECK(run({"falsify-klingen", "--group", "S3", "--subgroup", "(1 2);(1 2 3)", "--normal", "(1 2 3)",
             "--expect-none"})
            .code == 0);
}

TEST_CASE("gassmann-search") {
  const Run r = run({"gassmann-search", "--group", "GL(3,2)", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("pairs").size() == 6);
  CHECK(run({"gassmann-search", "--group", "C4"}).code == 0);
  CHECK(run({"gassmann-search", "--group", "S6"}).code == 2);
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--max-order", "8", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("clean") == true);
  CHECK_FALSE(doc.contains("wall_seconds"));
  CHECK(run({"sweep", "--max-order", "8", "--format", "json", "--threads", "3"}).out == r.out);
  CHECK(nlohmann::json::parse(run({"sweep", "--max-order", "0", "--timing", "--format", "json"}).out)
            .contains("wall_seconds"));

  const Run named = run({"sweep", "--max-order", "0", "--include", "C4", "--include", "GL(3,2)"});
  CHECK(named.code == 0);
  CHECK(named.out.find("theorem-only") != std::string::npos);

  CHECK(run({"sweep", "--max-order", "0", "--include", "GL(3,2)", "--theorem-cap", "100"}).code == 2);
}

TEST_CASE("catalog and parse") {
  const Run c = run({"catalog", "--max-order", "4"});
  CHECK(c.code == 0);
  CHECK(c.out.find("C4") != std::string::npos);
  CHECK(run({"catalog", "--name", "GL(3,2)"}).out == "name GL(3,2)\ndegree 7\ngen (1 2 3 4 5 6 7)\ngen (1 2)(3 6)\n");

  const Run p = run({"parse", kData + "/gl32.group"});
  CHECK(p.code == 0);
  CHECK(p.out.find("gen (1 2)(3 6)") != std::string::npos);
  const Run bad = run({"parse", kData + "/bad_point.group"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("PointOutOfRange") != std::string::npos);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"parse", kData + "/missing.group"}).code == 2);
}

TEST_CASE("group sources and usage errors") {
  CHECK(run({"check-lemma", "--group-file", kData + "/c4.group", "--subgroup", "", "--normal", "(1 3)(2 4)"}).code ==
        0);
  CHECK(run({"check-lemma", "--subgroup", "", "--normal", ""}).code == 2);
  CHECK(run({"check-lemma", "--group", "C4", "--group-file", kData + "/c4.group", "--normal", ""}).code == 2);
  CHECK(run({"check-lemma", "--group", "NoSuchGroup"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-lemma", "--group", "C4", "--normal", "", "--format", "yaml"}).code == 2);
  CHECK(run({"check-lemma", "--group", "S5", "--normal", "", "--order-cap", "10"}).code == 2);
  CHECK(run({"gassmann-search", "--group", "S4", "--search-cap", "10"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-lemma") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"check-lemma", "--group", "D4", "--subgroup", "(2 4)", "--normal",
                                      "(1 3)(2 4)", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

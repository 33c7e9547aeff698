#include "doctest.h"
#include "swl/error.hpp"
#include "swl/harness.hpp"

using namespace swl;

namespace {

const ClaimRegistry& paper() {
  static ClaimRegistry reg = ClaimRegistry::load(default_fixtures_dir() + "/paper.claims.json");
  return reg;
}

}  // namespace

TEST_CASE("registry loads with anchors") {
  REQUIRE(paper().claims().size() > 30);
  for (const auto& c : paper().claims()) {
    CHECK(!c.anchor.empty());
    CHECK((c.provenance == "paper" || c.provenance == "external"));
  }
  CHECK_THROWS_AS(paper().find("no.such.claim"), ParseError);
}

TEST_CASE("run_claim examples") {
  CHECK(run_claim(paper().find("split.sym_p_plus_1"), 5).status == ClaimStatus::pass);
  auto g = run_claim(paper().find("Groth_relation"), 5);
  CHECK(g.status == ClaimStatus::pass);
  CHECK(g.cases == 135);
  CHECK(run_claim(paper().find("Groth_Ha"), 5).status == ClaimStatus::pass);
  CHECK_THROWS_AS(run_claim(paper().find("twotwo.identity"), 3), ParseError);
  CHECK_THROWS_AS(run_claim(paper().find("twotwo.identity"), 9), ParseError);
}

TEST_CASE("run_suite edge cases") {
  auto empty = run_suite(paper(), {});
  CHECK(empty.reports.empty());
  CHECK(empty.ok());
  CHECK_THROWS_AS(run_suite(paper(), {4}), ParseError);
  auto r = run_suite(paper(), {7, 5});
  CHECK(r.ok());
  for (std::size_t i = 1; i < r.reports.size(); ++i)
    CHECK(std::tie(r.reports[i - 1].id, r.reports[i - 1].p) <
          std::tie(r.reports[i].id, r.reports[i].p));
}

TEST_CASE("mutants fail") {
  const auto& c = paper().find("twotwo.identity");
  auto ms = multiplicity_mutants(c);
  CHECK(ms.size() == 2 * (1 + 4));
  for (const auto& m : ms) {
    auto r = run_claim(m, 5);
    CHECK(r.status == ClaimStatus::fail);
    CHECK(!r.detail.empty());
  }
}

TEST_CASE("counterexample detail names the parameters") {
  auto j = json::parse(R"({"claims":[{"id":"bad","anchor":"x","kind":"identity",
    "params":[{"name":"k","from":2,"to":"p"}],
    "lhs":"Sym[0]^k Sym[1]^0","rhs":"Sym[0]^k Sym[1]^0 + {k==4} Sym[0]^0 Sym[1]^0"}]})");
  auto reg = ClaimRegistry::from_json(j);
  auto r = run_claim(reg.find("bad"), 5);
  CHECK(r.status == ClaimStatus::fail);
  CHECK(r.detail.rfind("at k=4: ", 0) == 0);
}

TEST_CASE("zero cases is reported as skipped") {
  auto j = json::parse(R"({"claims":[{"id":"empty","anchor":"x","kind":"identity",
    "params":[{"name":"k","from":"p","to":2}],"lhs":"Sym[0]^k Sym[1]^0","rhs":"Sym[0]^k Sym[1]^0"}]})");
  CHECK(run_claim(ClaimRegistry::from_json(j).find("empty"), 5).status == ClaimStatus::skipped);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(ClaimRegistry::load("/nonexistent/claims.json"), ParseError);
  CHECK_THROWS_AS(ClaimRegistry::from_json(json::parse(R"({"claims":[{"id":"a","kind":"identity"}]})")),
                  ParseError);
  CHECK_THROWS_AS(ClaimRegistry::from_json(json::parse(
                      R"({"claims":[{"id":"a","anchor":"x","kind":"magic"}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      ClaimRegistry::from_json(json::parse(R"({"claims":[
        {"id":"a","anchor":"x","kind":"identity","lhs":"Sym[0]^1 Sym[1]^0","rhs":"Sym[0]^1 Sym[1]^0"},
        {"id":"a","anchor":"x","kind":"identity","lhs":"Sym[0]^1 Sym[1]^0","rhs":"Sym[0]^1 Sym[1]^0"}]})")),
      ParseError);
  auto j = json::parse(R"({"claims":[{"id":"s","anchor":"x","kind":"intersection","mode":"disjoint",
    "class":"Sym[0]^3 Sym[1]^0","sets":{"A":["Sym[0]^7 Sym[1]^0"]}}]})");
  CHECK_THROWS_AS(run_claim(ClaimRegistry::from_json(j).find("s"), 5), ParseError);
}

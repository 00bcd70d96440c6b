#include <doctest.h>

#include <stdexcept>

#include "hdiff/suites.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

}  // namespace

TEST_CASE("every suite runs at n = 2") {
  for (const auto& name : suite_names()) {
    if (name == "ore") continue;
    CAPTURE(name);
    const SuiteResult res = run_suite(name, SuiteParams{});
    CHECK(res.suite == name);
    CHECK(!res.report.checks().empty());
    CHECK_MESSAGE(res.report.passed(), first_failure(res.report));
  }
}

TEST_CASE("suite results") {
  CHECK(run_suite("dybe", SuiteParams{}).report.checks().size() == 64);
  const SuiteResult refl = run_suite("reflection", SuiteParams{});
  bool pinned = false;
  for (const auto& c : refl.report.checks()) pinned = pinned || c.name == "convention noshift";
  CHECK(pinned);
}

TEST_CASE("out of scope parameters are skipped") {
  SuiteParams p;
  p.N = 2;
  for (const char* name : {"zhelobenko", "epsilon", "center", "core-lemmas", "iso", "hw", "vmod", "ore"}) {
    CAPTURE(name);
    const SuiteResult res = run_suite(name, p);
    REQUIRE(res.report.checks().size() == 1);
    CHECK(res.report.checks()[0].status == Status::Skipped);
    CHECK(res.report.checks()[0].witness == "out of paper scope");
    CHECK(res.report.passed());
  }
  CHECK(run_suite("sn", p).report.passed());
  CHECK(run_suite("reflection", p).report.passed());
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(run_suite("nope", SuiteParams{}), std::invalid_argument);
  SuiteParams p;
  p.n = 0;
  CHECK_THROWS_AS(run_suite("dybe", p), std::invalid_argument);
  p.n = 2;
  p.degree = 0;
  CHECK_THROWS_AS(run_suite("consistency", p), std::invalid_argument);
}

TEST_CASE("seeded suites are reproducible") {
  SuiteParams p;
  p.seed = 99;
  for (const char* name : {"consistency", "vmod", "ore", "center"}) {
    const auto a = run_suite(name, p).report.sorted();
    const auto b = run_suite(name, p).report.sorted();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].status == b[i].status);
      CHECK(a[i].witness == b[i].witness);
    }
  }
}

TEST_CASE("sampling helpers") {
  const RingCtx ctx(3);
  std::uint64_t s1 = 5, s2 = 5;
  CHECK(random_word(ctx, s1, 3) == random_word(ctx, s2, 3));
  CHECK(s1 == s2);
  CHECK(s1 != 5);
  const Report a = verify_associativity(RingCtx(2, 2), 3, 30, 3);
  CHECK(a.checks().size() == 30);
  CHECK_MESSAGE(a.passed(), first_failure(a));
  const Report c = center_decision_suite(2, 4, 3, 3);
  CHECK(c.checks().size() == 6);
  CHECK_MESSAGE(c.passed(), first_failure(c));
}

#include <doctest.h>

#include "hdiff/linalg.hpp"
#include "hdiff/reduction.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

}  // namespace

TEST_CASE("linear solve over Q(h)") {
  // [[h1, 1], [1, -1]] x = [h1 + 1, 0]  ->  x = (1, 1)
  RatMatrix a{{hvar(1), RatFunc(1)}, {RatFunc(1), RatFunc(-1)}};
  auto sol = solve(a, {hvar(1) + RatFunc(1), RatFunc(0)});
  REQUIRE(sol);
  CHECK(sol->rank == 2);
  CHECK(sol->x[0] == RatFunc(1));
  CHECK(sol->x[1] == RatFunc(1));

  RatMatrix singular{{RatFunc(1), RatFunc(1)}, {RatFunc(2), RatFunc(2)}};
  CHECK_FALSE(solve(singular, {RatFunc(1), RatFunc(3)}));
  auto free = solve(singular, {RatFunc(1), RatFunc(2)});
  REQUIRE(free);
  CHECK(free->rank == 1);
  CHECK(free->x[1].is_zero());
}

TEST_CASE("tau_N entries") {
  const LMatrix t = tau_L(2, 2);
  const RingCtx& c = t.ctx;
  Element expect = Element::gen(c, Generator::z(2, 1)) * Element::gen(c, Generator::d(1, 1)) +
                   Element::gen(c, Generator::z(2, 2)) * Element::gen(c, Generator::d(1, 2));
  CHECK(t.at(1, 2) == expect);
  const LMatrix t1 = tau_L(2, 1);
  CHECK(t1.at(1, 2).to_string() == "((h[1]^2 - 2*h[1]*h[2] + h[2]^2 + 2*h[1] - 2*h[2])/((h[1] - h[2] + 1)^2))*d[1]*Z[2]");
  CHECK(t1.at(2, 1).to_string() == "d[2]*Z[1]");
}

TEST_CASE("reflection equation") {
  for (int N = 1; N <= 2; ++N) {
    CAPTURE(N);
    CHECK(verify_reflection(1, N, ReflectionConvention::NoShift).passed());
    const Report r = verify_reflection(2, N, ReflectionConvention::NoShift);
    CHECK_MESSAGE(r.passed(), first_failure(r));
    CHECK(r.checks().size() == 16);
  }
  const Report r3 = verify_reflection(3, 1, ReflectionConvention::NoShift);
  CHECK_MESSAGE(r3.passed(), first_failure(r3));
}

TEST_CASE("reflection convention discovery") {
  const ReflectionDiscovery d = discover_reflection_convention(2, 1);
  CHECK(d.found);
  CHECK(d.convention == ReflectionConvention::NoShift);
  CHECK(d.report.passed());
  // the transposed L placement is a negative control
  for (int N = 1; N <= 2; ++N) {
    CHECK(verify_reflection(2, N, ReflectionConvention::TransposedR).passed());
    CHECK(verify_reflection(2, N, ReflectionConvention::TransposedL).failures() == 10);
    CHECK(verify_reflection(2, N, ReflectionConvention::InteriorShift).failures() == 12);
  }
  CHECK(parse_convention("noshift") == ReflectionConvention::NoShift);
  CHECK_THROWS_AS(parse_convention("nope"), std::invalid_argument);
}

TEST_CASE("tau_N respects the weight grading") {
  for (auto [n, N] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const Report r = verify_tau_weights(n, N);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("S_n acts on the tau image independently of N") {
  for (auto [n, N] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    CAPTURE(n);
    CAPTURE(N);
    const Report r = verify_sn_on_image(n, N);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

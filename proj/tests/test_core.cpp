#include <doctest.h>

#include <chrono>

#include "hdiff/core.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

}  // namespace

TEST_CASE("R-matrix entries") {
  const RatFunc h12 = hdiff_ij(1, 2);
  CHECK(rhat(1, 2, 1, 2, 2) == RatFunc(1) / h12);
  CHECK(rhat(1, 1, 1, 1, 2) == RatFunc(1));
  CHECK(rhat(1, 2, 1, 1, 2).is_zero());
  CHECK(rhat(1, 2, 2, 1, 2) == RatFunc::fraction((h12 * h12 - RatFunc(1)).numerator(), (h12 * h12).numerator()));
  CHECK(rhat(2, 1, 1, 2, 2) == RatFunc(1));
  CHECK(rhat(2, 1, 2, 1, 2) == RatFunc(-1) / h12);
  CHECK_THROWS_WITH(rhat(0, 1, 1, 1, 2), "index out of range");
}

TEST_CASE("dynamical Yang-Baxter equation") {
  for (int n : {1, 2, 3}) {
    const Report r = verify_dybe(n);
    CHECK(r.checks().size() == static_cast<std::size_t>(n * n * n * n * n * n));
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("defining relations and the R-matrix form") {
  for (RingCtx c : {RingCtx(1), RingCtx(2), RingCtx(3), RingCtx(2, 2), RingCtx(3, 2)}) {
    const Report a = verify_relations(c);
    CHECK_MESSAGE(a.passed(), first_failure(a));
    const Report b = verify_rmatrix_form(c);
    CHECK_MESSAGE(b.passed(), first_failure(b));
  }
}

TEST_CASE("special elements") {
  RingCtx c(2);
  CHECK(gamma_element(c, 1).to_string() == "d[1]*Z[1]");
  const Element c1 = central_element(c, 1);
  const Element want = gamma_element(c, 1) + gamma_element(c, 2) - Element::scalar(c, hvar(1) + hvar(2));
  CHECK(c1 == want);
  // The coefficient of Gamma_j in c_n is prod_{k != j} h_k.
  for (int n : {2, 3}) {
    RingCtx cn(n);
    const Element cc = central_element(cn, n);
    for (int j = 1; j <= n; ++j) {
      RatFunc p(1);
      for (int k = 1; k <= n; ++k)
        if (k != j) p *= hvar(k);
      NormalMonomial m;
      m.d[j - 1] = 1;
      m.z[j - 1] = 1;
      CHECK(cc.coefficient(m) == p);
    }
  }
  CHECK_THROWS(central_element(RingCtx(2, 2), 1));
}

TEST_CASE("core lemmas") {
  for (int n : {1, 2, 3}) {
    const Report r = verify_core_lemmas(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("centrality of c_k") {
  for (int n : {1, 2, 3}) {
    const Report r = verify_centrality(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

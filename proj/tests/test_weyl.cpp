#include <doctest.h>

#include <random>

#include "hdiff/structural.hpp"
#include "hdiff/weyl.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

RatFunc H(int i) { return weyl_h(i); }

WeylElement random_weyl(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> site(1, n), e(-2, 2), k(-3, 3);
  WeylElement u(n);
  for (int t = 0; t < 3; ++t) {
    Exponents b{};
    for (int i = 0; i < n; ++i) b[i] = e(rng);
    RatFunc c = H(site(rng)) + RatFunc(static_cast<long>(k(rng)));
    if (n > 1 && t == 0) c = c / (H(1) - H(2) + RatFunc(static_cast<long>(k(rng))));
    u.add_term(b, c);
  }
  return u;
}

}  // namespace

TEST_CASE("twisted products") {
  const int n = 2;
  const WeylElement X1 = wgen(WeylGen::X, 1, n), D1 = wgen(WeylGen::D, 1, n);
  CHECK(wproduct(D1, X1) == wgen(WeylGen::H, 1, n));
  CHECK(D1 * X1 - X1 * D1 == WeylElement::scalar(n, RatFunc(1)));
  const WeylElement hx = H(1) * X1;
  Exponents two{};
  two[0] = 2;
  CHECK(hx * hx == WeylElement::monomial(n, two, H(1) * (H(1) - RatFunc(1))));
  CHECK(X1 * D1 == WeylElement::scalar(n, H(1) - RatFunc(1)));
}

TEST_CASE("named generators") {
  CHECK(wgen(WeylGen::PsiPrime, 1, 3) == WeylElement::scalar(3, RatFunc(1)));
  CHECK(wgen(WeylGen::Psi, 1, 3) == WeylElement::scalar(3, (H(1) - H(2)) * (H(1) - H(3))));
  CHECK(wgen(WeylGen::Upsilon, 1, 2) == WeylElement::scalar(2, H(1) * H(1) + weyl_a(1) * H(1) - weyl_a(2)));
  CHECK(wgen(WeylGen::Upsilon, 1, 1) == WeylElement::scalar(1, H(1) + weyl_a(1)));
  CHECK_THROWS_WITH(wgen(WeylGen::X, 3, 2), "index out of range");
}

TEST_CASE("denominator whitelist") {
  const int n = 2;
  CHECK(denominator_whitelist(WeylElement::scalar(n, (H(1) - H(2) + RatFunc(3)).inverse()), DenominatorMode::T).ok);
  CHECK_FALSE(denominator_whitelist(WeylElement::scalar(n, H(1).inverse()), DenominatorMode::T).ok);
  const WeylElement xinv = WeylElement::x(n, 1, -1);
  CHECK(denominator_whitelist(xinv, DenominatorMode::T).ok);
  CHECK_FALSE(denominator_whitelist(xinv, DenominatorMode::T0).ok);
  CHECK(denominator_whitelist(wgen(WeylGen::D, 1, n).pow(2), DenominatorMode::T0).ok);
  CHECK_FALSE(denominator_whitelist(H(1) * xinv * xinv, DenominatorMode::T0).ok);
  CHECK_FALSE(denominator_whitelist(WeylElement::scalar(n, (H(1) - H(2) + RatFunc(Rational(1, 2))).inverse()),
                                    DenominatorMode::T).ok);
}

TEST_CASE("Weyl-side Zhelobenko maps") {
  const WeylMap q = weyl_zhelobenko_map(1, 2);
  CHECK(q.x_images[0] == (H(1) - H(2)).inverse() * wgen(WeylGen::X, 2, 2));
  CHECK(q.d_images[0] * q.x_images[0] == wgen(WeylGen::H, 2, 2));
  for (int n : {2, 3, 4})
    for (int i = 1; i < n; ++i) {
      const Report r = weyl_zhelobenko(i, n);
      CHECK_MESSAGE(r.passed(), first_failure(r));
    }
  for (int n : {3, 4}) {
    const Report r = verify_weyl_braid(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("presentation and associativity") {
  for (int n : {1, 2, 3}) {
    const Report r = verify_weyl_presentation(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const WeylElement a = random_weyl(rng, 2), b = random_weyl(rng, 2), c = random_weyl(rng, 2);
    CHECK((a * b) * c == a * (b * c));
  }
  const WeylMap q = weyl_zhelobenko_map(1, 2);
  for (int t = 0; t < 20; ++t) {
    const WeylElement a = random_weyl(rng, 2), b = random_weyl(rng, 2);
    CHECK(apply(q, a * b) == apply(q, a) * apply(q, b));
  }
}

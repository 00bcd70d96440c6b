#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hdiff/ratfunc.hpp"

using namespace hdiff;

namespace {

Poly x(int v) { return Poly::var(v); }
RatFunc h(int i) { return RatFunc::var(weight_var(i)); }

std::vector<std::string> names() {
  std::vector<std::string> n(kNumVars);
  for (int v = 0; v < kNumVars; ++v) n[v] = "x" + std::to_string(v);
  return n;
}

// Random rational function with denominators built from h_i - h_j + k.
RatFunc random_ratfunc(std::mt19937& rng, int sites) {
  std::uniform_int_distribution<int> site(1, sites), small(-3, 3), coin(0, 2);
  RatFunc f = RatFunc(static_cast<long>(small(rng)));
  for (int t = 0; t < 3; ++t) f += RatFunc(static_cast<long>(small(rng))) * h(site(rng));
  for (int t = 0; t < coin(rng); ++t) {
    int i = site(rng), j = site(rng);
    RatFunc d = (i == j) ? h(i) + RatFunc(static_cast<long>(small(rng)) + 7)
                         : h(i) - h(j) + RatFunc(static_cast<long>(small(rng)));
    f = f / d;
  }
  return f;
}

}  // namespace

TEST_CASE("poly arithmetic and gcd") {
  Poly a = x(1) * x(1) - x(2) * x(2);
  Poly b = x(1) - x(2);
  auto q = exact_divide(a, b);
  REQUIRE(q);
  CHECK(*q == x(1) + x(2));
  CHECK_FALSE(exact_divide(a, x(1) + 3));
  CHECK(gcd(a * (x(3) + 1), (x(1) + x(2)) * (x(3) + 1) * (x(3) + 1)) == (x(1) + x(2)) * (x(3) + 1));
  CHECK(gcd(Poly(3), x(1)) == Poly(1));
  CHECK_THROWS_AS(exact_divide(a, Poly()), std::domain_error);
}

TEST_CASE("poly shift and permute") {
  std::array<int, kNumVars> off{};
  off[1] = 2;
  CHECK((x(1) * x(1)).shifted(off) == x(1) * x(1) + x(1) * Poly(4) + 4);
  std::array<int, kNumVars> perm{};
  for (int v = 0; v < kNumVars; ++v) perm[v] = v;
  std::swap(perm[1], perm[2]);
  CHECK((x(1) - x(2) * x(2)).permuted(perm) == x(2) - x(1) * x(1));
  CHECK(x(1).to_string(names()) == "x1");
}

TEST_CASE("rational function canonical form") {
  RatFunc f = RatFunc::fraction(x(1) * x(1) - x(2) * x(2), x(1) - x(2));
  CHECK(f == RatFunc(x(1) + x(2)));
  CHECK(f.is_polynomial());
  CHECK(RatFunc::fraction(Poly(), x(1)).is_zero());
  CHECK_THROWS_WITH_AS(RatFunc::fraction(x(1), Poly()), "division by zero", std::domain_error);
  CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);

  RatFunc g = RatFunc(1) / (h(1) - h(2)) - RatFunc(1) / (h(1) - h(2) + 1);
  CHECK(g * (h(1) - h(2)) * (h(1) - h(2) + 1) == RatFunc(1));
  CHECK(g.denominator_factors().size() == 2);

  // Denominators are kept monic.
  RatFunc m = RatFunc(1) / (RatFunc(2) * h(2) - RatFunc(2) * h(1));
  CHECK(m.numerator() == Poly(Rational(-1, 2)));
}

TEST_CASE("rational function shifts") {
  ShiftVector d = ShiftVector::unit(1, -1);
  RatFunc f = RatFunc(1) / (h(1) - h(2));
  CHECK(f.shifted(d) == RatFunc(1) / (h(1) - h(2) - 1));
  CHECK(f.shifted(d).shifted(-d) == f);
  CHECK((d + (-d)).is_zero());
}

TEST_CASE("non-linear denominators") {
  Poly q = x(1) * x(1) + x(2) * x(2) + 1;
  RatFunc f = RatFunc::fraction(x(1), q);
  RatFunc g = RatFunc::fraction(x(2), q * (x(1) + 1));
  RatFunc s = f + g;
  CHECK(s * RatFunc(q) * (h(1) + 1) == RatFunc(x(1) * (x(1) + 1) + x(2)));
  CHECK(s - g == f);
  CHECK(f / f == RatFunc(1));
}

TEST_CASE("split into linear factors") {
  Poly p = (x(1) - x(2) + 3) * (x(1) - x(2) + 3) * (x(3) - 2) * Poly(5) * (x(1) * x(1) + 1);
  LinearSplit s = split_linear_factors(p);
  CHECK(s.unit == 5);
  CHECK(s.linear.size() == 2);
  CHECK(s.residual == x(1) * x(1) + 1);
  CHECK(linear_divides(x(3) - 2, p));
  CHECK_FALSE(linear_divides(x(3) + 2, p));
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc a = random_ratfunc(rng, 3), b = random_ratfunc(rng, 3), c = random_ratfunc(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    ShiftVector d = ShiftVector::unit(2, 1) + ShiftVector::unit(1, -2);
    CHECK((a * b).shifted(d) == a.shifted(d) * b.shifted(d));
    std::array<Rational, kNumVars> pt{};
    for (int v = 0; v < kNumVars; ++v) {
      pt[v] = Rational(3 * v * v + 1, 7 + v);
      pt[v].canonicalize();
    }
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("batched sums agree with repeated addition") {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    std::vector<RatFunc> fs;
    RatFunc folded;
    for (int k = 0; k < 6; ++k) {
      fs.push_back(random_ratfunc(rng, 3));
      folded += fs.back();
    }
    CHECK(RatFunc::sum(fs) == folded);
  }
  CHECK(RatFunc::sum(std::vector<RatFunc>{}).is_zero());
  const std::vector<RatFunc> cancel{h(1) / (h(1) - h(2)), -h(1) / (h(1) - h(2))};
  CHECK(RatFunc::sum(cancel).is_zero());
  CHECK(RatFunc::sum(cancel).is_polynomial());
}

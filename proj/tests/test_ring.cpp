#include <doctest.h>

#include <random>

#include "hdiff/ring.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

Element Z(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::z(i, a)); }
Element D(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::d(i, a)); }
Element S(const RingCtx& c, const RatFunc& f) { return Element::scalar(c, f); }
RatFunc h(int i) { return hvar(i); }
RatFunc one() { return RatFunc(1); }

Element random_word(std::mt19937& rng, const RingCtx& c) {
  std::uniform_int_distribution<int> len(0, 3), site(1, c.n()), copy(1, c.N()), kind(0, 2), k(-2, 2);
  Element w = Element::one(c);
  const int L = len(rng);
  for (int t = 0; t < L; ++t) {
    switch (kind(rng)) {
      case 0: w = w * Z(c, site(rng), copy(rng)); break;
      case 1: w = w * D(c, site(rng), copy(rng)); break;
      default: w = w * S(c, h(site(rng)) + RatFunc(static_cast<long>(k(rng)))); break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("printed products of generators, n=2") {
  RingCtx c(2);
  const RatFunc h12 = hdiff_ij(1, 2);
  CHECK(Z(c, 1) * Z(c, 2) == ((h12 + one()) / h12) * (Z(c, 2) * Z(c, 1)));
  CHECK(Z(c, 1) * D(c, 1) == D(c, 1) * Z(c, 1) + (one() / (one() - h12)) * (D(c, 2) * Z(c, 2)) - Element::one(c));
  CHECK(Z(c, 1) * S(c, h(1)) == (h(1) - one()) * Z(c, 1));
  CHECK(D(c, 1) * D(c, 2) == ((h12 - one()) / h12) * (D(c, 2) * D(c, 1)));
  // Z^i d_j = d_j Z^i for i < j.
  CHECK(Z(c, 1) * D(c, 2) == D(c, 2) * Z(c, 1));
  CHECK((D(c, 2) * Z(c, 1)).terms().size() == 1);
}

TEST_CASE("canonical printing") {
  RingCtx c(2);
  CHECK((Z(c, 1) * D(c, 1)).to_string() == "d[1]*Z[1] + (-1/(h[1] - h[2] - 1))*d[2]*Z[2] - 1");
  CHECK((Z(c, 1) * Z(c, 1)).to_string() == "Z[1]^2");
  RingCtx c2(2, 2);
  CHECK(Z(c2, 1, 2).to_string() == "Z[1,2]");
}

TEST_CASE("weight rule") {
  for (RingCtx c : {RingCtx(2), RingCtx(3), RingCtx(2, 2)}) {
    for (int i = 1; i <= c.n(); ++i)
      for (int j = 1; j <= c.n(); ++j)
        for (int a = 1; a <= c.N(); ++a) {
          const RatFunc d = i == j ? one() : RatFunc();
          CHECK(S(c, h(i)) * Z(c, j, a) == Z(c, j, a) * S(c, h(i) + d));
          CHECK(S(c, h(i)) * D(c, j, a) == D(c, j, a) * S(c, h(i) - d));
        }
  }
}

TEST_CASE("same site copies commute") {
  RingCtx c(2, 2);
  for (int i = 1; i <= 2; ++i) {
    CHECK(commutator(Z(c, i, 1), Z(c, i, 2)).is_zero());
    CHECK(commutator(D(c, i, 1), D(c, i, 2)).is_zero());
  }
}

TEST_CASE("N=1 specialization of the copy rules") {
  // With N = 2 and a single copy index the rules reduce to the N = 1 ones.
  RingCtx c2(2, 2);
  const RatFunc h12 = hdiff_ij(1, 2);
  CHECK(Z(c2, 1, 2) * Z(c2, 2, 2) == ((h12 + one()) / h12) * (Z(c2, 2, 2) * Z(c2, 1, 2)));
  CHECK(D(c2, 1, 1) * D(c2, 2, 1) == ((h12 - one()) / h12) * (D(c2, 2, 1) * D(c2, 1, 1)));
  CHECK(Z(c2, 1, 1) * D(c2, 1, 2) == D(c2, 1, 2) * Z(c2, 1, 1) + (one() / (one() - h12)) * (D(c2, 2, 2) * Z(c2, 2, 1)));
}

TEST_CASE("associativity on random words") {
  std::mt19937 rng(7);
  for (RingCtx c : {RingCtx(2), RingCtx(3), RingCtx(2, 2)}) {
    for (int t = 0; t < 30; ++t) {
      Element x = random_word(rng, c), y = random_word(rng, c), z = random_word(rng, c);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("context mismatch is rejected") {
  CHECK_THROWS_AS(Z(RingCtx(2), 1) * Z(RingCtx(3), 1), std::invalid_argument);
  CHECK_THROWS_WITH(Z(RingCtx(2), 3), "index out of range");
  CHECK_THROWS_AS(RingCtx(0), std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "hdiff/core.hpp"
#include "hdiff/localization.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

Element Z(const RingCtx& c, int i) { return Element::gen(c, Generator::z(i)); }
Element D(const RingCtx& c, int i) { return Element::gen(c, Generator::d(i)); }

Element random_element(std::mt19937& rng, const RingCtx& c) {
  std::uniform_int_distribution<int> len(0, 3), site(1, c.n()), kind(0, 2), k(-2, 2);
  Element sum(c);
  for (int t = 0; t < 2; ++t) {
    Element w = Element::scalar(c, RatFunc(static_cast<long>(k(rng))));
    const int L = len(rng);
    for (int s = 0; s < L; ++s) {
      switch (kind(rng)) {
        case 0: w = w * Z(c, site(rng)); break;
        case 1: w = w * D(c, site(rng)); break;
        default: w = w * Element::scalar(c, hvar(site(rng)) + RatFunc(static_cast<long>(k(rng)))); break;
      }
    }
    sum += w;
  }
  return sum;
}

}  // namespace

TEST_CASE("embedding of generators") {
  RingCtx c1(1);
  CHECK(embed(Z(c1, 1)) == LocElement::x(1, 1));
  CHECK(embed(D(c1, 1)) == (hvar(1) + central_symbol(1)) * LocElement::x(1, 1, -1));
  CHECK(embed(Element::h(c1, 1)) == LocElement::scalar(1, hvar(1)));
  RingCtx c2(2);
  CHECK(embed(Z(c2, 1)) == LocElement::x(2, 1));
  CHECK_THROWS_AS(embed(Element::one(RingCtx(2, 2))), std::invalid_argument);
}

TEST_CASE("relabeling") {
  CHECK(mu(wgen(WeylGen::X, 1, 2)) == LocElement::x(2, 1));
  const WeylElement u = wgen(WeylGen::A, 2, 2) * wgen(WeylGen::H, 1, 2) * wgen(WeylGen::X, 2, 2);
  CHECK(mu(u) == (central_symbol(2) * hvar(1)) * LocElement::x(2, 2));
  CHECK(mu_inv(mu(u)) == u);
}

TEST_CASE("original generator formulas and transport") {
  for (int n : {1, 2, 3}) {
    const Report r = check_original_generator_formulas(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("commuting families") {
  for (int n : {2, 3}) {
    const Report r = verify_commuting_families(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("Zhelobenko maps agree on both sides") {
  for (int n : {2, 3}) {
    const Report r = verify_zhelobenko_transport(n);
    CHECK_MESSAGE(r.passed(), first_failure(r));
  }
}

TEST_CASE("embed is multiplicative") {
  std::mt19937 rng(3);
  for (RingCtx c : {RingCtx(2), RingCtx(3)}) {
    for (int t = 0; t < 20; ++t) {
      const Element x = random_element(rng, c), y = random_element(rng, c);
      CHECK(embed(x * y) == embed(x) * embed(y));
      if (!x.is_zero()) CHECK_FALSE(embed(x).is_zero());
    }
  }
}

TEST_CASE("center decomposition") {
  RingCtx c(2);
  const Poly c1 = Poly::var(central_var(1)), c2 = Poly::var(central_var(2));
  const Poly p = c1 * c1 + c2 * Poly(3);
  const CenterResult r = center_decompose(central_polynomial_element(c, p));
  CHECK(r.central);
  CHECK(r.polynomial == p);
  const CenterResult h = center_decompose(Element::h(c, 1));
  CHECK_FALSE(h.central);
  CHECK(h.witness == "Z[1]");
  const CenterResult z = center_decompose(Z(c, 1));
  CHECK_FALSE(z.central);
  CHECK(z.witness == "h[1]");
  CHECK(center_decompose(Element::scalar(c, RatFunc(5))).polynomial == Poly(5));
}

TEST_CASE("Ore witnesses") {
  RingCtx c(2);
  const RatFunc h = hdiff_ij(1, 2);
  const OreWitness a = ore_witness(1, Z(c, 2), 4);
  CHECK(a.nu == 1);
  CHECK(a.m_tilde == ((h + RatFunc(1)) / h) * Z(c, 2));
  const OreWitness b = ore_witness(1, Element::h(c, 1), 4);
  CHECK(b.nu == 1);
  CHECK(b.m_tilde == Element::scalar(c, hvar(1) - RatFunc(1)));
  const OreWitness d = ore_witness(1, D(c, 2), 4);
  CHECK(d.nu == 1);
  CHECK(d.m_tilde == D(c, 2));
  // d_1 needs two factors of Z^1.
  CHECK(ore_witness(1, D(c, 1), 4).nu == 2);
  CHECK(ore_witness(1, D(c, 1) * D(c, 1), 4).nu == 3);
  CHECK_THROWS_AS(ore_witness(1, D(c, 1) * D(c, 1), 2), std::runtime_error);
}

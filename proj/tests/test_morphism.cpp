#include <doctest.h>

#include <random>

#include "hdiff/core.hpp"
#include "hdiff/morphism.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : "";
}

Element Z(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::z(i, a)); }
Element D(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::d(i, a)); }

Element random_element(std::mt19937& rng, const RingCtx& c) {
  std::uniform_int_distribution<int> len(0, 3), site(1, c.n()), copy(1, c.N()), kind(0, 2), k(-2, 2);
  Element sum(c);
  for (int t = 0; t < 2; ++t) {
    Element w = Element::scalar(c, RatFunc(static_cast<long>(k(rng))));
    const int L = len(rng);
    for (int s = 0; s < L; ++s) {
      switch (kind(rng)) {
        case 0: w = w * Z(c, site(rng), copy(rng)); break;
        case 1: w = w * D(c, site(rng), copy(rng)); break;
        default: w = w * Element::scalar(c, hvar(site(rng)) + RatFunc(static_cast<long>(k(rng)))); break;
      }
    }
    sum += w;
  }
  return sum;
}

}  // namespace

TEST_CASE("printed images") {
  RingCtx c(2);
  const RatFunc h = hdiff_ij(1, 2);
  const RatFunc one(1);
  const auto q = build_morphism(MapKind::Zhelobenko, 1, c);
  CHECK(apply(q, Z(c, 1)) == -Z(c, 2).times_right(h / (h - one)));
  const auto eps = build_morphism(MapKind::Epsilon, 0, c);
  CHECK(apply(eps, D(c, 1)) == structural_product(ProductKind::Phi, 1, 2) * Z(c, 1));
  RingCtx c2(2, 2);
  const auto s = build_morphism(MapKind::Sn, 1, c2);
  CHECK(apply(s, Z(c2, 1, 2)) == -Z(c2, 2, 2).times_right(h));
  CHECK_THROWS_AS(build_morphism(MapKind::Zhelobenko, 1, c2), Unsupported);
  CHECK_THROWS_AS(build_morphism(MapKind::Epsilon, 0, c2), Unsupported);
}

TEST_CASE("phi shift formula") {
  for (int n : {2, 3, 4})
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const RatFunc phi = structural_product(ProductKind::Phi, i, n);
        const RatFunc h = hdiff_ij(i, j);
        CHECK(phi.shifted(ShiftVector::unit(j, -1)) / phi == (h * h - RatFunc(1)) / (h * h));
      }
}

TEST_CASE("compositions") {
  RingCtx c(2);
  const RatFunc h = hdiff_ij(1, 2);
  const auto q = build_morphism(MapKind::Zhelobenko, 1, c);
  CHECK(apply(q, apply(q, Z(c, 1))) == -Z(c, 1).times_right(h / (h + RatFunc(1))));
  const auto eps = build_morphism(MapKind::Epsilon, 0, c);
  CHECK(apply(eps, apply(eps, Z(c, 1))) == Z(c, 1));
  const auto s = build_morphism(MapKind::Sn, 1, c);
  CHECK(apply(s, apply(s, Z(c, 1))) == Z(c, 1));
  RingCtx c3(3);
  const auto q1 = build_morphism(MapKind::Zhelobenko, 1, c3);
  CHECK(apply(q1, gamma_element(c3, 2)) == gamma_element(c3, 1));
  CHECK(apply(q1, gamma_element(c3, 1)) == gamma_element(c3, 2));
  CHECK(apply(q1, gamma_element(c3, 3)) == gamma_element(c3, 3));
}

TEST_CASE("relation preservation") {
  RingCtx c3(3);
  for (int i = 1; i <= 2; ++i) {
    const Report a = verify_morphism(build_morphism(MapKind::Zhelobenko, i, c3));
    CHECK_MESSAGE(a.passed(), first_failure(a));
  }
  const Report e = verify_morphism(build_morphism(MapKind::Epsilon, 0, c3));
  CHECK_MESSAGE(e.passed(), first_failure(e));
  for (RingCtx c : {RingCtx(3), RingCtx(2, 2), RingCtx(3, 2)})
    for (int i = 1; i < c.n(); ++i) {
      const Report s = verify_morphism(build_morphism(MapKind::Sn, i, c));
      CHECK_MESSAGE(s.passed(), first_failure(s));
    }
}

TEST_CASE("group relations") {
  RingCtx c3(3);
  const Report q = verify_group_relations(MapKind::Zhelobenko, c3);
  CHECK_MESSAGE(q.passed(), first_failure(q));
  for (RingCtx c : {RingCtx(3), RingCtx(3, 2), RingCtx(4)}) {
    const Report s = verify_group_relations(MapKind::Sn, c);
    CHECK_MESSAGE(s.passed(), first_failure(s));
  }
  const Report inv = verify_involution(build_morphism(MapKind::Epsilon, 0, c3));
  CHECK_MESSAGE(inv.passed(), first_failure(inv));
}

TEST_CASE("maps are multiplicative on random elements") {
  std::mt19937 rng(11);
  RingCtx c(2);
  const auto eps = build_morphism(MapKind::Epsilon, 0, c);
  const auto q = build_morphism(MapKind::Zhelobenko, 1, c);
  for (int t = 0; t < 25; ++t) {
    const Element x = random_element(rng, c), y = random_element(rng, c);
    CHECK(apply(eps, x * y) == apply(eps, y) * apply(eps, x));
    CHECK(apply(q, x * y) == apply(q, x) * apply(q, y));
    CHECK(apply(eps, apply(eps, x)) == x);
  }
  RingCtx c2(2, 2);
  const auto s = build_morphism(MapKind::Sn, 1, c2);
  for (int t = 0; t < 25; ++t) {
    const Element x = random_element(rng, c2), y = random_element(rng, c2);
    CHECK(apply(s, x * y) == apply(s, x) * apply(s, y));
  }
}

TEST_CASE("S_n images stay polynomial in the generators") {
  RingCtx c(3, 2);
  for (int i = 1; i <= 2; ++i) {
    const auto s = build_morphism(MapKind::Sn, i, c);
    for (const auto& img : s.z_images) CHECK(img.terms().size() == 1);
    for (const auto& img : s.d_images) CHECK(img.terms().size() == 1);
  }
}

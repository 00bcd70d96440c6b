#include <doctest.h>

#include <random>

#include "hdiff/core.hpp"
#include "hdiff/parser.hpp"
#include "hdiff/structural.hpp"

using namespace hdiff;

namespace {

Element Z(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::z(i, a)); }
Element D(const RingCtx& c, int i, int a = 1) { return Element::gen(c, Generator::d(i, a)); }

std::size_t error_position(const std::string& text, const RingCtx& c) {
  try {
    parse(text, c);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

std::string error_message(const std::string& text, const RingCtx& c) {
  try {
    parse_element(text, c);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

Element random_element(std::mt19937& rng, const RingCtx& c) {
  std::uniform_int_distribution<int> len(0, 3), site(1, c.n()), copy(1, c.N()), kind(0, 3), k(-3, 3);
  Element sum(c);
  for (int t = 0; t < 3; ++t) {
    Element w = Element::scalar(c, RatFunc(Rational(k(rng), 2)));
    const int L = len(rng);
    for (int s = 0; s < L; ++s) {
      switch (kind(rng)) {
        case 0: w = w * Z(c, site(rng), copy(rng)); break;
        case 1: w = w * D(c, site(rng), copy(rng)); break;
        case 2: w = w * Element::scalar(c, hvar(site(rng)) + RatFunc(static_cast<long>(k(rng)))); break;
        default: {
          const RatFunc den = hdiff_ij(1, c.n()) + RatFunc(static_cast<long>(k(rng)));
          if (!den.is_zero()) w = w * Element::scalar(c, den.inverse());
        }
      }
    }
    sum += w;
  }
  return sum;
}

}  // namespace

TEST_CASE("parse examples") {
  const RingCtx c(2);
  const Expr e = parse("Z[1]*d[1]", c);
  CHECK(e.kind == Expr::Kind::Mul);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].kind == Expr::Kind::Gen);
  CHECK(e.children[0].gen == Generator::z(1));
  CHECK(e.children[1].gen == Generator::d(1));

  const Expr f = parse("(h[1]+1)^2 * Z[2]", c);
  CHECK(f.kind == Expr::Kind::Mul);
  CHECK(f.children[0].kind == Expr::Kind::Pow);
  CHECK(f.children[0].index == 2);

  CHECK(parse_element("(h[1]+1)^2 * Z[2]", c) ==
        Element::scalar(c, (hvar(1) + RatFunc(1)) * (hvar(1) + RatFunc(1))) * Z(c, 2));
  CHECK(parse_element("Z[1]*d[1]", c) == Z(c, 1) * D(c, 1));
  CHECK(parse_element("3/2*h[1] - -1", c) == Element::scalar(c, RatFunc(Rational(3, 2)) * hvar(1) + RatFunc(1)));
  CHECK(parse_element("c[1]", c) == central_element(c, 1));
  CHECK(parse_element("d[2]/(h[1]-h[2])", c) == D(c, 2).times_right(hdiff_ij(1, 2).inverse()));
}

TEST_CASE("N = 2 generators") {
  const RingCtx c(2, 2);
  CHECK(parse_element("Z[1,2]*d[2,1]", c) == Z(c, 1, 2) * D(c, 2, 1));
  CHECK(error_message("Z[1]", c) == "copy index required when N > 1");
  CHECK(error_message("Z[1,3]", c) == "index out of range");
}

TEST_CASE("parse errors") {
  const RingCtx c(2);
  CHECK(error_message("Z[0]", c) == "index out of range");
  CHECK(error_position("Z[0]", c) == 2);
  CHECK(error_message("h[3]", c) == "index out of range");
  CHECK(error_message("c[3]", c) == "index out of range");
  CHECK(error_position("Z[1] +", c) == 6);
  CHECK(error_position("Z[1] )", c) == 5);
  CHECK(error_position("Z[1]^-1", c) == 5);
  CHECK(error_position("x", c) == 0);
  CHECK(error_message("Z[1]/d[1]", c) == "division by a non-scalar");
  CHECK(error_message("Z[1]/(h[1]-h[1])", c) == "division by zero");
  CHECK(error_message("c[1]", RingCtx(2, 2)) == "c[k] is defined for N = 1 only");
}

TEST_CASE("printed forms parse back") {
  const RingCtx c(2);
  const std::string s = "d[1]*Z[1] + (-1/(h[1] - h[2] - 1))*d[2]*Z[2] - 1";
  CHECK(print(parse_element(s, c)) == s);
  std::mt19937 rng(5);
  for (const RingCtx& ctx : {RingCtx(1), RingCtx(2), RingCtx(3), RingCtx(2, 2)}) {
    for (int t = 0; t < 40; ++t) {
      const Element x = random_element(rng, ctx);
      CAPTURE(print(x));
      CHECK(parse_element(print(x), ctx) == x);
    }
  }
  CHECK(parse_element(print(central_element(RingCtx(3), 2)), RingCtx(3)) == central_element(RingCtx(3), 2));
  CHECK(print(Element(c)) == "0");
  CHECK(parse_element("0", c).is_zero());
}

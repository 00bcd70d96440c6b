#include "hdiff/parser.hpp"

#include <cctype>

#include "hdiff/core.hpp"
#include "hdiff/morphism.hpp"

namespace hdiff {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingCtx& ctx) : s_(text), ctx_(ctx) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  const RingCtx& ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Expr node(Expr::Kind k, std::size_t at, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = k;
    e.position = at;
    e.children = std::move(children);
    return e;
  }

  Expr expr() {
    Expr left = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+'))
        left = node(Expr::Kind::Add, at, {std::move(left), term()});
      else if (accept('-'))
        left = node(Expr::Kind::Sub, at, {std::move(left), term()});
      else
        return left;
    }
  }

  Expr term() {
    Expr left = unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*'))
        left = node(Expr::Kind::Mul, at, {std::move(left), unary()});
      else if (accept('/'))
        left = node(Expr::Kind::Div, at, {std::move(left), unary()});
      else
        return left;
    }
  }

  Expr unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, at, {unary()});
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("exponent must be a nonnegative integer");
    Expr p = node(Expr::Kind::Pow, at, {std::move(base)});
    p.index = static_cast<int>(natural());
    return p;
  }

  long natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("integer too large", start);
    return std::stol(digits);
  }

  Rational big_natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Rational(s_.substr(start, pos_ - start));
  }

  // [i] or [i,a]; returns the indices and their positions
  std::vector<std::pair<long, std::size_t>> indices() {
    expect('[');
    std::vector<std::pair<long, std::size_t>> out;
    do {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an index");
      out.emplace_back(natural(), at);
    } while (accept(','));
    expect(']');
    return out;
  }

  Expr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::Number, at);
      e.number = big_natural();
      return e;
    }
    if (c == 'h' || c == 'Z' || c == 'd' || c == 'c') {
      ++pos_;
      const auto idx = indices();
      const long n = ctx_.n();
      auto in_range = [&](std::pair<long, std::size_t> v, long hi) {
        if (v.first < 1 || v.first > hi) fail("index out of range", v.second);
      };
      if (c == 'h' || c == 'c') {
        if (idx.size() != 1) fail("expected one index", at);
        in_range(idx[0], n);
        Expr e = node(c == 'h' ? Expr::Kind::H : Expr::Kind::Central, at);
        e.index = static_cast<int>(idx[0].first);
        return e;
      }
      if (idx.size() > 2) fail("too many indices", at);
      in_range(idx[0], n);
      long copy = 1;
      if (idx.size() == 2) {
        in_range(idx[1], ctx_.N());
        copy = idx[1].first;
      } else if (ctx_.N() > 1) {
        fail("copy index required when N > 1", at);
      }
      Expr e = node(Expr::Kind::Gen, at);
      const int site = static_cast<int>(idx[0].first);
      e.gen = c == 'Z' ? Generator::z(site, static_cast<int>(copy)) : Generator::d(site, static_cast<int>(copy));
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expr parse(const std::string& text, const RingCtx& ctx) { return Parser(text, ctx).run(); }

Element evaluate(const Expr& e, const RingCtx& ctx) {
  switch (e.kind) {
    case Expr::Kind::Number: return Element::scalar(ctx, RatFunc(e.number));
    case Expr::Kind::H: return Element::h(ctx, e.index);
    case Expr::Kind::Gen: return Element::gen(ctx, e.gen);
    case Expr::Kind::Central:
      if (ctx.N() != 1) throw ParseError("c[k] is defined for N = 1 only", e.position);
      return central_element(ctx, e.index);
    case Expr::Kind::Add: return evaluate(e.children[0], ctx) + evaluate(e.children[1], ctx);
    case Expr::Kind::Sub: return evaluate(e.children[0], ctx) - evaluate(e.children[1], ctx);
    case Expr::Kind::Mul: return evaluate(e.children[0], ctx) * evaluate(e.children[1], ctx);
    case Expr::Kind::Neg: return -evaluate(e.children[0], ctx);
    case Expr::Kind::Pow: return evaluate(e.children[0], ctx).pow(e.index);
    case Expr::Kind::Div: {
      const Element den = evaluate(e.children[1], ctx);
      const auto s = den.as_scalar();
      if (!s && !den.is_zero()) throw ParseError("division by a non-scalar", e.position);
      if (!s || s->is_zero()) throw std::domain_error("division by zero");
      return evaluate(e.children[0], ctx).times_right(s->inverse());
    }
  }
  throw std::logic_error("unknown expression node");
}

Element parse_element(const std::string& text, const RingCtx& ctx) { return evaluate(parse(text, ctx), ctx); }

std::string print(const Element& x) { return x.to_string(); }

}  // namespace hdiff

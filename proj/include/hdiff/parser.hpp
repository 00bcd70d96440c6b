#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdiff/ring.hpp"

namespace hdiff {

/// Syntax or index error; position is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// expr   := term (('+' | '-') term)*
/// term   := unary (('*' | '/') unary)*
/// unary  := '-' unary | factor
/// factor := atom ('^' nat)?
/// atom   := h[i] | Z[i] | Z[i,a] | d[i] | d[i,a] | c[k] | nat | '(' expr ')'
/// The right operand of '/' must be a nonzero scalar.
struct Expr {
  enum class Kind { Number, H, Gen, Central, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;             // Number
  int index = 0;               // H, Central; Pow exponent
  Generator gen;               // Gen
  std::vector<Expr> children;  // operands, left to right
};

Expr parse(const std::string& text, const RingCtx& ctx);
/// c[k] denotes the central element c_k (N = 1 only).
Element evaluate(const Expr& e, const RingCtx& ctx);
Element parse_element(const std::string& text, const RingCtx& ctx);

/// Canonical form: coefficients left of monomials, d-block then Z-block.
std::string print(const Element& x);

}  // namespace hdiff

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hdiff/poly.hpp"

namespace hdiff {

/// Integer offsets applied to the weight variables, h_i -> h_i + offset_i.
/// Composition is addition; the zero vector is the identity.
struct ShiftVector {
  std::array<int, kNumVars> offsets{};

  /// sign * epsilon_site.
  static ShiftVector unit(int site, int sign = 1);

  ShiftVector operator+(const ShiftVector& other) const;
  ShiftVector operator-() const;
  bool is_zero() const;
  bool operator==(const ShiftVector&) const = default;
};

/// Exact rational function over Q.
///
/// The denominator is stored as a product of monic, pairwise coprime factors
/// and the numerator shares no factor with any of them. Linear factors are
/// irreducible, so for the denominators met in practice (products of
/// h_i - h_j + k) the representation is unique and equality is structural.
/// A non-linear factor only appears when a denominator resists trial division
/// by such linear forms; equality then falls back to comparing the expanded
/// denominators.
class RatFunc {
 public:
  struct Factor {
    Poly base;
    int exp = 0;
    bool operator==(const Factor&) const = default;
  };

  RatFunc() = default;
  RatFunc(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)

  /// Reduced, sign-normalized num/den. Throws std::domain_error("division by zero").
  static RatFunc fraction(const Poly& num, const Poly& den);
  static RatFunc var(int v) { return RatFunc(Poly::var(v)); }

  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Poly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }
  bool uses_var(int v) const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& other) const;
  RatFunc operator-(const RatFunc& other) const;
  RatFunc operator*(const RatFunc& other) const;
  RatFunc operator/(const RatFunc& other) const;
  RatFunc& operator+=(const RatFunc& other) { return *this = *this + other; }
  RatFunc& operator-=(const RatFunc& other) { return *this = *this - other; }
  RatFunc& operator*=(const RatFunc& other) { return *this = *this * other; }
  /// Sum over one common denominator, reduced once.
  static RatFunc sum(std::span<const RatFunc> terms);
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  bool operator==(const RatFunc& other) const;

  RatFunc shifted(const ShiftVector& delta) const;
  RatFunc permuted(std::span<const int> perm) const;
  /// Full evaluation; throws std::domain_error if the denominator vanishes.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  Poly num_;
  std::vector<Factor> den_;

  void reduce();
};

inline RatFunc shift(const RatFunc& f, const ShiftVector& delta) { return f.shifted(delta); }

/// Splits p = unit * prod(linear^e) * residual by trial division with the
/// linear forms x_v + k and x_v - x_w + k, |k| <= bound. The residual is monic
/// (or 1) and carries every factor not found this way.
struct LinearSplit {
  Rational unit;
  std::vector<RatFunc::Factor> linear;
  Poly residual;
};
LinearSplit split_linear_factors(const Poly& p, int bound = 16);

/// Advisory: every denominator factor is h_i - h_j + k with i != j and k an integer.
bool in_ubar(const RatFunc& f);

/// True iff the linear polynomial ell divides p (exact check).
bool linear_divides(const Poly& ell, const Poly& p);

}  // namespace hdiff

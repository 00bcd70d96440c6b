#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hdiff {

using Rational = mpq_class;

/// Number of polynomial variable slots shared by every coefficient ring.
///
/// Slot 0 is the auxiliary weight h_0, slots 1..kMaxSites are the weights
/// h_1..h_n (also used for H_i and the highest weights lambda_i), and slots
/// kMaxSites+1.. hold the central symbols c_k / a_k.
inline constexpr int kNumVars = 16;
inline constexpr int kMaxSites = 7;

inline constexpr int weight_var(int i) { return i; }
inline constexpr int central_var(int k) { return kMaxSites + k; }
inline constexpr bool is_weight_var(int v) { return v >= 0 && v <= kMaxSites; }

/// Exponent vector with a cached total degree. Ordered graded-lexicographically
/// with variable 0 the most significant.
struct Monomial {
  std::array<std::uint8_t, kNumVars> exp{};
  std::uint16_t degree = 0;

  static Monomial var(int v, int power = 1);

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides

  bool operator==(const Monomial& other) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted with the
/// leading (largest) monomial first and no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Rational& value);

  static Poly var(int v);
  static Poly monomial(const Monomial& m, const Rational& c);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }
  int total_degree() const;
  int degree_in(int v) const;
  bool uses_var(int v) const { return degree_in(v) > 0; }
  std::array<int, kNumVars> degrees() const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly pow(int e) const;

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }
  std::strong_ordering operator<=>(const Poly& other) const;

  /// x_v -> x_v + offsets[v] for every slot.
  Poly shifted(std::span<const int> offsets) const;
  /// Renames variable slots: x_v -> x_{perm[v]}.
  Poly permuted(std::span<const int> perm) const;
  /// Substitutes values for the given slots (nullopt keeps the variable).
  Poly substituted(std::span<const std::optional<Rational>> values) const;
  Rational evaluate(std::span<const Rational> point) const;
  Poly derivative(int v) const;

  /// Coefficients of powers of x_v, index = power; entries are free of x_v.
  std::vector<Poly> coefficients_in(int v) const;
  static Poly from_coefficients(int v, const std::vector<Poly>& coeffs);
  Poly times_var_power(int v, int e) const;

  /// Divides by the leading coefficient.
  Poly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Poly primitive() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Exact quotient p / q, or nullopt if q does not divide p.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace hdiff

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdiff/ratfunc.hpp"

namespace hdiff {

inline constexpr int kMaxSlots = 16;

/// Diff_h(n, N): n sites, N copies of each generator.
class RingCtx {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxSites, N >= 1 and n*N <= kMaxSlots.
  RingCtx(int n, int N = 1);

  int n() const { return n_; }
  int N() const { return N_; }
  int slot(int site, int copy) const { return (site - 1) * N_ + (copy - 1); }
  int slots() const { return n_ * N_; }
  bool operator==(const RingCtx&) const = default;

 private:
  int n_;
  int N_;
};

struct Generator {
  enum class Kind : std::uint8_t { Z, D };
  Kind kind = Kind::Z;
  int site = 1;
  int copy = 1;

  static Generator z(int site, int copy = 1) { return {Kind::Z, site, copy}; }
  static Generator d(int site, int copy = 1) { return {Kind::D, site, copy}; }
  bool is_z() const { return kind == Kind::Z; }
  bool operator==(const Generator&) const = default;

  /// "Z[i]" / "d[i]" when N = 1, "Z[i,a]" / "d[i,a]" otherwise.
  std::string to_string(const RingCtx& ctx) const;
};

/// Throws std::invalid_argument("index out of range") if g is not a generator of ctx.
void check_generator(const RingCtx& ctx, const Generator& g);

/// Exponents of the canonical word: the d-block, then the Z-block; inside each
/// block sites run downwards and copies upwards. Indexed by RingCtx::slot.
struct NormalMonomial {
  std::array<std::uint8_t, kMaxSlots> d{};
  std::array<std::uint8_t, kMaxSlots> z{};

  int degree() const;
  bool is_identity() const { return degree() == 0; }
  bool operator==(const NormalMonomial&) const = default;
  /// Graded: lower total degree first.
  std::strong_ordering operator<=>(const NormalMonomial& other) const;
};

/// Generators of the canonical word, left to right.
std::vector<Generator> monomial_word(const NormalMonomial& m, const RingCtx& ctx);
/// Shift picked up by a coefficient moved from the right of m to its left.
ShiftVector weight(const NormalMonomial& m, const RingCtx& ctx);
std::string monomial_to_string(const NormalMonomial& m, const RingCtx& ctx);

/// Names used when printing coefficients: h[0], h[1].., c[1]...
std::span<const std::string> coefficient_names();
RatFunc central_symbol(int k);

/// Finite sum of left coefficients times normal monomials.
class Element {
 public:
  using Terms = std::map<NormalMonomial, RatFunc>;

  explicit Element(const RingCtx& ctx) : ctx_(ctx) {}
  static Element scalar(const RingCtx& ctx, const RatFunc& f);
  static Element one(const RingCtx& ctx) { return scalar(ctx, RatFunc(1)); }
  static Element h(const RingCtx& ctx, int i);
  static Element gen(const RingCtx& ctx, const Generator& g);
  static Element monomial(const RingCtx& ctx, const NormalMonomial& m, const RatFunc& coeff = RatFunc(1));
  /// Product of the generators in the given order.
  static Element word(const RingCtx& ctx, std::span<const Generator> letters);

  const RingCtx& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The coefficient if the element is a multiple of 1.
  std::optional<RatFunc> as_scalar() const;
  RatFunc coefficient(const NormalMonomial& m) const;
  int degree() const;

  void add_term(const NormalMonomial& m, const RatFunc& coeff);

  Element operator-() const;
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other) { return *this += -other; }
  Element& operator*=(const Element& other) { return *this = *this * other; }
  /// Left multiplication by a coefficient.
  friend Element operator*(const RatFunc& f, const Element& x);
  /// x * f, with f moved to the left through the weight rule.
  Element times_right(const RatFunc& f) const;
  Element pow(int e) const;

  bool operator==(const Element& other) const;

  /// Coefficients to the left, highest degree first.
  std::string to_string() const;

 private:
  RingCtx ctx_;
  Terms terms_;

  void check_same(const Element& other) const;
};

Element product(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);

}  // namespace hdiff

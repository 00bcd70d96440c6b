#pragma once

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "hdiff/ratfunc.hpp"

namespace hdiff {

using Exponents = std::array<int, kMaxSites>;

/// Shift picked up by a coefficient moved left past X^b: H -> H - b.
inline ShiftVector laurent_weight(const Exponents& b) {
  ShiftVector s;
  for (int i = 0; i < kMaxSites; ++i) s.offsets[weight_var(i + 1)] = -b[i];
  return s;
}

/// Sums of coefficient * X^b, b in Z^n, with X^b f(H) = f(H - b) X^b and
/// commuting monomials. Tag selects the printed names.
template <class Tag>
class Laurent {
 public:
  using Terms = std::map<Exponents, RatFunc>;

  explicit Laurent(int n) : n_(n) {
    if (n < 1 || n > kMaxSites) throw std::invalid_argument("index out of range");
  }
  static Laurent scalar(int n, const RatFunc& f) { return monomial(n, Exponents{}, f); }
  static Laurent monomial(int n, const Exponents& b, const RatFunc& f = RatFunc(1)) {
    Laurent r(n);
    r.add_term(b, f);
    return r;
  }
  /// X^{power e_i}.
  static Laurent x(int n, int i, int power = 1) {
    if (i < 1 || i > n) throw std::invalid_argument("index out of range");
    Exponents b{};
    b[i - 1] = power;
    return monomial(n, b);
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& b, const RatFunc& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent operator*(const Laurent& o) const {
    check_same(o);
    Laurent r(n_);
    for (const auto& [p, c] : terms_) {
      const ShiftVector w = laurent_weight(p);
      for (const auto& [q, d] : o.terms_) {
        Exponents s{};
        for (int i = 0; i < kMaxSites; ++i) s[i] = p[i] + q[i];
        r.add_term(s, c * d.shifted(w));
      }
    }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator*(const RatFunc& f, const Laurent& u) { return scalar(u.n_, f) * u; }
  Laurent times_right(const RatFunc& f) const { return *this * scalar(n_, f); }

  /// Inverse of a single term f X^b: (1/f)[+b] X^{-b}.
  Laurent monomial_inverse() const {
    if (terms_.size() != 1) throw std::domain_error("not an invertible monomial");
    const auto& [b, f] = *terms_.begin();
    Exponents nb{};
    for (int i = 0; i < kMaxSites; ++i) nb[i] = -b[i];
    return monomial(n_, nb, f.inverse().shifted(laurent_weight(nb)));
  }

  Laurent pow(int e) const {
    if (e < 0) return monomial_inverse().pow(-e);
    Laurent r = scalar(n_, RatFunc(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Laurent& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [b, c] = *it;
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        if (b[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += std::string(Tag::monomial) + "[" + std::to_string(i + 1) + "]";
        if (b[i] != 1) mono += "^" + std::to_string(b[i]);
      }
      std::string term = "(" + c.to_string(Tag::names()) + ")";
      if (!mono.empty()) term += "*" + mono;
      s += (s.empty() ? "" : " + ") + term;
    }
    return s;
  }

 private:
  int n_;
  Terms terms_;

  void check_same(const Laurent& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  }
};

struct WeylTag {
  static constexpr const char* monomial = "X";
  static std::span<const std::string> names();
};

struct LocTag {
  static constexpr const char* monomial = "Zo";
  static std::span<const std::string> names();
};

/// Elements of k[a] (x) T^{-1} W_n in the generators H_i, X^i, a_k.
using WeylElement = Laurent<WeylTag>;
/// Elements of the localized ring in the generators h_i, Z'o^i = Z^i psi'_i, c_k.
using LocElement = Laurent<LocTag>;

}  // namespace hdiff

#include "hdiff/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdiff {

ShiftVector ShiftVector::unit(int site, int sign) {
  ShiftVector s;
  s.offsets[site] = sign;
  return s;
}

ShiftVector ShiftVector::operator+(const ShiftVector& other) const {
  ShiftVector s;
  for (int v = 0; v < kNumVars; ++v) s.offsets[v] = offsets[v] + other.offsets[v];
  return s;
}

ShiftVector ShiftVector::operator-() const {
  ShiftVector s;
  for (int v = 0; v < kNumVars; ++v) s.offsets[v] = -offsets[v];
  return s;
}

bool ShiftVector::is_zero() const {
  return std::all_of(offsets.begin(), offsets.end(), [](int o) { return o == 0; });
}

namespace {

// Generic sample point used to filter divisibility candidates.
const std::array<Rational, kNumVars>& sample_point() {
  static const std::array<Rational, kNumVars> pts = [] {
    std::array<Rational, kNumVars> p;
    for (int v = 0; v < kNumVars; ++v) {
      p[v] = Rational(7919 * (v + 3) + 104729 * v * v, 1009 + 17 * v);
      p[v].canonicalize();
    }
    return p;
  }();
  return pts;
}

bool is_linear(const Poly& p) { return p.total_degree() == 1; }

int leading_var(const Poly& ell) {
  const Monomial& m = ell.leading_monomial();
  for (int v = 0; v < kNumVars; ++v)
    if (m.exp[v]) return v;
  return -1;
}

// Value of p on the hyperplane ell = 0 at the generic sample point.
bool vanishes_on(const Poly& p, const Poly& ell) {
  const int v = leading_var(ell);
  auto pt = sample_point();
  Rational rest = 0;
  for (const auto& [m, c] : ell.terms()) {
    if (m.degree == 0) {
      rest += c;
    } else {
      for (int w = 0; w < kNumVars; ++w)
        if (m.exp[w] && w != v) rest += c * pt[w];
    }
  }
  pt[v] = -rest / ell.leading_coeff();
  return p.evaluate(pt) == 0;
}

std::optional<Poly> divide_by_linear(const Poly& p, const Poly& ell) {
  if (p.is_zero()) return Poly{};
  if (p.total_degree() < 1) return std::nullopt;
  if (!vanishes_on(p, ell)) return std::nullopt;
  return exact_divide(p, ell);
}

std::vector<Rational> restriction(const Poly& p, int v) {
  const auto& pt = sample_point();
  std::vector<Rational> coeffs(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int w = 0; w < kNumVars; ++w) {
      if (w == v || m.exp[w] == 0) continue;
      for (int k = 0; k < m.exp[w]; ++k) t *= pt[w];
    }
    coeffs[m.exp[v]] += t;
  }
  return coeffs;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<Poly> divide_factor(const Poly& p, const Poly& base) {
  if (is_linear(base)) return divide_by_linear(p, base);
  return exact_divide(p, base);
}

bool factor_less(const RatFunc::Factor& a, const RatFunc::Factor& b) { return a.base < b.base; }

// Inserts base^exp keeping the bases pairwise coprime.
void merge_factor(std::vector<RatFunc::Factor>& den, const Poly& base, int exp) {
  if (exp == 0 || base.is_constant()) return;
  for (std::size_t i = 0; i < den.size(); ++i) {
    RatFunc::Factor& f = den[i];
    if (f.base == base) {
      f.exp += exp;
      return;
    }
    const bool lin_f = is_linear(f.base);
    const bool lin_b = is_linear(base);
    if (lin_f && lin_b) continue;
    Poly g;
    if (lin_f) {
      g = divide_by_linear(base, f.base) ? f.base : Poly(1);
    } else if (lin_b) {
      g = divide_by_linear(f.base, base) ? base : Poly(1);
    } else {
      g = gcd(f.base, base);
    }
    if (g.is_constant()) continue;
    const RatFunc::Factor old = f;
    den.erase(den.begin() + static_cast<std::ptrdiff_t>(i));
    merge_factor(den, g, old.exp + exp);
    merge_factor(den, exact_divide(old.base, g)->monic(), old.exp);
    merge_factor(den, exact_divide(base, g)->monic(), exp);
    return;
  }
  den.push_back({base, exp});
}

// Multiplicity of a base factor inside a (possibly composite) polynomial.
int multiplicity(Poly p, const Poly& base) {
  int m = 0;
  while (auto q = divide_factor(p, base)) {
    p = std::move(*q);
    ++m;
  }
  return m;
}

}  // namespace

bool linear_divides(const Poly& ell, const Poly& p) { return divide_by_linear(p, ell).has_value(); }

LinearSplit split_linear_factors(const Poly& p, int bound) {
  if (p.is_zero()) throw std::domain_error("division by zero");
  LinearSplit out{p.leading_coeff(), {}, p.monic()};
  if (p.is_constant()) {
    out.residual = Poly(1);
    return out;
  }
  Poly& q = out.residual;
  auto take = [&](const Poly& ell) {
    int mult = 0;
    while (q.total_degree() >= 1) {
      auto d = divide_by_linear(q, ell);
      if (!d) break;
      q = std::move(*d);
      ++mult;
    }
    if (mult) out.linear.push_back({ell, mult});
  };

  const auto& pt = sample_point();
  const auto degs = q.degrees();
  for (int v = 0; v < kNumVars && q.total_degree() >= 1; ++v) {
    if (degs[v] == 0) continue;
    auto coeffs = restriction(q, v);
    for (int k = -bound; k <= bound; ++k) {
      if (horner(coeffs, Rational(-k)) == 0) {
        take(Poly::var(v) + Poly(static_cast<long>(k)));
        coeffs = restriction(q, v);
      }
    }
    for (int w = v + 1; w < kNumVars; ++w) {
      if (degs[w] == 0) continue;
      for (int k = -bound; k <= bound; ++k) {
        if (horner(coeffs, pt[w] - k) == 0) {
          take(Poly::var(v) - Poly::var(w) + Poly(static_cast<long>(k)));
          coeffs = restriction(q, v);
        }
      }
    }
  }
  if (q.is_constant()) q = Poly(1);
  return out;
}

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  return RatFunc(num) * RatFunc(den).inverse();
}

Poly RatFunc::denominator() const {
  Poly d(1);
  for (const auto& f : den_) d *= f.base.pow(f.exp);
  return d;
}

bool RatFunc::uses_var(int v) const {
  if (num_.uses_var(v)) return true;
  return std::any_of(den_.begin(), den_.end(), [v](const Factor& f) { return f.base.uses_var(v); });
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size();) {
    Factor& f = den_[i];
    if (is_linear(f.base)) {
      while (f.exp > 0) {
        auto q = divide_by_linear(num_, f.base);
        if (!q) break;
        num_ = std::move(*q);
        --f.exp;
      }
      ++i;
      continue;
    }
    const Poly g = gcd(num_, f.base);
    if (g.is_constant()) {
      ++i;
      continue;
    }
    if (g == f.base) {
      while (f.exp > 0) {
        auto q = exact_divide(num_, f.base);
        if (!q) break;
        num_ = std::move(*q);
        --f.exp;
      }
      ++i;
      continue;
    }
    // Split the composite factor and rescan.
    const Factor old = f;
    den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
    merge_factor(den_, g, old.exp);
    merge_factor(den_, exact_divide(old.base, g)->monic(), old.exp);
    i = 0;
  }
  std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
  std::sort(den_.begin(), den_.end(), factor_less);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    RatFunc r;
    r.num_ = num_ + other.num_;
    r.den_ = den_;
    r.reduce();
    return r;
  }
  const RatFunc terms[] = {*this, other};
  return sum(terms);
}

RatFunc RatFunc::sum(std::span<const RatFunc> terms) {
  std::vector<Factor> base;
  for (const auto& t : terms)
    for (const auto& f : t.den_) merge_factor(base, f.base, f.exp);

  auto exponents_over = [&](const std::vector<Factor>& den) {
    std::vector<int> e(base.size(), 0);
    for (const auto& f : den) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i].base == f.base) {
          e[i] += f.exp;
        } else if (!(is_linear(base[i].base) && is_linear(f.base))) {
          e[i] += f.exp * multiplicity(f.base, base[i].base);
        }
      }
    }
    return e;
  };
  std::vector<std::vector<int>> exps;
  std::vector<int> top(base.size(), 0);
  for (const auto& t : terms) {
    exps.push_back(exponents_over(t.den_));
    for (std::size_t i = 0; i < base.size(); ++i) top[i] = std::max(top[i], exps.back()[i]);
  }
  RatFunc r;
  for (std::size_t k = 0; k < std::size(terms); ++k) {
    if (terms[k].is_zero()) continue;
    Poly f = terms[k].num_;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (top[i] > exps[k][i]) f *= base[i].base.pow(top[i] - exps[k][i]);
    r.num_ += f;
  }
  for (std::size_t i = 0; i < base.size(); ++i) base[i].exp = top[i];
  r.den_ = std::move(base);
  r.reduce();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& other) const { return *this + (-other); }

RatFunc RatFunc::operator*(const RatFunc& other) const {
  if (is_zero() || other.is_zero()) return {};
  RatFunc r;
  r.num_ = num_ * other.num_;
  r.den_ = den_;
  for (const auto& f : other.den_) merge_factor(r.den_, f.base, f.exp);
  if (!den_.empty() || !other.den_.empty()) r.reduce();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  auto split = split_linear_factors(num_);
  RatFunc r;
  r.num_ = denominator() * (Rational(1) / split.unit);
  r.den_ = std::move(split.linear);
  if (!split.residual.is_constant()) merge_factor(r.den_, split.residual, 1);
  std::sort(r.den_.begin(), r.den_.end(), factor_less);
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& other) const { return *this * other.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

bool RatFunc::operator==(const RatFunc& other) const {
  if (!(num_ == other.num_)) return false;
  if (den_ == other.den_) return true;
  const auto nonlinear = [](const Factor& f) { return !is_linear(f.base); };
  if (std::none_of(den_.begin(), den_.end(), nonlinear) &&
      std::none_of(other.den_.begin(), other.den_.end(), nonlinear))
    return false;
  return denominator() == other.denominator();
}

RatFunc RatFunc::shifted(const ShiftVector& delta) const {
  if (delta.is_zero()) return *this;
  RatFunc r;
  r.num_ = num_.shifted(delta.offsets);
  r.den_.reserve(den_.size());
  for (const auto& f : den_) r.den_.push_back({f.base.shifted(delta.offsets), f.exp});
  std::sort(r.den_.begin(), r.den_.end(), factor_less);
  return r;
}

RatFunc RatFunc::permuted(std::span<const int> perm) const {
  RatFunc r;
  r.num_ = num_.permuted(perm);
  Rational scale = 1;
  for (const auto& f : den_) {
    Poly b = f.base.permuted(perm);
    Rational lc = b.leading_coeff();
    for (int k = 0; k < f.exp; ++k) scale *= lc;
    r.den_.push_back({b.monic(), f.exp});
  }
  r.num_ = r.num_ * (Rational(1) / scale);
  std::sort(r.den_.begin(), r.den_.end(), factor_less);
  return r;
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  Rational d = 1;
  for (const auto& f : den_) {
    Rational b = f.base.evaluate(point);
    if (b == 0) throw std::domain_error("division by zero");
    for (int k = 0; k < f.exp; ++k) d *= b;
  }
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  std::string n = num_.to_string(names);
  if (den_.empty()) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d;
  for (const auto& f : den_) {
    if (!d.empty()) d += "*";
    d += "(" + f.base.to_string(names) + ")";
    if (f.exp > 1) d += "^" + std::to_string(f.exp);
  }
  if (den_.size() > 1 || den_.front().exp > 1) d = "(" + d + ")";
  return n + "/" + d;
}

bool in_ubar(const RatFunc& f) {
  for (const auto& fac : f.denominator_factors()) {
    if (fac.base.total_degree() != 1) return false;
    int plus = 0, minus = 0;
    for (const auto& [m, c] : fac.base.terms()) {
      if (m.degree == 0) {
        if (c.get_den() != 1) return false;
        continue;
      }
      int v = 0;
      while (m.exp[v] == 0) ++v;
      if (v < 1 || v > kMaxSites) return false;
      if (c == 1)
        ++plus;
      else if (c == -1)
        ++minus;
      else
        return false;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

}  // namespace hdiff

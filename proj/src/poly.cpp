#include "hdiff/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hdiff {

Monomial Monomial::var(int v, int power) {
  Monomial m;
  m.exp[v] = static_cast<std::uint8_t>(power);
  m.degree = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) {
    const int e = exp[v] + other.exp[v];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[v] = static_cast<std::uint8_t>(e);
  }
  m.degree = static_cast<std::uint16_t>(degree + other.degree);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kNumVars; ++v)
    if (exp[v] > other.exp[v]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp[v] = static_cast<std::uint8_t>(exp[v] - other.exp[v]);
  m.degree = static_cast<std::uint16_t>(degree - other.degree);
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree != other.degree) return degree <=> other.degree;
  for (int v = 0; v < kNumVars; ++v)
    if (exp[v] != other.exp[v]) return exp[v] <=> other.exp[v];
  return std::strong_ordering::equal;
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace_back(Monomial{}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) {
    terms_.emplace_back(Monomial{}, value);
    terms_.back().second.canonicalize();
  }
}

Poly Poly::var(int v) { return monomial(Monomial::var(v), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) {
    p.terms_.emplace_back(m, c);
    p.terms_.back().second.canonicalize();
  }
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree == 0);
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.front().second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree; }

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[v]);
  return d;
}

std::array<int, kNumVars> Poly::degrees() const {
  std::array<int, kNumVars> d{};
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < kNumVars; ++v) d[v] = std::max<int>(d[v], m.exp[v]);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  Poly r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first > b->first) {
      r.terms_.push_back(*a++);
    } else if (b->first > a->first) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, other.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  if (other.is_constant()) return *this * other.constant_value();
  if (is_constant()) return other * constant_value();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) prod.emplace_back(ma * mb, ca * cb);
  return from_terms(std::move(prod));
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return {};
  Rational k = s;
  k.canonicalize();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= k;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::strong_ordering Poly::operator<=>(const Poly& other) const {
  const std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].first <=> other.terms_[i].first; c != 0) return c;
    if (terms_[i].second != other.terms_[i].second)
      return terms_[i].second < other.terms_[i].second ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

Poly Poly::shifted(std::span<const int> offsets) const {
  bool any = false;
  for (int v = 0; v < static_cast<int>(offsets.size()); ++v) any = any || offsets[v] != 0;
  if (!any || is_constant()) return *this;

  std::map<std::pair<int, int>, Poly> powers;
  auto power_of = [&](int v, int e) -> const Poly& {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    Poly base = var(v) + Poly(static_cast<long>(offsets[v]));
    return powers.emplace(std::make_pair(v, e), base.pow(e)).first->second;
  };

  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    Monomial fixed = m;
    Poly t;
    std::vector<std::pair<int, int>> moving;
    for (int v = 0; v < static_cast<int>(offsets.size()); ++v) {
      if (offsets[v] != 0 && m.exp[v] > 0) {
        moving.emplace_back(v, m.exp[v]);
        fixed.degree = static_cast<std::uint16_t>(fixed.degree - m.exp[v]);
        fixed.exp[v] = 0;
      }
    }
    t = monomial(fixed, c);
    for (auto [v, e] : moving) t = t * power_of(v, e);
    for (auto& term : t.terms_) out.push_back(std::move(term));
  }
  return from_terms(std::move(out));
}

Poly Poly::permuted(std::span<const int> perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      const int w = v < static_cast<int>(perm.size()) ? perm[v] : v;
      r.exp[w] = static_cast<std::uint8_t>(r.exp[w] + m.exp[v]);
    }
    r.degree = m.degree;
    out.emplace_back(r, c);
  }
  return from_terms(std::move(out));
}

Poly Poly::substituted(std::span<const std::optional<Rational>> values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    Rational coeff = c;
    for (int v = 0; v < static_cast<int>(values.size()); ++v) {
      if (!values[v] || m.exp[v] == 0) continue;
      Rational p = 1;
      for (int k = 0; k < m.exp[v]; ++k) p *= *values[v];
      coeff *= p;
      r.degree = static_cast<std::uint16_t>(r.degree - m.exp[v]);
      r.exp[v] = 0;
    }
    out.emplace_back(r, coeff);
  }
  return from_terms(std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      if (v >= static_cast<int>(point.size()))
        throw std::invalid_argument("evaluation point misses a variable");
      for (int k = 0; k < m.exp[v]; ++k) t *= point[v];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[v] == 0) continue;
    Monomial r = m;
    r.exp[v] = static_cast<std::uint8_t>(r.exp[v] - 1);
    r.degree = static_cast<std::uint16_t>(r.degree - 1);
    out.emplace_back(r, c * m.exp[v]);
  }
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients_in(int v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    const int e = m.exp[v];
    r.exp[v] = 0;
    r.degree = static_cast<std::uint16_t>(r.degree - e);
    buckets[e].emplace_back(r, c);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(int v, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (int e = 0; e < static_cast<int>(coeffs.size()); ++e)
    for (const auto& [m, c] : coeffs[e].terms_) out.emplace_back(m * Monomial::var(v, e), c);
  return from_terms(std::move(out));
}

Poly Poly::times_var_power(int v, int e) const {
  if (e == 0) return *this;
  Poly r = *this;
  const Monomial shift = Monomial::var(v, e);
  for (auto& t : r.terms_) t.first = t.first * shift;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  return *this * scale;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      if (wrote) os << "*";
      os << names[v];
      if (m.exp[v] > 1) os << "^" << static_cast<int>(m.exp[v]);
      wrote = true;
    }
  }
  return os.str();
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero");
  if (p.is_zero()) return Poly{};
  if (q.is_constant()) return p * (Rational(1) / q.constant_value());
  const Monomial& lq = q.leading_monomial();
  const Rational& cq = q.leading_coeff();
  Poly rem = p;
  std::vector<Poly::Term> quot;
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lq.divides(lr)) return std::nullopt;
    Poly t = Poly::monomial(lr / lq, rem.leading_coeff() / cq);
    quot.push_back(t.terms().front());
    rem -= t * q;
  }
  return Poly::from_terms(std::move(quot));
}

namespace {

Poly content_in(const Poly& p, int v) {
  auto coeffs = p.coefficients_in(v);
  Poly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  const int db = b.degree_in(v);
  const Poly lb = b.coefficients_in(v).back();
  Poly r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(v);
    if (dr < db) break;
    const Poly lr = r.coefficients_in(v).back();
    r = r * lb - (lr * b).times_var_power(v, dr - db);
  }
  return r;
}

Poly primitive_prs(Poly a, Poly b, int v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    Poly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return Poly(1);
    a = std::move(b);
    b = *exact_divide(r, content_in(r, v));
    b = b.primitive();
  }
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.monic() == b.monic()) return a.monic();
  if (a.terms().size() <= b.terms().size()) {
    if (exact_divide(b, a)) return a.monic();
  } else if (exact_divide(a, b)) {
    return b.monic();
  }

  const auto da = a.degrees();
  const auto db = b.degrees();
  for (int v = 0; v < kNumVars; ++v) {
    if (da[v] == 0 && db[v] == 0) continue;
    if (da[v] == 0) return gcd(a, content_in(b, v));
    if (db[v] == 0) return gcd(content_in(a, v), b);
    const Poly ca = content_in(a, v);
    const Poly cb = content_in(b, v);
    const Poly pa = exact_divide(a, ca)->primitive();
    const Poly pb = exact_divide(b, cb)->primitive();
    const Poly gc = gcd(ca, cb);
    const Poly gp = primitive_prs(pa, pb, v);
    return (gc * gp).monic();
  }
  return Poly(1);
}

}  // namespace hdiff

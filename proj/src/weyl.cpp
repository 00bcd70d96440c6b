#include "hdiff/weyl.hpp"

#include <numeric>

#include "hdiff/structural.hpp"

namespace hdiff {

std::span<const std::string> WeylTag::names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v(kNumVars);
    for (int i = 0; i < kNumVars; ++i)
      v[i] = is_weight_var(i) ? "H[" + std::to_string(i) + "]" : "a[" + std::to_string(i - kMaxSites) + "]";
    return v;
  }();
  return names;
}

std::span<const std::string> LocTag::names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v(kNumVars);
    for (int i = 0; i < kNumVars; ++i)
      v[i] = is_weight_var(i) ? "h[" + std::to_string(i) + "]" : "c[" + std::to_string(i - kMaxSites) + "]";
    return v;
  }();
  return names;
}

RatFunc weyl_h(int i) { return RatFunc::var(weight_var(i)); }
RatFunc weyl_a(int k) { return RatFunc::var(central_var(k)); }

WeylElement wgen(WeylGen g, int i, int n) {
  if (n < 1 || n > kMaxSites || i < 1 || i > n) throw std::invalid_argument("index out of range");
  switch (g) {
    case WeylGen::X: return WeylElement::x(n, i);
    case WeylGen::D: return weyl_h(i) * WeylElement::x(n, i, -1);
    case WeylGen::H: return WeylElement::scalar(n, weyl_h(i));
    case WeylGen::A: return WeylElement::scalar(n, weyl_a(i));
    case WeylGen::Psi: return WeylElement::scalar(n, structural_product(ProductKind::BigPsi, i, n));
    case WeylGen::PsiPrime: return WeylElement::scalar(n, structural_product(ProductKind::BigPsiPrime, i, n));
    case WeylGen::Upsilon: {
      RatFunc u = weyl_h(i).pow(n);
      for (int k = 1; k <= n; ++k) {
        const RatFunc sign = k % 2 == 0 ? RatFunc(1) : RatFunc(-1);
        u -= sign * weyl_a(k) * weyl_h(i).pow(n - k);
      }
      return WeylElement::scalar(n, u);
    }
  }
  throw std::invalid_argument("unknown generator");
}

namespace {

// Monic H_j - H_k + l with j < k <= n and l an integer.
bool is_t0_generator(const Poly& f, int n) {
  if (f.total_degree() != 1) return false;
  int pos = 0, neg = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree == 0) {
      if (c.get_den() != 1) return false;
      continue;
    }
    int v = 0;
    while (!m.exp[v]) ++v;
    if (v < 1 || v > n) return false;
    if (c == 1 && pos == 0) {
      pos = v;
    } else if (c == -1 && neg == 0) {
      neg = v;
    } else {
      return false;
    }
  }
  return pos && neg && pos < neg;
}

std::string exps_to_string(const Exponents& b, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

}  // namespace

WhitelistResult denominator_whitelist(const WeylElement& u, DenominatorMode mode) {
  const int n = u.n();
  for (const auto& [b, c] : u.terms()) {
    for (const auto& f : c.denominator_factors()) {
      if (!is_t0_generator(f.base, n))
        return {false, "denominator factor " + f.base.to_string(WeylTag::names()) + " at X^" + exps_to_string(b, n)};
    }
    if (mode != DenominatorMode::T0) continue;
    Poly num = c.numerator();
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < -b[i]; ++m) {
        const Poly ell = Poly::var(weight_var(i + 1)) + Poly(static_cast<long>(m));
        auto q = exact_divide(num, ell);
        if (!q)
          return {false, "coefficient of X^" + exps_to_string(b, n) + " not divisible by " +
                             ell.to_string(WeylTag::names())};
        num = *q;
      }
    }
  }
  return {};
}

WeylMap weyl_zhelobenko_map(int i, int n) {
  if (n < 2 || n > kMaxSites || i < 1 || i >= n) throw std::invalid_argument("index out of range");
  WeylMap m;
  m.n = n;
  m.name = "q" + std::to_string(i);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  std::swap(m.perm[weight_var(i)], m.perm[weight_var(i + 1)]);
  for (int j = 1; j <= n; ++j) {
    m.x_images.push_back(wgen(WeylGen::X, j, n));
    m.d_images.push_back(wgen(WeylGen::D, j, n));
  }
  const RatFunc H = weyl_h(i) - weyl_h(i + 1);
  m.x_images[i - 1] = H.inverse() * wgen(WeylGen::X, i + 1, n);
  m.x_images[i] = wgen(WeylGen::X, i, n).times_right(H);
  m.d_images[i - 1] = wgen(WeylGen::D, i + 1, n).times_right(H);
  m.d_images[i] = H.inverse() * wgen(WeylGen::D, i, n);
  return m;
}

WeylElement apply(const WeylMap& map, const WeylElement& u) {
  if (u.n() != map.n) throw std::invalid_argument("size mismatch");
  WeylElement out(map.n);
  for (const auto& [b, c] : u.terms()) {
    WeylElement t = WeylElement::scalar(map.n, c.permuted(map.perm));
    for (int j = 0; j < map.n; ++j)
      if (b[j]) t = t * map.x_images[j].pow(b[j]);
    out += t;
  }
  return out;
}

Report weyl_zhelobenko(int i, int n) {
  Report rep;
  const WeylMap q = weyl_zhelobenko_map(i, n);
  const std::string p = q.name + " ";
  const RatFunc one(1);
  auto tag = [](int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      const WeylElement& xj = q.x_images[j - 1];
      const WeylElement& xk = q.x_images[k - 1];
      const WeylElement& dj = q.d_images[j - 1];
      const WeylElement& dk = q.d_images[k - 1];
      const WeylElement c1 = xj * xk - xk * xj;
      const WeylElement c2 = dj * dk - dk * dj;
      const WeylElement c3 = dj * xk - xk * dj - WeylElement::scalar(n, j == k ? one : RatFunc());
      rep.add(p + "XX" + tag(j, k), c1.is_zero(), c1.to_string());
      rep.add(p + "DD" + tag(j, k), c2.is_zero(), c2.to_string());
      rep.add(p + "DX" + tag(j, k), c3.is_zero(), c3.to_string());
    }
  for (int j = 1; j <= n; ++j) {
    const int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
    const WeylElement hj = q.d_images[j - 1] * q.x_images[j - 1] - wgen(WeylGen::H, sj, n);
    rep.add(p + "H[" + std::to_string(j) + "]", hj.is_zero(), hj.to_string());
    const WeylElement dj = apply(q, wgen(WeylGen::D, j, n)) - q.d_images[j - 1];
    rep.add(p + "D-extension[" + std::to_string(j) + "]", dj.is_zero(), dj.to_string());
    for (const auto* img : {&q.x_images[j - 1], &q.d_images[j - 1]}) {
      const WhitelistResult w = denominator_whitelist(*img, DenominatorMode::T0);
      rep.add(p + (img == &q.x_images[j - 1] ? "T0 X[" : "T0 D[") + std::to_string(j) + "]", w.ok, w.witness);
    }
  }
  return rep;
}

Report verify_weyl_braid(int n) {
  Report rep;
  std::vector<WeylMap> maps;
  for (int i = 1; i < n; ++i) maps.push_back(weyl_zhelobenko_map(i, n));
  std::vector<std::pair<std::string, WeylElement>> probes;
  for (int j = 1; j <= n; ++j) {
    probes.emplace_back("X[" + std::to_string(j) + "]", wgen(WeylGen::X, j, n));
    probes.emplace_back("D[" + std::to_string(j) + "]", wgen(WeylGen::D, j, n));
    probes.emplace_back("H[" + std::to_string(j) + "]", wgen(WeylGen::H, j, n));
  }
  auto chain = [&](std::initializer_list<int> idx, const WeylElement& x) {
    WeylElement y = x;
    for (auto it = std::rbegin(idx); it != std::rend(idx); ++it) y = apply(maps[*it - 1], y);
    return y;
  };
  for (const auto& [name, x] : probes)
    for (int i = 1; i < n; ++i) {
      if (i + 1 < n) {
        const WeylElement d = chain({i, i + 1, i}, x) - chain({i + 1, i, i + 1}, x);
        rep.add("braid " + std::to_string(i) + "," + std::to_string(i + 1) + " " + name, d.is_zero(), d.to_string());
      }
      for (int j = i + 2; j < n; ++j) {
        const WeylElement d = chain({i, j}, x) - chain({j, i}, x);
        rep.add("commute " + std::to_string(i) + "," + std::to_string(j) + " " + name, d.is_zero(), d.to_string());
      }
    }
  return rep;
}

Report verify_weyl_presentation(int n) {
  Report rep;
  const RatFunc one(1);
  auto tag = [](int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const WeylElement X_i = wgen(WeylGen::X, i, n), X_j = wgen(WeylGen::X, j, n);
      const WeylElement D_i = wgen(WeylGen::D, i, n), D_j = wgen(WeylGen::D, j, n);
      const WeylElement d = i == j ? WeylElement::scalar(n, one) : WeylElement(n);
      rep.add("XX" + tag(i, j), (X_i * X_j - X_j * X_i).is_zero());
      rep.add("DD" + tag(i, j), (D_i * D_j - D_j * D_i).is_zero());
      const WeylElement dx = D_i * X_j - X_j * D_i - d;
      rep.add("DX" + tag(i, j), dx.is_zero(), dx.to_string());
      const WeylElement hx = wgen(WeylGen::H, i, n) * X_j - X_j * (wgen(WeylGen::H, i, n) + d);
      rep.add("HX" + tag(i, j), hx.is_zero(), hx.to_string());
      if (i < j) {
        // X^j D_j - X^k D_k + l = H_jk + l.
        const WeylElement lhs = X_i * D_i - X_j * D_j + WeylElement::scalar(n, RatFunc(3));
        const WeylElement rhs = WeylElement::scalar(n, weyl_h(i) - weyl_h(j) + RatFunc(3));
        rep.add("XD-difference" + tag(i, j), lhs == rhs);
        const WeylElement hjk = WeylElement::scalar(n, weyl_h(i) - weyl_h(j));
        for (int k = 1; k <= n; ++k) {
          const WeylElement X_k = wgen(WeylGen::X, k, n);
          const RatFunc s = (k == i ? one : RatFunc()) - (k == j ? one : RatFunc());
          const WeylElement e = hjk * X_k - X_k * WeylElement::scalar(n, weyl_h(i) - weyl_h(j) + s);
          rep.add("Hjk-shift" + tag(i, j) + "X[" + std::to_string(k) + "]", e.is_zero(), e.to_string());
        }
      }
    }
  for (int i = 1; i <= n; ++i) {
    const WeylElement u = wgen(WeylGen::Upsilon, i, n);
    rep.add("Upsilon-polynomial[" + std::to_string(i) + "]", u.terms().begin()->second.is_polynomial());
    rep.add("X*Xinv[" + std::to_string(i) + "]",
            wgen(WeylGen::X, i, n) * wgen(WeylGen::X, i, n).monomial_inverse() == WeylElement::scalar(n, one));
  }
  return rep;
}

}  // namespace hdiff

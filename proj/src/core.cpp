#include "hdiff/core.hpp"

#include <stdexcept>

#include "hdiff/structural.hpp"

namespace hdiff {

namespace {

std::string tuple_name(std::initializer_list<int> idx) {
  std::string s = "[";
  for (int v : idx) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "]";
}

void require_single_copy(const RingCtx& ctx) {
  if (ctx.N() != 1) throw std::invalid_argument("unsupported: element defined for N = 1 only");
}

}  // namespace

RatFunc rhat(int i, int j, int k, int l, int n) {
  for (int v : {i, j, k, l})
    if (v < 1 || v > n) throw std::invalid_argument("index out of range");
  if (k == i && l == j && i != j) return RatFunc(1) / hdiff_ij(i, j);
  if (k == j && l == i) {
    if (i < j) {
      const RatFunc h = hdiff_ij(i, j);
      return (h * h - RatFunc(1)) / (h * h);
    }
    return RatFunc(1);
  }
  return RatFunc();
}

Report verify_dybe(int n) {
  Report rep;
  // Cache the shifted entries: r[a][...] shifted by -eps_a.
  auto idx = [n](int i, int j, int k, int l) { return (((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1); };
  const int size = n * n * n * n;
  std::vector<RatFunc> R(size);
  std::vector<std::vector<RatFunc>> Rs(n + 1, std::vector<RatFunc>(size));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          R[idx(i, j, k, l)] = rhat(i, j, k, l, n);
          for (int a = 1; a <= n; ++a) Rs[a][idx(i, j, k, l)] = R[idx(i, j, k, l)].shifted(ShiftVector::unit(a, -1));
        }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m)
          for (int p = 1; p <= n; ++p)
            for (int r = 1; r <= n; ++r) {
              RatFunc lhs, rhs;
              for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                  for (int u = 1; u <= n; ++u) {
                    const RatFunc& x1 = R[idx(i, j, a, b)];
                    const RatFunc& x3 = R[idx(a, u, m, p)];
                    if (!x1.is_zero() && !x3.is_zero()) lhs += x1 * Rs[a][idx(b, k, u, r)] * x3;
                    const RatFunc& y2 = R[idx(i, a, m, u)];
                    const RatFunc& y3 = Rs[m][idx(u, b, p, r)];
                    if (!y2.is_zero() && !y3.is_zero()) rhs += Rs[i][idx(j, k, a, b)] * y2 * y3;
                  }
              const bool ok = lhs == rhs;
              rep.add("dybe" + tuple_name({i, j, k, m, p, r}), ok,
                      ok ? "" : (lhs - rhs).to_string(coefficient_names()));
            }
  return rep;
}

Report verify_relations(const RingCtx& ctx) {
  Report rep;
  for (const Relation& rel : defining_relations(ctx)) {
    const Element diff = evaluate_side(ctx, rel.lhs) - evaluate_side(ctx, rel.rhs);
    rep.add("relation " + rel.name, diff.is_zero(), diff.is_zero() ? "" : diff.to_string());
  }
  return rep;
}

Report verify_rmatrix_form(const RingCtx& ctx) {
  Report rep;
  const int n = ctx.n();
  const int N = ctx.N();
  auto Z = [&](int i, int a) { return Element::gen(ctx, Generator::z(i, a)); };
  auto D = [&](int i, int a) { return Element::gen(ctx, Generator::d(i, a)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          Element zz(ctx), dd(ctx), zd(ctx);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              zz += rhat(i, j, k, l, n) * (Z(k, b) * Z(l, a));
              dd += rhat(l, k, j, i, n) * (D(k, b) * D(l, a));
              zd += rhat(k, i, l, j, n).shifted(ShiftVector::unit(k, +1)) * (D(k, b) * Z(l, a));
            }
          if (i == j && a == b) zd -= Element::one(ctx);
          const std::string tag = "[" + std::to_string(i) + "," + std::to_string(a) + ";" + std::to_string(j) + "," +
                                  std::to_string(b) + "]";
          const Element e1 = Z(i, a) * Z(j, b) - zz;
          const Element e2 = D(i, a) * D(j, b) - dd;
          const Element e3 = Z(i, a) * D(j, b) - zd;
          rep.add("rmatrix ZZ" + tag, e1.is_zero(), e1.to_string());
          rep.add("rmatrix dd" + tag, e2.is_zero(), e2.to_string());
          rep.add("rmatrix Zd" + tag, e3.is_zero(), e3.to_string());
        }
  return rep;
}

Element gamma_element(const RingCtx& ctx, int i) {
  require_single_copy(ctx);
  return Element::gen(ctx, Generator::d(i)) * Element::gen(ctx, Generator::z(i));
}

Element sym_element(const RingCtx& ctx, int k) { return Element::scalar(ctx, sym_poly(k, ctx.n())); }

Element central_element(const RingCtx& ctx, int k) {
  require_single_copy(ctx);
  if (k < 1 || k > ctx.n()) throw std::invalid_argument("index out of range");
  Element c = -sym_element(ctx, k);
  for (int j = 1; j <= ctx.n(); ++j) c += sym_poly_derivative(k, ctx.n(), j) * gamma_element(ctx, j);
  return c;
}

Report verify_core_lemmas(int n) {
  Report rep;
  const RingCtx ctx(n);
  const RatFunc one(1);
  std::vector<Element> G;
  for (int i = 1; i <= n; ++i) G.push_back(gamma_element(ctx, i));

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      const Element cg = commutator(G[i - 1], G[j - 1]);
      rep.add("gamma-commute" + tag, cg.is_zero(), cg.to_string());
      if (i == j) continue;
      const RatFunc h = hdiff_ij(i, j);
      const Element Zj = Element::gen(ctx, Generator::z(j));
      const Element Dj = Element::gen(ctx, Generator::d(j));
      const Element a1 = G[i - 1] * Zj - ((h + one) / h) * (Zj * G[i - 1]);
      const Element a2 = G[i - 1] * Dj - ((h - one) / h) * (Dj * G[i - 1]);
      rep.add("gamma-Z" + tag, a1.is_zero(), a1.to_string());
      rep.add("gamma-d" + tag, a2.is_zero(), a2.to_string());
    }

  // V^k_j = d e_j / d h_k, (V^{-1})^j_i = (-1)^{j-1} h_i^{n-j} / chi_i.
  std::vector<std::vector<RatFunc>> V(n + 1, std::vector<RatFunc>(n + 1));
  std::vector<std::vector<RatFunc>> W(n + 1, std::vector<RatFunc>(n + 1));
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j) {
      V[k][j] = sym_poly_derivative(j, n, k);
      const RatFunc sign = (j - 1) % 2 == 0 ? one : RatFunc(-1);
      W[j][k] = sign * hvar(k).pow(n - j) / structural_product(ProductKind::Chi, k, n);
    }
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      RatFunc vw, wv;
      for (int m = 1; m <= n; ++m) {
        vw += V[r][m] * W[m][c];
        wv += W[r][m] * V[m][c];
      }
      const RatFunc want = r == c ? one : RatFunc();
      const std::string tag = "[" + std::to_string(r) + "," + std::to_string(c) + "]";
      rep.add("V*Vinv" + tag, vw == want, vw.to_string(coefficient_names()));
      rep.add("Vinv*V" + tag, wv == want, wv.to_string(coefficient_names()));
    }

  // chi_j Gamma_j = h_j^n - sum_k (-1)^k h_j^{n-k} c_k.
  std::vector<Element> C;
  for (int k = 1; k <= n; ++k) C.push_back(central_element(ctx, k));
  for (int j = 1; j <= n; ++j) {
    Element rhs = Element::scalar(ctx, hvar(j).pow(n));
    for (int k = 1; k <= n; ++k) {
      const RatFunc sign = k % 2 == 0 ? one : RatFunc(-1);
      rhs -= (sign * hvar(j).pow(n - k)) * C[k - 1];
    }
    const Element diff = structural_product(ProductKind::Chi, j, n) * G[j - 1] - rhs;
    rep.add("chi-gamma[" + std::to_string(j) + "]", diff.is_zero(), diff.to_string());
  }
  return rep;
}

Report verify_centrality(int n) {
  Report rep;
  const RingCtx ctx(n);
  for (int k = 1; k <= n; ++k) {
    const Element c = central_element(ctx, k);
    for (int j = 1; j <= n; ++j) {
      const std::string tag = "[" + std::to_string(k) + "," + std::to_string(j) + "]";
      const Element cz = commutator(c, Element::gen(ctx, Generator::z(j)));
      const Element cd = commutator(c, Element::gen(ctx, Generator::d(j)));
      const Element ch = commutator(c, Element::h(ctx, j));
      rep.add("[c,Z]" + tag, cz.is_zero(), cz.to_string());
      rep.add("[c,d]" + tag, cd.is_zero(), cd.to_string());
      rep.add("[c,h]" + tag, ch.is_zero(), ch.to_string());
    }
  }
  return rep;
}

}  // namespace hdiff

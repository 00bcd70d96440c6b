#include "hdiff/reduction.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "hdiff/core.hpp"
#include "hdiff/linalg.hpp"
#include "hdiff/morphism.hpp"

namespace hdiff {

namespace {

using Pair = std::pair<int, int>;

// Square matrix over the ring, rows and columns indexed by pairs (i,j).
struct PairMatrix {
  std::vector<Pair> idx;
  std::vector<std::vector<Element>> e;

  PairMatrix(const RingCtx& ctx, int n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) idx.emplace_back(i, j);
    e.assign(idx.size(), std::vector<Element>(idx.size(), Element(ctx)));
  }
};

PairMatrix operator*(const PairMatrix& a, const PairMatrix& b) {
  PairMatrix c = a;
  const std::size_t m = a.idx.size();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t col = 0; col < m; ++col) {
      Element s(a.e[0][0].ctx());
      for (std::size_t k = 0; k < m; ++k)
        if (!a.e[r][k].is_zero() && !b.e[k][col].is_zero()) s += a.e[r][k] * b.e[k][col];
      c.e[r][col] = std::move(s);
    }
  return c;
}

PairMatrix operator-(const PairMatrix& a, const PairMatrix& b) {
  PairMatrix c = a;
  for (std::size_t r = 0; r < a.idx.size(); ++r)
    for (std::size_t col = 0; col < a.idx.size(); ++col) c.e[r][col] = a.e[r][col] - b.e[r][col];
  return c;
}

std::string pair_string(const Pair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

PairMatrix r_matrix(const RingCtx& ctx, int n, ReflectionConvention c, bool shifted) {
  PairMatrix m(ctx, n);
  for (std::size_t r = 0; r < m.idx.size(); ++r)
    for (std::size_t col = 0; col < m.idx.size(); ++col) {
      auto [i, j] = m.idx[r];
      auto [k, l] = m.idx[col];
      RatFunc v = c == ReflectionConvention::TransposedR ? rhat(k, l, i, j, n) : rhat(i, j, k, l, n);
      if (shifted) v = v.shifted(ShiftVector::unit(k));
      if (!v.is_zero()) m.e[r][col] = Element::scalar(ctx, v);
    }
  return m;
}

PairMatrix l_matrix(const LMatrix& tl, int n, ReflectionConvention c) {
  PairMatrix m(tl.ctx, n);
  for (std::size_t r = 0; r < m.idx.size(); ++r)
    for (std::size_t col = 0; col < m.idx.size(); ++col) {
      auto [i, j] = m.idx[r];
      auto [k, l] = m.idx[col];
      if (j != l) continue;
      m.e[r][col] = c == ReflectionConvention::TransposedL ? tl.at(i, k) : tl.at(k, i);
    }
  return m;
}

}  // namespace

LMatrix tau_L(int n, int N) {
  RingCtx ctx(n, N);
  LMatrix out{ctx, {}};
  out.entries.assign(n, std::vector<Element>(n, Element(ctx)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int a = 1; a <= N; ++a)
        out.entries[i - 1][j - 1] += Element::gen(ctx, Generator::z(j, a)) * Element::gen(ctx, Generator::d(i, a));
  return out;
}

const std::vector<ReflectionConvention>& reflection_conventions() {
  static const std::vector<ReflectionConvention> all{ReflectionConvention::NoShift, ReflectionConvention::TransposedR,
                                                      ReflectionConvention::TransposedL,
                                                      ReflectionConvention::InteriorShift};
  return all;
}

std::string to_string(ReflectionConvention c) {
  switch (c) {
    case ReflectionConvention::NoShift: return "noshift";
    case ReflectionConvention::TransposedR: return "transposed-R";
    case ReflectionConvention::TransposedL: return "transposed-L";
    case ReflectionConvention::InteriorShift: return "interior-shift";
  }
  return "?";
}

ReflectionConvention parse_convention(const std::string& id) {
  for (auto c : reflection_conventions())
    if (to_string(c) == id) return c;
  throw std::invalid_argument("unknown reflection convention: " + id);
}

Report verify_reflection(int n, int N, ReflectionConvention convention) {
  const LMatrix tl = tau_L(n, N);
  const RingCtx& ctx = tl.ctx;
  const PairMatrix r = r_matrix(ctx, n, convention, false);
  const PairMatrix ri = r_matrix(ctx, n, convention, convention == ReflectionConvention::InteriorShift);
  const PairMatrix l = l_matrix(tl, n, convention);
  const PairMatrix lhs = r * l * ri * l - l * ri * l * r;
  const PairMatrix rhs = r * l - l * r;
  Report rep;
  for (std::size_t a = 0; a < lhs.idx.size(); ++a)
    for (std::size_t b = 0; b < lhs.idx.size(); ++b) {
      const Element diff = lhs.e[a][b] - rhs.e[a][b];
      rep.add("reflection" + pair_string(lhs.idx[a]) + pair_string(lhs.idx[b]), diff.is_zero(),
              "lhs - rhs = " + diff.to_string());
    }
  return rep;
}

ReflectionDiscovery discover_reflection_convention(int n, int N) {
  ReflectionDiscovery out;
  Report all;
  for (auto c : reflection_conventions()) {
    Report rep = verify_reflection(n, N, c);
    if (rep.passed()) {
      out.found = true;
      out.convention = c;
      out.report.add("convention " + to_string(c), true);
      out.report.merge(rep, to_string(c) + ":");
      return out;
    }
    all.merge(rep, to_string(c) + ":");
  }
  out.report.add("convention", false, "no candidate placement satisfies every component");
  out.report.merge(all);
  return out;
}

Report verify_tau_weights(int n, int N) {
  const LMatrix tl = tau_L(n, N);
  const RingCtx& ctx = tl.ctx;
  Report rep;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const RatFunc shift_by(static_cast<long>((i == k) - (i == j)));
        const Element lhs = Element::h(ctx, i) * tl.at(j, k);
        const Element rhs = tl.at(j, k).times_right(RatFunc::var(weight_var(i)) + shift_by);
        rep.add("weight[h" + std::to_string(i) + ",L" + std::to_string(j) + std::to_string(k) + "]", lhs == rhs,
                "difference " + (lhs - rhs).to_string());
      }
  return rep;
}

namespace {

// Coefficients of s_i(tau(L_j^k)) over tau(L_a^b) (row-major) and 1.
std::optional<std::vector<RatFunc>> sn_coefficients(const LMatrix& tl, const GeneratorMap& s, int j, int k) {
  const int n = tl.ctx.n();
  std::vector<const Element*> basis;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) basis.push_back(&tl.at(a, b));
  const Element one = Element::one(tl.ctx);
  basis.push_back(&one);
  const Element target = apply(s, tl.at(j, k));

  std::map<NormalMonomial, int> rows;
  for (const Element* e : basis)
    for (const auto& [m, c] : e->terms()) rows.emplace(m, 0);
  for (const auto& [m, c] : target.terms()) rows.emplace(m, 0);
  int r = 0;
  for (auto& [m, pos] : rows) pos = r++;

  RatMatrix a(rows.size(), std::vector<RatFunc>(basis.size()));
  std::vector<RatFunc> rhs(rows.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [m, c] : basis[col]->terms()) a[rows[m]][col] = c;
  for (const auto& [m, c] : target.terms()) rhs[rows[m]] = c;
  auto sol = solve(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;
  return sol->x;
}

std::string coefficients_string(const std::vector<RatFunc>& x, int n) {
  std::ostringstream os;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t].is_zero()) continue;
    os << "[" << x[t].to_string(coefficient_names()) << "]";
    if (t + 1 < x.size())
      os << "L" << (t / n + 1) << (t % n + 1) << " ";
    else
      os << "1 ";
  }
  return os.str();
}

}  // namespace

Report verify_sn_on_image(int n, int N) {
  Report rep;
  const LMatrix lo = tau_L(n, N);
  const LMatrix hi = tau_L(n, N + 1);
  for (int i = 1; i < n; ++i) {
    const GeneratorMap slo = build_morphism(MapKind::Sn, i, lo.ctx);
    const GeneratorMap shi = build_morphism(MapKind::Sn, i, hi.ctx);
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const std::string name = "s" + std::to_string(i) + "(L" + std::to_string(j) + std::to_string(k) + ")";
        auto x = sn_coefficients(lo, slo, j, k);
        auto y = sn_coefficients(hi, shi, j, k);
        rep.add(name + " in span N=" + std::to_string(N), x.has_value(), "not a combination of tau(L) and 1");
        rep.add(name + " in span N=" + std::to_string(N + 1), y.has_value(), "not a combination of tau(L) and 1");
        if (x && y)
          rep.add(name + " same coefficients", *x == *y,
                  "N=" + std::to_string(N) + ": " + coefficients_string(*x, n) + "; N=" + std::to_string(N + 1) + ": " +
                      coefficients_string(*y, n));
      }
  }
  return rep;
}

}  // namespace hdiff

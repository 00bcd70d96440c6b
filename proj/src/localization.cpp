#include "hdiff/localization.hpp"

#include <stdexcept>

#include "hdiff/core.hpp"
#include "hdiff/morphism.hpp"
#include "hdiff/relations.hpp"
#include "hdiff/structural.hpp"

namespace hdiff {

namespace {

void require_single_copy(const RingCtx& ctx) {
  if (ctx.N() != 1) throw Unsupported("unsupported: the localized model is defined for N = 1 only");
}

// h_i^n - sum_k (-1)^k c_k h_i^{n-k}.
RatFunc upsilon(int i, int n) {
  RatFunc u = hvar(i).pow(n);
  for (int k = 1; k <= n; ++k) {
    const RatFunc sign = k % 2 == 0 ? RatFunc(1) : RatFunc(-1);
    u -= sign * central_symbol(k) * hvar(i).pow(n - k);
  }
  return u;
}

template <class From, class To>
To relabel(const From& u) {
  To v(u.n());
  for (const auto& [b, c] : u.terms()) v.add_term(b, c);
  return v;
}

}  // namespace

LocElement embed_generator(const RingCtx& ctx, const Generator& g) {
  require_single_copy(ctx);
  check_generator(ctx, g);
  const int n = ctx.n();
  const int i = g.site;
  const LocElement z = LocElement::x(n, i).times_right(structural_product(ProductKind::PsiPrime, i, n).inverse());
  if (g.is_z()) return z;
  const RatFunc gamma = upsilon(i, n) / structural_product(ProductKind::Chi, i, n);
  return gamma * z.monomial_inverse();
}

LocElement embed(const Element& x) {
  const RingCtx& ctx = x.ctx();
  require_single_copy(ctx);
  const int n = ctx.n();
  std::vector<LocElement> zs, ds;
  for (int i = 1; i <= n; ++i) {
    zs.push_back(embed_generator(ctx, Generator::z(i)));
    ds.push_back(embed_generator(ctx, Generator::d(i)));
  }
  // every generator image is a single term, so each monomial maps to one term
  std::map<Exponents, std::vector<RatFunc>> parts;
  for (const auto& [m, c] : x.terms()) {
    LocElement t = LocElement::scalar(n, c);
    for (const Generator& g : monomial_word(m, ctx)) t = t * (g.is_z() ? zs : ds)[g.site - 1];
    for (const auto& [b, f] : t.terms()) parts[b].push_back(f);
  }
  LocElement out(n);
  for (const auto& [b, fs] : parts) out.add_term(b, RatFunc::sum(fs));
  return out;
}

LocElement mu(const WeylElement& u) { return relabel<WeylElement, LocElement>(u); }
WeylElement mu_inv(const LocElement& v) { return relabel<LocElement, WeylElement>(v); }

Report check_original_generator_formulas(int n) {
  Report rep;
  const RingCtx ctx(n);
  const RatFunc one(1);
  auto tag = [](int i) { return "[" + std::to_string(i) + "]"; };

  for (int i = 1; i <= n; ++i) {
    const RatFunc pp = structural_product(ProductKind::PsiPrime, i, n);
    const LocElement ez = embed_generator(ctx, Generator::z(i));
    const LocElement ed = embed_generator(ctx, Generator::d(i));
    // mu: X^i -> Z^i psi'_i, D_i -> (psi'_i)^{-1} h_i (Z^i)^{-1}.
    const LocElement a1 = mu(wgen(WeylGen::X, i, n)) - ez.times_right(pp);
    rep.add("mu X" + tag(i), a1.is_zero(), a1.to_string());
    const LocElement a2 = mu(wgen(WeylGen::D, i, n)) - (pp.inverse() * hvar(i)) * ez.monomial_inverse();
    rep.add("mu D" + tag(i), a2.is_zero(), a2.to_string());
    // mu^{-1}: Z^i -> X^i (1/Psi'_i), d_i -> (Upsilon_i / Psi_i) (X^i)^{-1}.
    const WeylElement wz = wgen(WeylGen::X, i, n).times_right(pp.inverse());
    const WeylElement wd = (wgen(WeylGen::Upsilon, i, n) * wgen(WeylGen::Psi, i, n).monomial_inverse()) *
                           wgen(WeylGen::X, i, n).monomial_inverse();
    const LocElement b1 = ez - mu(wz);
    const LocElement b2 = ed - mu(wd);
    rep.add("mu_inv Z" + tag(i), b1.is_zero(), b1.to_string());
    rep.add("mu_inv d" + tag(i), b2.is_zero(), b2.to_string());
    rep.add("round trip Z" + tag(i), mu_inv(mu(wz)) == wz && mu(mu_inv(ez)) == ez);
    rep.add("round trip d" + tag(i), mu_inv(mu(wd)) == wd && mu(mu_inv(ed)) == ed);
    // h_i = D_i X^i on the Weyl side.
    const LocElement h = mu(wgen(WeylGen::D, i, n) * wgen(WeylGen::X, i, n)) - LocElement::scalar(n, hvar(i));
    rep.add("mu H" + tag(i), h.is_zero(), h.to_string());
  }

  for (int k = 1; k <= n; ++k) {
    const LocElement e = embed(central_element(ctx, k)) - mu(wgen(WeylGen::A, k, n));
    rep.add("embed c" + tag(k), e.is_zero(), e.to_string());
  }
  for (int i = 1; i <= n; ++i) {
    const LocElement e = embed(Element::gen(ctx, Generator::z(i)).times_right(
                             structural_product(ProductKind::PsiPrime, i, n))) -
                         LocElement::x(n, i);
    rep.add("embed Zo" + tag(i), e.is_zero(), e.to_string());
  }

  for (const Relation& rel : defining_relations(ctx)) {
    auto side = [&](const std::vector<Word>& ws) {
      LocElement s(n);
      for (const Word& w : ws) {
        LocElement t = LocElement::scalar(n, one);
        for (const Letter& l : w) {
          if (const auto* g = std::get_if<Generator>(&l)) {
            t = t * embed_generator(ctx, *g);
          } else {
            t = t.times_right(std::get<RatFunc>(l));
          }
        }
        s += t;
      }
      return s;
    };
    const LocElement d = side(rel.lhs) - side(rel.rhs);
    rep.add("embed relation " + rel.name, d.is_zero(), d.to_string());
  }

  // Relations of B_W carried to those of B_D.
  struct Pair {
    std::string name;
    WeylElement wl, wr;
    LocElement dl, dr;
  };
  std::vector<Pair> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const RatFunc d = i == j ? one : RatFunc();
      const WeylElement Hi = wgen(WeylGen::H, i, n), Hj = wgen(WeylGen::H, j, n), Xj = wgen(WeylGen::X, j, n);
      const WeylElement Xi = wgen(WeylGen::X, i, n);
      const LocElement hi = LocElement::scalar(n, hvar(i)), hj = LocElement::scalar(n, hvar(j));
      const LocElement zi = LocElement::x(n, i), zj = LocElement::x(n, j);
      const std::string t = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      rels.push_back({"HH" + t, Hi * Hj, Hj * Hi, hi * hj, hj * hi});
      rels.push_back({"HX" + t, Hi * Xj, Xj * (Hi + WeylElement::scalar(n, d)), hi * zj,
                      zj * (hi + LocElement::scalar(n, d))});
      rels.push_back({"XX" + t, Xi * Xj, Xj * Xi, zi * zj, zj * zi});
      const WeylElement ai = wgen(WeylGen::A, i, n);
      const LocElement ci = LocElement::scalar(n, central_symbol(i));
      rels.push_back({"aX" + t, ai * Xj, Xj * ai, ci * zj, zj * ci});
      rels.push_back({"aH" + t, ai * Hj, Hj * ai, ci * hj, hj * ci});
    }
  for (const Pair& p : rels) {
    const bool ok = mu(p.wl) == p.dl && mu(p.wr) == p.dr && p.dl == p.dr && mu_inv(p.dl) == p.wl;
    rep.add("transport " + p.name, ok, ok ? "" : (p.dl - p.dr).to_string());
  }
  return rep;
}

Report verify_commuting_families(int n) {
  Report rep;
  const RingCtx ctx(n);
  std::vector<Element> zo, zp, dO, dp;
  for (int i = 1; i <= n; ++i) {
    const RatFunc psi = structural_product(ProductKind::Psi, i, n);
    const RatFunc psip = structural_product(ProductKind::PsiPrime, i, n);
    const Element Z = Element::gen(ctx, Generator::z(i));
    const Element D = Element::gen(ctx, Generator::d(i));
    zo.push_back(psi * Z);
    zp.push_back(Z.times_right(psip));
    dO.push_back(psi * D);
    dp.push_back(D.times_right(psip));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::string t = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      const Element a = commutator(zo[i - 1], zo[j - 1]);
      const Element b = commutator(zp[i - 1], zp[j - 1]);
      const Element c = commutator(dO[i - 1], dO[j - 1]);
      const Element d = commutator(dp[i - 1], dp[j - 1]);
      rep.add("psi Z" + t, a.is_zero(), a.to_string());
      rep.add("Z psi'" + t, b.is_zero(), b.to_string());
      rep.add("psi d" + t, c.is_zero(), c.to_string());
      rep.add("d psi'" + t, d.is_zero(), d.to_string());
      const Element neg = commutator(Element::gen(ctx, Generator::z(i)), Element::gen(ctx, Generator::z(j)));
      rep.add("Z Z noncommuting" + t, !neg.is_zero(), neg.is_zero() ? "commutator vanished" : "");
    }
  return rep;
}

Report verify_zhelobenko_transport(int n) {
  Report rep;
  const RingCtx ctx(n);
  for (int i = 1; i < n; ++i) {
    const GeneratorMap qd = build_morphism(MapKind::Zhelobenko, i, ctx);
    const WeylMap qw = weyl_zhelobenko_map(i, n);
    for (int j = 1; j <= n; ++j)
      for (const Generator g : {Generator::z(j), Generator::d(j)}) {
        const LocElement lhs = embed(apply(qd, Element::gen(ctx, g)));
        const LocElement rhs = mu(apply(qw, mu_inv(embed_generator(ctx, g))));
        const LocElement d = lhs - rhs;
        rep.add("q" + std::to_string(i) + " " + g.to_string(ctx), d.is_zero(), d.to_string());
      }
  }
  return rep;
}

Element central_polynomial_element(const RingCtx& ctx, const Poly& p) {
  std::vector<Element> cs;
  for (int k = 1; k <= ctx.n(); ++k) cs.push_back(central_element(ctx, k));
  Element out(ctx);
  for (const auto& [m, coeff] : p.terms()) {
    Element t = Element::scalar(ctx, RatFunc(coeff));
    for (int v = 0; v < kNumVars; ++v) {
      if (!m.exp[v]) continue;
      const int k = v - kMaxSites;
      if (k < 1 || k > ctx.n()) throw std::invalid_argument("polynomial must involve c_1..c_n only");
      t = t * cs[k - 1].pow(m.exp[v]);
    }
    out += t;
  }
  return out;
}

CenterResult center_decompose(const Element& x) {
  const RingCtx& ctx = x.ctx();
  require_single_copy(ctx);
  const int n = ctx.n();
  const LocElement e = embed(x);
  bool central = true;
  for (const auto& [b, c] : e.terms()) {
    bool zero_b = true;
    for (int i = 0; i < n; ++i) zero_b = zero_b && b[i] == 0;
    if (!zero_b || !c.is_polynomial()) central = false;
    for (int i = 0; i <= kMaxSites && central; ++i)
      if (c.uses_var(weight_var(i))) central = false;
  }
  CenterResult r;
  if (central) {
    r.central = true;
    r.polynomial = e.is_zero() ? Poly() : e.terms().begin()->second.numerator();
    return r;
  }
  std::vector<std::pair<std::string, Element>> probes;
  for (int i = 1; i <= n; ++i) probes.emplace_back("h[" + std::to_string(i) + "]", Element::h(ctx, i));
  for (int i = 1; i <= n; ++i) probes.emplace_back(Generator::z(i).to_string(ctx), Element::gen(ctx, Generator::z(i)));
  for (int i = 1; i <= n; ++i) probes.emplace_back(Generator::d(i).to_string(ctx), Element::gen(ctx, Generator::d(i)));
  for (const auto& [name, g] : probes) {
    Element c = commutator(x, g);
    if (!c.is_zero()) {
      r.witness = name;
      r.commutator_value = std::move(c);
      return r;
    }
  }
  throw std::logic_error("non-central image but every generator commutes");
}

OreWitness ore_witness(int k, const Element& m, int bound) {
  const RingCtx& ctx = m.ctx();
  require_single_copy(ctx);
  if (k < 1 || k > ctx.n()) throw std::invalid_argument("index out of range");
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  const Element zk = Element::gen(ctx, Generator::z(k));
  const int slot = ctx.slot(k, 1);
  Element p = m;
  for (int nu = 1; nu <= bound; ++nu) {
    p = zk * p;
    bool divisible = true;
    for (const auto& [mono, c] : p.terms()) divisible = divisible && mono.z[slot] >= 1;
    if (!divisible) continue;
    // Divide each term on the right by Z^k: (D^a Z^{b-e_k}) Z^k = g D^a Z^b.
    Element mt(ctx);
    for (const auto& [mono, c] : p.terms()) {
      NormalMonomial q = mono;
      --q.z[slot];
      const Element back = Element::monomial(ctx, q) * zk;
      if (back.terms().size() != 1 || !(back.terms().begin()->first == mono))
        throw std::logic_error("right division by Z^k left extra terms");
      mt.add_term(q, c / back.terms().begin()->second);
    }
    if (!(mt * zk == p)) throw std::logic_error("Ore witness does not reproduce the product");
    const LocElement check = embed(p) * embed(zk).monomial_inverse() - embed(mt);
    if (!check.is_zero()) throw std::logic_error("Ore witness disagrees with the localized model");
    return {nu, mt};
  }
  throw std::runtime_error("no Ore witness with nu <= " + std::to_string(bound) + " for k=" + std::to_string(k) +
                           ", m=" + m.to_string());
}

}  // namespace hdiff

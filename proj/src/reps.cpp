#include "hdiff/reps.hpp"

#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hdiff/core.hpp"
#include "hdiff/linalg.hpp"
#include "hdiff/localization.hpp"
#include "hdiff/morphism.hpp"
#include "hdiff/structural.hpp"

namespace hdiff {

namespace {

ShiftVector offsets_of(const Exponents& b) {
  ShiftVector s;
  for (int i = 0; i < kMaxSites; ++i) s.offsets[weight_var(i + 1)] = b[i];
  return s;
}

std::string exponents_string(const Exponents& b, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

// The induced module for one n. d_j acts through
//   d_j Z^j = sum_q (M^{-1})_{jq} (Z^q d_q + 1),  d_j Z^i = f_ij^{-1} Z^i d_j  (i != j),
// where Z^q d_q + 1 = sum_k M_qk d_k Z^k and Z^i d_j = f_ij d_j Z^i in the ring.
class HWModule {
 public:
  explicit HWModule(int n) : ctx_(n, 1) {
    RatMatrix m(n, std::vector<RatFunc>(n));
    f_.assign(n, std::vector<RatFunc>(n));
    for (int q = 1; q <= n; ++q) {
      const Element zd = Element::gen(ctx_, Generator::z(q)) * Element::gen(ctx_, Generator::d(q));
      for (int k = 1; k <= n; ++k) m[q - 1][k - 1] = zd.coefficient(dz(k, k));
      if (zd.coefficient(NormalMonomial{}) != RatFunc(-1)) throw std::logic_error("unexpected Z d relation");
      for (int j = 1; j <= n; ++j) {
        if (j == q) continue;
        const Element p = Element::gen(ctx_, Generator::z(q)) * Element::gen(ctx_, Generator::d(j));
        if (p.terms().size() != 1) throw std::logic_error("unexpected Z d relation");
        f_[q - 1][j - 1] = p.coefficient(dz(j, q));
      }
    }
    minv_.assign(n, std::vector<RatFunc>(n));
    for (int c = 0; c < n; ++c) {
      std::vector<RatFunc> e(n);
      e[c] = RatFunc(1);
      auto sol = solve(m, e);
      if (!sol || sol->rank != n) throw std::logic_error("singular Gamma system");
      for (int r = 0; r < n; ++r) minv_[r][c] = sol->x[r];
    }
  }

  const RingCtx& ctx() const { return ctx_; }

  HWVector coeff(const RatFunc& f, const HWVector& v) const {
    HWVector out{v.n, {}};
    for (const auto& [b, g] : v.terms) out.add_term(b, f.shifted(offsets_of(b)) * g);
    return out;
  }

  HWVector z(int i, const HWVector& v) const {
    HWVector out{v.n, {}};
    for (const auto& [b, g] : v.terms) {
      const Element p = Element::gen(ctx_, Generator::z(i)) * Element::monomial(ctx_, monomial_of(b));
      for (const auto& [m, f] : p.terms()) {
        Exponents nb{};
        for (int s = 1; s <= ctx_.n(); ++s) {
          if (m.d[ctx_.slot(s, 1)] != 0) throw std::logic_error("d in a product of Z");
          nb[s - 1] = m.z[ctx_.slot(s, 1)];
        }
        out.add_term(nb, f.shifted(offsets_of(nb)) * g);
      }
    }
    return out;
  }

  HWVector d(int j, const HWVector& v) {
    HWVector out{v.n, {}};
    for (const auto& [b, g] : v.terms) {
      for (const auto& [nb, f] : d_on_basis(j, b).terms) out.add_term(nb, f * g);
    }
    return out;
  }

  HWVector gen(const Generator& g, const HWVector& v) {
    check_generator(ctx_, g);
    return g.is_z() ? z(g.site, v) : d(g.site, v);
  }

 private:
  RingCtx ctx_;
  std::vector<std::vector<RatFunc>> minv_;
  std::vector<std::vector<RatFunc>> f_;
  std::map<std::pair<int, Exponents>, HWVector> memo_;

  NormalMonomial dz(int dsite, int zsite) const {
    NormalMonomial m;
    m.d[ctx_.slot(dsite, 1)] = 1;
    m.z[ctx_.slot(zsite, 1)] = 1;
    return m;
  }

  NormalMonomial monomial_of(const Exponents& b) const {
    NormalMonomial m;
    for (int s = 1; s <= ctx_.n(); ++s) m.z[ctx_.slot(s, 1)] = static_cast<std::uint8_t>(b[s - 1]);
    return m;
  }

  const HWVector& d_on_basis(int j, const Exponents& b) {
    auto key = std::make_pair(j, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int n = ctx_.n();
    HWVector out{n, {}};
    // leftmost letter of the canonical Z-block: the highest occupied site
    int i = n;
    while (i >= 1 && b[i - 1] == 0) --i;
    if (i >= 1) {
      Exponents rest = b;
      --rest[i - 1];
      const HWVector tail = HWVector::basis(n, rest);
      if (i == j) {
        for (int q = 1; q <= n; ++q) {
          if (minv_[j - 1][q - 1].is_zero()) continue;
          out = out + coeff(minv_[j - 1][q - 1], z(q, HWVector(d_on_basis(q, rest))) + tail);
        }
      } else {
        out = coeff(f_[i - 1][j - 1].inverse(), z(i, HWVector(d_on_basis(j, rest))));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }
};

HWModule& hw_module(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HWModule>> modules;
  std::lock_guard lock(mu);
  auto& slot = modules[n];
  if (!slot) slot = std::make_unique<HWModule>(n);
  return *slot;
}

void require_n1(const RingCtx& ctx) {
  if (ctx.N() != 1) throw Unsupported("highest weight and V_{gamma,A} modules are defined for N = 1 only");
}

}  // namespace

HWVector HWVector::vacuum(int n) { return basis(n, Exponents{}); }

HWVector HWVector::basis(int n, const Exponents& b, const RatFunc& coeff) {
  HWVector v{n, {}};
  v.add_term(b, coeff);
  return v;
}

void HWVector::add_term(const Exponents& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HWVector HWVector::operator+(const HWVector& o) const {
  if (n != o.n) throw std::invalid_argument("size mismatch");
  HWVector r = *this;
  for (const auto& [b, c] : o.terms) r.add_term(b, c);
  return r;
}

HWVector HWVector::operator-(const HWVector& o) const {
  HWVector neg = o;
  for (auto& [b, c] : neg.terms) c = -c;
  return *this + neg;
}

std::string HWVector::to_string() const {
  if (terms.empty()) return "0";
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v(kNumVars);
    for (int i = 0; i < kNumVars; ++i) v[i] = "lambda[" + std::to_string(i) + "]";
    return v;
  }();
  std::string s;
  for (const auto& [b, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string(names) + ")*Z^" + exponents_string(b, n) + "|>";
  }
  return s;
}

HWVector hw_apply(const Element& x, const HWVector& v) {
  require_n1(x.ctx());
  if (x.ctx().n() != v.n) throw std::invalid_argument("size mismatch");
  HWModule& mod = hw_module(v.n);
  const RingCtx& ctx = x.ctx();
  HWVector out{v.n, {}};
  for (const auto& [m, f] : x.terms()) {
    const std::vector<Generator> word = monomial_word(m, ctx);
    HWVector w = v;
    for (auto it = word.rbegin(); it != word.rend() && !w.is_zero(); ++it) w = mod.gen(*it, w);
    out = out + mod.coeff(f, w);
  }
  return out;
}

HWVector hw_apply(const RingCtx& ctx, const Word& word, const HWVector& v) {
  require_n1(ctx);
  if (ctx.n() != v.n) throw std::invalid_argument("size mismatch");
  HWModule& mod = hw_module(v.n);
  HWVector w = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (const auto* g = std::get_if<Generator>(&*it))
      w = mod.gen(*g, w);
    else
      w = mod.coeff(std::get<RatFunc>(*it), w);
  }
  return w;
}

std::vector<Exponents> excited_exponents(int n, int count) {
  std::vector<Exponents> out;
  for (int deg = 1; static_cast<int>(out.size()) < count; ++deg) {
    // all compositions of deg into n parts, first coordinate largest first
    std::vector<Exponents> level;
    Exponents b{};
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n - 1) {
        b[pos] = left;
        level.push_back(b);
        return;
      }
      for (int t = left; t >= 0; --t) {
        b[pos] = t;
        self(self, pos + 1, left - t);
      }
    };
    rec(rec, 0, deg);
    for (const auto& e : level) {
      if (static_cast<int>(out.size()) == count) break;
      out.push_back(e);
    }
  }
  return out;
}

RatFunc expected_hw_central_value(int k, int n) {
  ShiftVector down;
  for (int i = 1; i <= n; ++i) down.offsets[weight_var(i)] = -1;
  return -sym_poly(k, n).shifted(down);
}

RatFunc hw_central_value(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("index out of range");
  const RingCtx ctx(n, 1);
  const Element c = central_element(ctx, k);
  const HWVector image = hw_apply(c, HWVector::vacuum(n));
  RatFunc value;
  if (!image.is_zero()) {
    if (image.terms.size() != 1 || image.terms.begin()->first != Exponents{})
      throw std::runtime_error("c_" + std::to_string(k) + " does not act by a scalar on |>: " + image.to_string());
    value = image.terms.begin()->second;
  }
  for (const Exponents& b : excited_exponents(n, 5)) {
    const HWVector v = HWVector::basis(n, b);
    const HWVector got = hw_apply(c, v);
    if (!(got == HWVector::basis(n, b, value)))
      throw std::runtime_error("c_" + std::to_string(k) + " acts on Z^" + exponents_string(b, n) +
                               "|> by " + got.to_string());
  }
  return value;
}

VGammaVector::VGammaVector(int n, std::vector<Rational> gamma, std::vector<Rational> a)
    : n_(n), gamma_(std::move(gamma)), a_(std::move(a)) {
  if (n < 1 || n > kMaxSites) throw std::invalid_argument("index out of range");
  if (static_cast<int>(gamma_.size()) != n || static_cast<int>(a_.size()) != n)
    throw std::invalid_argument("size mismatch");
  if (!generic(gamma_)) throw std::invalid_argument("gamma is not generic: some gamma_i - gamma_j is an integer");
}

bool VGammaVector::generic(const std::vector<Rational>& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = i + 1; j < gamma.size(); ++j) {
      const Rational d = gamma[i] - gamma[j];
      if (d.get_den() == 1) return false;
    }
  return true;
}

VGammaVector VGammaVector::zero() const {
  VGammaVector v = *this;
  v.terms_.clear();
  return v;
}

VGammaVector VGammaVector::basis(const Exponents& j, const Rational& c) const {
  VGammaVector v = zero();
  v.add_term(j, c);
  return v;
}

void VGammaVector::add_term(const Exponents& j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VGammaVector VGammaVector::operator+(const VGammaVector& o) const {
  if (n_ != o.n_ || gamma_ != o.gamma_ || a_ != o.a_) throw std::invalid_argument("context mismatch");
  VGammaVector r = *this;
  for (const auto& [j, c] : o.terms_) r.add_term(j, c);
  return r;
}

VGammaVector VGammaVector::operator-(const VGammaVector& o) const {
  VGammaVector neg = o;
  for (auto& [j, c] : neg.terms_) c = -c;
  return *this + neg;
}

bool VGammaVector::operator==(const VGammaVector& o) const {
  return n_ == o.n_ && gamma_ == o.gamma_ && a_ == o.a_ && terms_ == o.terms_;
}

std::string VGammaVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [j, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")*v" + exponents_string(j, n_);
  }
  return s;
}

VGammaVector vgamma_apply(const WeylElement& u, const VGammaVector& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch");
  VGammaVector out = v.zero();
  std::vector<Rational> point(kNumVars);
  for (int k = 1; k <= v.n(); ++k) point[central_var(k)] = v.a()[k - 1];
  for (const auto& [p, f] : u.terms())
    for (const auto& [j, c] : v.terms()) {
      Exponents nj{};
      for (int i = 0; i < v.n(); ++i) nj[i] = j[i] + p[i];
      for (int i = 1; i <= v.n(); ++i) point[weight_var(i)] = v.gamma()[i - 1] + nj[i - 1] + 1;
      out.add_term(nj, f.evaluate(point) * c);
    }
  return out;
}

VGammaVector vgamma_apply(const Element& x, const VGammaVector& v) {
  require_n1(x.ctx());
  return vgamma_apply(mu_inv(embed(x)), v);
}

VGammaVector vgamma_apply(const RingCtx& ctx, const Word& word, const VGammaVector& v) {
  require_n1(ctx);
  VGammaVector w = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (const auto* g = std::get_if<Generator>(&*it))
      w = vgamma_apply(mu_inv(embed_generator(ctx, *g)), w);
    else
      w = vgamma_apply(WeylElement::scalar(ctx.n(), std::get<RatFunc>(*it)), w);
  }
  return w;
}

VGammaVector random_vgamma_module(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den_pick(0, 3), a_num(-9, 9);
  const int dens[] = {3, 5, 7, 11};
  std::vector<Rational> gamma(n), a(n);
  do {
    for (auto& g : gamma) {
      const int d = dens[den_pick(rng)];
      int p = num(rng);
      if (p % d == 0) ++p;
      g = Rational(p, d);
      g.canonicalize();
    }
  } while (!VGammaVector::generic(gamma));
  for (auto& x : a) {
    x = Rational(a_num(rng), 2);
    x.canonicalize();
  }
  return VGammaVector(n, gamma, a);
}

int vgamma_pairs(const ModuleSuiteParams& p) {
  return static_cast<int>(defining_relations(RingCtx(p.n, 1)).size()) * p.gammas * p.v_vectors;
}

Report module_relation_suite(const ModuleSuiteParams& p) {
  const RingCtx ctx(p.n, 1);
  const auto relations = defining_relations(ctx);
  Report rep;

  std::vector<Exponents> hw_basis{Exponents{}};
  for (const auto& b : excited_exponents(p.n, p.hw_vectors - 1)) hw_basis.push_back(b);
  for (const auto& b : hw_basis) {
    const HWVector v = HWVector::basis(p.n, b);
    const std::string at = "hw Z^" + exponents_string(b, p.n) + " ";
    for (const auto& r : relations) {
      HWVector diff{p.n, {}};
      for (const auto& w : r.lhs) diff = diff + hw_apply(ctx, w, v);
      for (const auto& w : r.rhs) diff = diff - hw_apply(ctx, w, v);
      rep.add(at + r.name, diff.is_zero(), "(lhs - rhs) v = " + diff.to_string());
    }
    for (int i = 1; i <= p.n; ++i) {
      const HWVector got = hw_apply(Element::h(ctx, i), v);
      const HWVector want = HWVector::basis(p.n, b, hvar(i) + RatFunc(static_cast<long>(b[i - 1])));
      rep.add(at + "eigenvalue h" + std::to_string(i), got == want, got.to_string());
    }
  }

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int g = 0; g < p.gammas; ++g) {
    const VGammaVector module = random_vgamma_module(p.n, rng());
    std::string gname = "V" + std::to_string(g) + " ";
    for (int t = 0; t < p.v_vectors; ++t) {
      Exponents j{};
      for (int i = 0; i < p.n; ++i) j[i] = coord(rng);
      const VGammaVector v = module.basis(j);
      const std::string at = gname + "v" + exponents_string(j, p.n) + " ";
      for (const auto& r : relations) {
        VGammaVector diff = module.zero();
        for (const auto& w : r.lhs) diff = diff + vgamma_apply(ctx, w, v);
        for (const auto& w : r.rhs) diff = diff - vgamma_apply(ctx, w, v);
        rep.add(at + r.name, diff.is_zero(), "(lhs - rhs) v = " + diff.to_string());
      }
      for (int k = 1; k <= p.n; ++k) {
        const VGammaVector got = vgamma_apply(central_element(ctx, k), v);
        rep.add(at + "c" + std::to_string(k), got == module.basis(j, module.a()[k - 1]), got.to_string());
      }
      for (int i = 1; i <= p.n; ++i) {
        const VGammaVector h = vgamma_apply(WeylElement::scalar(p.n, hvar(i)), v);
        rep.add(at + "eigenvalue H" + std::to_string(i), h == module.basis(j, module.gamma()[i - 1] + j[i - 1] + 1),
                h.to_string());
        std::vector<Rational> point(kNumVars);
        for (int s = 1; s <= p.n; ++s) point[weight_var(s)] = module.gamma()[s - 1] + j[s - 1] + 1;
        Exponents up = j;
        ++up[i - 1];
        const Rational factor = 1 / structural_product(ProductKind::PsiPrime, i, p.n).evaluate(point);
        const VGammaVector z = vgamma_apply(Element::gen(ctx, Generator::z(i)), v);
        rep.add(at + "Z" + std::to_string(i) + " vs X" + std::to_string(i), z == module.basis(up, factor),
                z.to_string());
      }
    }
  }
  return rep;
}

}  // namespace hdiff

#include "hdiff/suites.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "hdiff/core.hpp"
#include "hdiff/localization.hpp"
#include "hdiff/morphism.hpp"
#include "hdiff/reduction.hpp"
#include "hdiff/reps.hpp"
#include "hdiff/structural.hpp"
#include "hdiff/weyl.hpp"

namespace hdiff {

namespace {

constexpr const char* kOutOfScope = "out of paper scope";

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Report single_copy_only(const SuiteParams& p, const std::string& suite) {
  Report r;
  r.skip(suite + " N=" + std::to_string(p.N), kOutOfScope);
  return r;
}

Report run_zhelobenko(const RingCtx& ctx) {
  Report r;
  const int n = ctx.n();
  for (int i = 1; i < n; ++i) {
    r.merge(verify_morphism(build_morphism(MapKind::Zhelobenko, i, ctx)), "q" + std::to_string(i) + " ");
    r.merge(weyl_zhelobenko(i, n), "weyl q" + std::to_string(i) + " ");
  }
  r.merge(verify_group_relations(MapKind::Zhelobenko, ctx), "group ");
  r.merge(verify_weyl_braid(n), "weyl group ");
  r.merge(verify_zhelobenko_transport(n), "transport ");
  return r;
}

Report run_hw(int n) {
  Report r;
  for (int k = 1; k <= n; ++k) {
    const std::string name = "c" + std::to_string(k) + " central value";
    try {
      const RatFunc v = hw_central_value(k, n);
      const RatFunc want = expected_hw_central_value(k, n);
      r.add(name, v == want, "got " + v.to_string(coefficient_names()));
    } catch (const std::runtime_error& e) {
      r.add(name, false, e.what());
    }
  }
  const RingCtx ctx(n, 1);
  for (int j = 1; j <= n; ++j) {
    const RatFunc chi = structural_product(ProductKind::Chi, j, n);
    const HWVector got = hw_apply(gamma_element(ctx, j), HWVector::vacuum(n));
    r.add("Gamma" + std::to_string(j) + " on vacuum",
          got == HWVector::basis(n, Exponents{}, chi.shifted(ShiftVector::unit(j)) / chi), got.to_string());
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dybe", "consistency", "center", "core-lemmas", "zhelobenko",
                                              "epsilon", "sn", "weyl", "iso", "reflection", "hw", "vmod",
                                              "note3", "ore"};
  return names;
}

Element random_word(const RingCtx& ctx, std::uint64_t& state, int max_len) {
  std::mt19937_64 rng(state);
  Element w = Element::one(ctx);
  const int len = uniform(rng, 1, max_len);
  for (int t = 0; t < len; ++t) {
    const int site = uniform(rng, 1, ctx.n());
    const int copy = uniform(rng, 1, ctx.N());
    switch (uniform(rng, 0, 4)) {
      case 0:
      case 1: w = w * Element::gen(ctx, Generator::z(site, copy)); break;
      case 2:
      case 3: w = w * Element::gen(ctx, Generator::d(site, copy)); break;
      default: w = w * Element::h(ctx, site); break;
    }
  }
  state = rng();
  return w;
}

Report verify_associativity(const RingCtx& ctx, std::uint64_t seed, int triples, int max_len) {
  Report r;
  std::uint64_t state = seed;
  for (int t = 0; t < triples; ++t) {
    const Element x = random_word(ctx, state, max_len);
    const Element y = random_word(ctx, state, max_len);
    const Element z = random_word(ctx, state, max_len);
    const Element diff = (x * y) * z - x * (y * z);
    r.add("assoc #" + std::to_string(t), diff.is_zero(),
          "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string() + " diff=" + diff.to_string());
  }
  return r;
}

Report center_decision_suite(int n, std::uint64_t seed, int central_inputs, int perturbed_inputs) {
  const RingCtx ctx(n, 1);
  std::mt19937_64 rng(seed);
  auto random_poly = [&] {
    Poly p(Rational(uniform(rng, -3, 3)));
    const int terms = uniform(rng, 1, 3);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int deg = uniform(rng, 1, 3);
      for (int s = 0; s < deg; ++s) m = m * Monomial::var(central_var(uniform(rng, 1, n)));
      Rational c(uniform(rng, -5, 5), uniform(rng, 1, 3));
      c.canonicalize();
      p += Poly::monomial(m, c == 0 ? Rational(1) : c);
    }
    return p;
  };
  Report r;
  for (int t = 0; t < central_inputs; ++t) {
    const Poly p = random_poly();
    const CenterResult res = center_decompose(central_polynomial_element(ctx, p));
    r.add("central #" + std::to_string(t), res.central && res.polynomial == p,
          "input " + p.to_string(coefficient_names()) + " classified as " +
              (res.central ? res.polynomial.to_string(coefficient_names()) : "non-central (" + res.witness + ")"));
  }
  for (int t = 0; t < perturbed_inputs; ++t) {
    const Poly p = random_poly();
    Element perturbation(ctx);
    const int site = uniform(rng, 1, n);
    switch (uniform(rng, 0, 3)) {
      case 0: perturbation = Element::gen(ctx, Generator::z(site)); break;
      case 1: perturbation = Element::gen(ctx, Generator::d(site)); break;
      case 2: perturbation = Element::h(ctx, site); break;
      default: perturbation = gamma_element(ctx, site); break;
    }
    const Element x = central_polynomial_element(ctx, p) + perturbation;
    const CenterResult res = center_decompose(x);
    const bool ok = !res.central && !res.witness.empty() && !res.commutator_value.is_zero();
    r.add("perturbed #" + std::to_string(t), ok, "input " + x.to_string() + " accepted as central");
  }
  return r;
}

Report ore_suite(int n, std::uint64_t seed, int monomials, int max_len) {
  const RingCtx ctx(n, 1);
  std::mt19937_64 rng(seed);
  Report r;
  for (int t = 0; t < monomials; ++t) {
    // uniform over the letters of a normal monomial of the drawn length
    const int len = uniform(rng, 1, max_len);
    NormalMonomial m;
    for (int s = 0; s < len; ++s) {
      const int slot = ctx.slot(uniform(rng, 1, n), 1);
      if (uniform(rng, 0, 1) == 0)
        ++m.d[slot];
      else
        ++m.z[slot];
    }
    const int k = uniform(rng, 1, n);
    const Element x = Element::monomial(ctx, m);
    const std::string name = "ore #" + std::to_string(t) + " k=" + std::to_string(k) + " m=" + x.to_string();
    try {
      const OreWitness w = ore_witness(k, x, 2 * len + 2);
      r.add(name, w.nu <= len,
            "nu=" + std::to_string(w.nu) + " exceeds length " + std::to_string(len) + ", m~=" + w.m_tilde.to_string());
    } catch (const std::runtime_error& e) {
      r.add(name, false, e.what());
    }
  }
  return r;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& p) {
  const auto start = std::chrono::steady_clock::now();
  const RingCtx ctx(p.n, p.N);
  if (p.degree < 1) throw std::invalid_argument("degree must be positive");
  const bool single = p.N == 1;
  Report r;
  if (name == "dybe") {
    r = verify_dybe(p.n);
  } else if (name == "consistency") {
    r.merge(verify_relations(ctx), "relations ");
    r.merge(verify_rmatrix_form(ctx), "rmatrix ");
    r.merge(verify_associativity(ctx, p.seed, 200, p.degree), "");
  } else if (name == "center") {
    if (!single) {
      r = single_copy_only(p, name);
    } else {
      r.merge(verify_centrality(p.n), "");
      r.merge(center_decision_suite(p.n, p.seed, 10, 10), "decide ");
    }
  } else if (name == "core-lemmas") {
    r = single ? verify_core_lemmas(p.n) : single_copy_only(p, name);
  } else if (name == "zhelobenko") {
    r = single ? run_zhelobenko(ctx) : single_copy_only(p, name);
  } else if (name == "epsilon") {
    if (!single) {
      r = single_copy_only(p, name);
    } else {
      const GeneratorMap eps = build_morphism(MapKind::Epsilon, 0, ctx);
      r.merge(verify_morphism(eps), "anti ");
      r.merge(verify_involution(eps), "involution ");
    }
  } else if (name == "sn") {
    for (int i = 1; i < p.n; ++i)
      r.merge(verify_morphism(build_morphism(MapKind::Sn, i, ctx)), "s" + std::to_string(i) + " ");
    r.merge(verify_group_relations(MapKind::Sn, ctx), "group ");
  } else if (name == "weyl") {
    r = verify_weyl_presentation(p.n);
  } else if (name == "iso") {
    if (!single) {
      r = single_copy_only(p, name);
    } else {
      r.merge(check_original_generator_formulas(p.n), "");
      r.merge(verify_commuting_families(p.n), "families ");
    }
  } else if (name == "reflection") {
    const ReflectionDiscovery d = discover_reflection_convention(p.n, p.N);
    r.merge(d.report, "");
    r.merge(verify_tau_weights(p.n, p.N), "");
    r.merge(verify_sn_on_image(p.n, p.N), "");
  } else if (name == "hw") {
    r = single ? run_hw(p.n) : single_copy_only(p, name);
  } else if (name == "vmod") {
    if (!single) {
      r = single_copy_only(p, name);
    } else {
      ModuleSuiteParams m;
      m.n = p.n;
      m.seed = p.seed;
      r = module_relation_suite(m);
    }
  } else if (name == "note3") {
    for (int k = 1; k <= p.n; ++k) r.add("note3 n=" + std::to_string(k), verify_note3_identity(k));
  } else if (name == "ore") {
    r = single ? ore_suite(p.n, p.seed, 50, p.degree) : single_copy_only(p, name);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {name, p, std::move(r), std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()};
}

}  // namespace hdiff

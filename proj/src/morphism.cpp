#include "hdiff/morphism.hpp"

#include <numeric>

#include "hdiff/structural.hpp"

namespace hdiff {

namespace {

std::array<int, kNumVars> identity_perm() {
  std::array<int, kNumVars> p{};
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::array<int, kNumVars> transposition(int i) {
  auto p = identity_perm();
  std::swap(p[weight_var(i)], p[weight_var(i + 1)]);
  return p;
}

GeneratorMap identity_map(const RingCtx& ctx, std::string name) {
  GeneratorMap m{ctx, GeneratorMap::Kind::Hom, std::move(name), {}, {}, identity_perm()};
  for (int site = 1; site <= ctx.n(); ++site)
    for (int copy = 1; copy <= ctx.N(); ++copy) {
      m.z_images.push_back(Element::gen(ctx, Generator::z(site, copy)));
      m.d_images.push_back(Element::gen(ctx, Generator::d(site, copy)));
    }
  return m;
}

Element map_word(const GeneratorMap& map, const Word& w) {
  const RingCtx& ctx = map.ctx;
  Element e = Element::one(ctx);
  auto step = [&](const Letter& l) {
    if (const auto* g = std::get_if<Generator>(&l)) {
      e = e * map.image(*g);
    } else {
      e = e.times_right(map.map_coeff(std::get<RatFunc>(l)));
    }
  };
  if (map.kind == GeneratorMap::Kind::Hom) {
    for (const Letter& l : w) step(l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) step(*it);
  }
  return e;
}

Element map_side(const GeneratorMap& map, const std::vector<Word>& side) {
  Element e(map.ctx);
  for (const Word& w : side) e += map_word(map, w);
  return e;
}

std::string gen_tag(const RingCtx& ctx, const Generator& g) { return g.to_string(ctx); }

}  // namespace

const Element& GeneratorMap::image(const Generator& g) const {
  check_generator(ctx, g);
  const int s = ctx.slot(g.site, g.copy);
  return g.is_z() ? z_images[s] : d_images[s];
}

GeneratorMap build_morphism(MapKind kind, int i, const RingCtx& ctx) {
  const int n = ctx.n();
  const RatFunc one(1);
  auto Z = [&](int s, int a = 1) { return Element::gen(ctx, Generator::z(s, a)); };
  auto D = [&](int s, int a = 1) { return Element::gen(ctx, Generator::d(s, a)); };

  if (kind == MapKind::Epsilon) {
    if (ctx.N() != 1) throw Unsupported("unsupported: epsilon is defined for N = 1 only");
    GeneratorMap m = identity_map(ctx, "epsilon");
    m.kind = GeneratorMap::Kind::Anti;
    for (int s = 1; s <= n; ++s) {
      const RatFunc phi = structural_product(ProductKind::Phi, s, n);
      m.d_images[ctx.slot(s, 1)] = phi * Z(s);
      m.z_images[ctx.slot(s, 1)] = D(s).times_right(phi.inverse());
    }
    return m;
  }

  if (i < 1 || i >= n) throw std::invalid_argument("index out of range");
  const RatFunc h = hdiff_ij(i, i + 1);
  if (kind == MapKind::Zhelobenko) {
    if (ctx.N() != 1) throw Unsupported("unsupported: Zhelobenko maps are defined for N = 1 only");
    GeneratorMap m = identity_map(ctx, "q" + std::to_string(i));
    m.perm = transposition(i);
    m.z_images[ctx.slot(i, 1)] = -Z(i + 1).times_right(h / (h - one));
    m.z_images[ctx.slot(i + 1, 1)] = Z(i);
    m.d_images[ctx.slot(i, 1)] = -((h - one) / h) * D(i + 1);
    m.d_images[ctx.slot(i + 1, 1)] = D(i);
    return m;
  }

  GeneratorMap m = identity_map(ctx, "s" + std::to_string(i));
  m.perm = transposition(i);
  for (int a = 1; a <= ctx.N(); ++a) {
    m.z_images[ctx.slot(i, a)] = -Z(i + 1, a).times_right(h);
    m.z_images[ctx.slot(i + 1, a)] = Z(i, a).times_right(h.inverse());
    m.d_images[ctx.slot(i, a)] = -(h.inverse() * D(i + 1, a));
    m.d_images[ctx.slot(i + 1, a)] = h * D(i, a);
  }
  return m;
}

Element apply(const GeneratorMap& map, const Element& x) {
  if (!(map.ctx == x.ctx())) throw std::invalid_argument("context mismatch");
  Element out(map.ctx);
  for (const auto& [m, c] : x.terms()) {
    Element w = Element::one(map.ctx);
    const auto word = monomial_word(m, map.ctx);
    if (map.kind == GeneratorMap::Kind::Hom) {
      for (const auto& g : word) w = w * map.image(g);
      out += map.map_coeff(c) * w;
    } else {
      for (auto it = word.rbegin(); it != word.rend(); ++it) w = w * map.image(*it);
      out += w.times_right(map.map_coeff(c));
    }
  }
  return out;
}

Report verify_morphism(const GeneratorMap& map) {
  Report rep;
  for (const Relation& rel : defining_relations(map.ctx)) {
    const Element diff = map_side(map, rel.lhs) - map_side(map, rel.rhs);
    rep.add(map.name + " " + rel.name, diff.is_zero(), diff.to_string());
  }
  return rep;
}

Report verify_involution(const GeneratorMap& map) {
  Report rep;
  const RingCtx& ctx = map.ctx;
  for (int s = 1; s <= ctx.n(); ++s)
    for (int a = 1; a <= ctx.N(); ++a)
      for (const Generator g : {Generator::z(s, a), Generator::d(s, a)}) {
        const Element x = Element::gen(ctx, g);
        const Element diff = apply(map, apply(map, x)) - x;
        rep.add(map.name + "^2 " + gen_tag(ctx, g), diff.is_zero(), diff.to_string());
      }
  for (int s = 1; s <= ctx.n(); ++s) {
    const Element x = Element::h(ctx, s);
    const Element diff = apply(map, apply(map, x)) - x;
    rep.add(map.name + "^2 h[" + std::to_string(s) + "]", diff.is_zero(), diff.to_string());
  }
  return rep;
}

Report verify_group_relations(MapKind kind, const RingCtx& ctx) {
  Report rep;
  const int n = ctx.n();
  std::vector<GeneratorMap> maps;
  for (int i = 1; i < n; ++i) maps.push_back(build_morphism(kind, i, ctx));

  std::vector<std::pair<std::string, Element>> probes;
  for (int s = 1; s <= n; ++s) {
    probes.emplace_back("h[" + std::to_string(s) + "]", Element::h(ctx, s));
    for (int a = 1; a <= ctx.N(); ++a) {
      probes.emplace_back(Generator::z(s, a).to_string(ctx), Element::gen(ctx, Generator::z(s, a)));
      probes.emplace_back(Generator::d(s, a).to_string(ctx), Element::gen(ctx, Generator::d(s, a)));
    }
  }
  auto chain = [&](std::initializer_list<int> idx, const Element& x) {
    // Applies the listed maps right to left, as in a composition.
    Element y = x;
    for (auto it = std::rbegin(idx); it != std::rend(idx); ++it) y = apply(maps[*it - 1], y);
    return y;
  };
  for (const auto& [tag, x] : probes) {
    for (int i = 1; i < n; ++i) {
      if (kind == MapKind::Sn) {
        const Element d = chain({i, i}, x) - x;
        rep.add("s" + std::to_string(i) + "^2 " + tag, d.is_zero(), d.to_string());
      }
      if (i + 1 < n) {
        const Element d = chain({i, i + 1, i}, x) - chain({i + 1, i, i + 1}, x);
        rep.add("braid " + std::to_string(i) + "," + std::to_string(i + 1) + " " + tag, d.is_zero(), d.to_string());
      }
      for (int j = i + 2; j < n; ++j) {
        const Element d = chain({i, j}, x) - chain({j, i}, x);
        rep.add("commute " + std::to_string(i) + "," + std::to_string(j) + " " + tag, d.is_zero(), d.to_string());
      }
    }
  }
  return rep;
}

}  // namespace hdiff

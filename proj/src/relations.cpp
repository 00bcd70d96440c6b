#include "hdiff/relations.hpp"

#include "hdiff/structural.hpp"

namespace hdiff {

namespace {

Generator Z(int i, int a) { return Generator::z(i, a); }
Generator D(int i, int a) { return Generator::d(i, a); }

std::string idx(const RingCtx& ctx, int i, int a) {
  return ctx.N() == 1 ? std::to_string(i) : std::to_string(i) + "," + std::to_string(a);
}

}  // namespace

std::vector<Relation> defining_relations(const RingCtx& ctx) {
  std::vector<Relation> out;
  const int n = ctx.n();
  const int N = ctx.N();
  const RatFunc one(1);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int a = 1; a <= N; ++a) {
        const RatFunc d = i == j ? one : RatFunc();
        const std::string tag = "[" + std::to_string(i) + ";" + idx(ctx, j, a) + "]";
        out.push_back({"weight-Z" + tag, {{hvar(i), Z(j, a)}}, {{Z(j, a), hvar(i) + d}}});
        out.push_back({"weight-d" + tag, {{hvar(i), D(j, a)}}, {{D(j, a), hvar(i) - d}}});
      }

  if (N == 1) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const RatFunc h = hdiff_ij(i, j);
        const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        out.push_back({"ZZ" + tag, {{Z(i, 1), Z(j, 1)}}, {{(h + one) / h, Z(j, 1), Z(i, 1)}}});
        out.push_back({"dd" + tag, {{D(i, 1), D(j, 1)}}, {{(h - one) / h, D(j, 1), D(i, 1)}}});
        out.push_back({"Zd" + tag, {{Z(i, 1), D(j, 1)}}, {{D(j, 1), Z(i, 1)}}});
        // Z^j d_i with j > i: h_ji (h_ji - 2) / (h_ji - 1)^2.
        const RatFunc g = hdiff_ij(j, i);
        const std::string rtag = "[" + std::to_string(j) + "," + std::to_string(i) + "]";
        out.push_back(
            {"Zd" + rtag, {{Z(j, 1), D(i, 1)}}, {{g * (g - RatFunc(2)) / ((g - one) * (g - one)), D(i, 1), Z(j, 1)}}});
      }
    for (int i = 1; i <= n; ++i) {
      std::vector<Word> rhs;
      for (int j = 1; j <= n; ++j) rhs.push_back({one / (one - hdiff_ij(i, j)), D(j, 1), Z(j, 1)});
      rhs.push_back({RatFunc(-1)});
      out.push_back({"Zd[" + std::to_string(i) + "]", {{Z(i, 1), D(i, 1)}}, rhs});
    }
    return out;
  }

  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b) {
        const std::string tag = "[" + std::to_string(i) + ";" + std::to_string(a) + "," + std::to_string(b) + "]";
        out.push_back({"ZZ-same" + tag, {{Z(i, a), Z(i, b)}}, {{Z(i, b), Z(i, a)}}});
        out.push_back({"dd-same" + tag, {{D(i, a), D(i, b)}}, {{D(i, b), D(i, a)}}});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const RatFunc h = hdiff_ij(i, j);
      const RatFunc inv = one / h;
      const RatFunc big = (h * h - one) / (h * h);
      const RatFunc zd = h * (h + RatFunc(2)) / ((h + one) * (h + one));
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          const std::string tag = "[" + idx(ctx, i, a) + ";" + idx(ctx, j, b) + "]";
          out.push_back({"ZZ-a" + tag, {{Z(i, a), Z(j, b)}}, {{inv, Z(i, b), Z(j, a)}, {big, Z(j, b), Z(i, a)}}});
          out.push_back({"ZZ-b" + tag, {{Z(j, a), Z(i, b)}}, {{-inv, Z(j, b), Z(i, a)}, {Z(i, b), Z(j, a)}}});
          out.push_back({"dd-a" + tag, {{D(i, a), D(j, b)}}, {{-inv, D(i, b), D(j, a)}, {big, D(j, b), D(i, a)}}});
          out.push_back({"dd-b" + tag, {{D(j, a), D(i, b)}}, {{inv, D(j, b), D(i, a)}, {D(i, b), D(j, a)}}});
          out.push_back({"Zd-a" + tag, {{Z(i, a), D(j, b)}}, {{D(j, b), Z(i, a)}}});
          out.push_back({"Zd-b" + tag, {{Z(j, a), D(i, b)}}, {{zd, D(i, b), Z(j, a)}}});
        }
    }
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        std::vector<Word> rhs;
        for (int k = 1; k <= n; ++k) rhs.push_back({one / (one - hdiff_ij(i, k)), D(k, b), Z(k, a)});
        if (a == b) rhs.push_back({RatFunc(-1)});
        out.push_back({"Zd-diag[" + idx(ctx, i, a) + ";" + std::to_string(b) + "]", {{Z(i, a), D(i, b)}}, rhs});
      }
  return out;
}

Element evaluate_word(const RingCtx& ctx, const Word& w) {
  Element e = Element::one(ctx);
  for (const Letter& l : w) {
    if (const auto* g = std::get_if<Generator>(&l)) {
      e = e * Element::gen(ctx, *g);
    } else {
      e = e.times_right(std::get<RatFunc>(l));
    }
  }
  return e;
}

Element evaluate_side(const RingCtx& ctx, const std::vector<Word>& side) {
  Element e(ctx);
  for (const Word& w : side) e += evaluate_word(ctx, w);
  return e;
}

std::string word_to_string(const RingCtx& ctx, const Word& w) {
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += "*";
    if (const auto* g = std::get_if<Generator>(&l)) {
      s += g->to_string(ctx);
    } else {
      s += "(" + std::get<RatFunc>(l).to_string(coefficient_names()) + ")";
    }
  }
  return s.empty() ? "1" : s;
}

std::string relation_to_string(const RingCtx& ctx, const Relation& r) {
  auto side = [&](const std::vector<Word>& ws) {
    std::string s;
    for (const Word& w : ws) s += (s.empty() ? "" : " + ") + word_to_string(ctx, w);
    return s;
  };
  return side(r.lhs) + " = " + side(r.rhs);
}

}  // namespace hdiff

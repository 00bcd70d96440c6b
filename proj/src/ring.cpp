#include "hdiff/ring.hpp"

#include <cstring>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace hdiff {

RingCtx::RingCtx(int n, int N) : n_(n), N_(N) {
  if (n < 1 || n > kMaxSites || N < 1 || n * N > kMaxSlots)
    throw std::invalid_argument("unsupported ring size n=" + std::to_string(n) + " N=" + std::to_string(N));
}

std::string Generator::to_string(const RingCtx& ctx) const {
  std::string s = is_z() ? "Z[" : "d[";
  s += std::to_string(site);
  if (ctx.N() > 1) s += "," + std::to_string(copy);
  return s + "]";
}

void check_generator(const RingCtx& ctx, const Generator& g) {
  if (g.site < 1 || g.site > ctx.n() || g.copy < 1 || g.copy > ctx.N())
    throw std::invalid_argument("index out of range");
}

int NormalMonomial::degree() const {
  int s = 0;
  for (int i = 0; i < kMaxSlots; ++i) s += d[i] + z[i];
  return s;
}

std::strong_ordering NormalMonomial::operator<=>(const NormalMonomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  if (auto c = d <=> other.d; c != 0) return c;
  return z <=> other.z;
}

namespace {

using Block = std::array<std::uint8_t, kMaxSlots>;

// Canonical order inside a block: sites downwards, copies upwards.
bool precedes(const Generator& a, const Generator& b) {
  return a.site > b.site || (a.site == b.site && a.copy <= b.copy);
}

void append_block(std::vector<Generator>& out, const Block& b, Generator::Kind kind, const RingCtx& ctx) {
  for (int site = ctx.n(); site >= 1; --site)
    for (int copy = 1; copy <= ctx.N(); ++copy)
      for (int e = 0; e < b[ctx.slot(site, copy)]; ++e) out.push_back({kind, site, copy});
}

ShiftVector block_weight(const Block& b, int sign, const RingCtx& ctx) {
  ShiftVector s;
  for (int site = 1; site <= ctx.n(); ++site)
    for (int copy = 1; copy <= ctx.N(); ++copy) s.offsets[weight_var(site)] += sign * b[ctx.slot(site, copy)];
  return s;
}

// Last generator of the canonical word of a nonempty block.
Generator last_of(const Block& b, Generator::Kind kind, const RingCtx& ctx) {
  for (int site = 1; site <= ctx.n(); ++site)
    for (int copy = ctx.N(); copy >= 1; --copy)
      if (b[ctx.slot(site, copy)]) return {kind, site, copy};
  throw std::logic_error("empty block");
}

bool block_empty(const Block& b) {
  for (auto e : b)
    if (e) return false;
  return true;
}

using Terms = Element::Terms;

void accumulate(Terms& t, const NormalMonomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

struct Key {
  Block block{};
  std::uint8_t kind = 0;
  std::uint8_t site = 0;
  std::uint8_t copy = 0;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    char buf[sizeof(Block) + 3];
    std::memcpy(buf, k.block.data(), sizeof(Block));
    buf[sizeof(Block)] = static_cast<char>(k.kind);
    buf[sizeof(Block) + 1] = static_cast<char>(k.site);
    buf[sizeof(Block) + 2] = static_cast<char>(k.copy);
    return std::hash<std::string_view>{}(std::string_view(buf, sizeof(buf)));
  }
};

struct PairKey {
  NormalMonomial a, b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    char buf[4 * sizeof(Block)];
    std::memcpy(buf, k.a.d.data(), sizeof(Block));
    std::memcpy(buf + sizeof(Block), k.a.z.data(), sizeof(Block));
    std::memcpy(buf + 2 * sizeof(Block), k.b.d.data(), sizeof(Block));
    std::memcpy(buf + 3 * sizeof(Block), k.b.z.data(), sizeof(Block));
    return std::hash<std::string_view>{}(std::string_view(buf, sizeof(buf)));
  }
};

template <class K, class H>
class Cache {
 public:
  std::optional<Terms> find(const K& k) {
    std::lock_guard lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const K& k, const Terms& t) {
    std::lock_guard lock(mu_);
    map_.emplace(k, t);
  }

 private:
  std::mutex mu_;
  std::unordered_map<K, Terms, H> map_;
};

// Memoized rewriting for one ring. Sub-products of blocks by a single
// generator are cached; every product is assembled from them.
class Engine {
 public:
  explicit Engine(const RingCtx& ctx) : ctx_(ctx) {}

  Terms mul_mono(const NormalMonomial& a, const NormalMonomial& b) {
    const PairKey key{a, b};
    if (auto hit = mono_cache_.find(key)) return *hit;
    Terms acc{{a, RatFunc(1)}};
    for (const Generator& g : monomial_word(b, ctx_)) {
      Terms next;
      for (const auto& [m, c] : acc)
        for (const auto& [m2, e] : mul_gen(m, g)) accumulate(next, m2, c * e);
      acc = std::move(next);
    }
    mono_cache_.insert(key, acc);
    return acc;
  }

 private:
  RingCtx ctx_;
  Cache<Key, KeyHash> zz_cache_, zd_cache_, dd_cache_;
  Cache<PairKey, PairKeyHash> mono_cache_;

  Key key_of(const Block& b, const Generator& g) const {
    return {b, static_cast<std::uint8_t>(g.kind), static_cast<std::uint8_t>(g.site),
            static_cast<std::uint8_t>(g.copy)};
  }

  Block without(Block b, const Generator& g) const {
    --b[ctx_.slot(g.site, g.copy)];
    return b;
  }

  Block with(Block b, const Generator& g) const {
    ++b[ctx_.slot(g.site, g.copy)];
    return b;
  }

  Terms mul_gen(const NormalMonomial& m, const Generator& g) {
    Terms out;
    const ShiftVector wd = block_weight(m.d, +1, ctx_);
    if (g.is_z()) {
      for (const auto& [m2, f] : zmul_z(m.z, g)) {
        NormalMonomial r;
        r.d = m.d;
        r.z = m2.z;
        accumulate(out, r, f.shifted(wd));
      }
      return out;
    }
    for (const auto& [m1, e] : zmul_d(m.z, g)) {
      const RatFunc e1 = e.shifted(wd);
      if (block_empty(m1.d)) {
        NormalMonomial r;
        r.d = m.d;
        r.z = m1.z;
        accumulate(out, r, e1);
        continue;
      }
      const Generator dg = last_of(m1.d, Generator::Kind::D, ctx_);
      for (const auto& [m2, f] : dmul_d(m.d, dg)) {
        NormalMonomial r;
        r.d = m2.d;
        r.z = m1.z;
        accumulate(out, r, e1 * f);
      }
    }
    return out;
  }

  // Same-block reordering shared by the Z and d blocks. For sites i < j:
  //   Z^{i,a} Z^{j,b} = Z^{j,b} Z^{i,a} + (1/h_ij) Z^{j,a} Z^{i,b}
  //   d_{i,a} d_{j,b} = d_{j,b} d_{i,a} - (1/h_ij) d_{j,a} d_{i,b}
  // and equal sites commute.
  Terms block_mul(const Block& b, const Generator& g, Cache<Key, KeyHash>& cache) {
    const Key key = key_of(b, g);
    if (auto hit = cache.find(key)) return *hit;
    const bool is_z = g.is_z();
    auto mono = [&](const Block& blk) {
      NormalMonomial m;
      (is_z ? m.z : m.d) = blk;
      return m;
    };
    auto block_of = [&](const NormalMonomial& m) -> const Block& { return is_z ? m.z : m.d; };

    Terms out;
    if (block_empty(b)) {
      out.emplace(mono(with(b, g)), RatFunc(1));
      cache.insert(key, out);
      return out;
    }
    const Generator last = last_of(b, g.kind, ctx_);
    if (precedes(last, g)) {
      out.emplace(mono(with(b, g)), RatFunc(1));
      cache.insert(key, out);
      return out;
    }
    const Block rest = without(b, last);
    struct Piece {
      RatFunc coeff;
      Generator first, second;
    };
    std::vector<Piece> pieces;
    if (last.site == g.site) {
      pieces.push_back({RatFunc(1), g, last});
    } else {
      const int i = last.site, j = g.site;
      const RatFunc inv = RatFunc(1) / (hvar_(i) - hvar_(j));
      pieces.push_back({RatFunc(1), g, last});
      pieces.push_back({is_z ? inv : -inv, Generator{g.kind, j, last.copy}, Generator{g.kind, i, g.copy}});
    }
    const ShiftVector wr = block_weight(rest, is_z ? -1 : +1, ctx_);
    for (const Piece& p : pieces) {
      const RatFunc c = p.coeff.shifted(wr);
      for (const auto& [m1, e] : block_mul(rest, p.first, cache))
        for (const auto& [m2, f] : block_mul(block_of(m1), p.second, cache)) accumulate(out, m2, c * e * f);
    }
    cache.insert(key, out);
    return out;
  }

  Terms zmul_z(const Block& zb, const Generator& g) { return block_mul(zb, g, zz_cache_); }
  Terms dmul_d(const Block& db, const Generator& g) { return block_mul(db, g, dd_cache_); }

  // Z-block times d_{p,b}; every resulting monomial has at most one d.
  //   Z^{q,a} d_{p,b} = d_{p,b} Z^{q,a}                               q < p
  //   Z^{q,a} d_{p,b} = x(x+2)/(x+1)^2 d_{p,b} Z^{q,a}, x = h_pq       p < q
  //   Z^{q,a} d_{q,b} = sum_k 1/(1-h_qk) d_{k,b} Z^{k,a} - delta_ab    (k = q term: 1)
  Terms zmul_d(const Block& zb, const Generator& g) {
    const Key key = key_of(zb, g);
    if (auto hit = zd_cache_.find(key)) return *hit;
    Terms out;
    if (block_empty(zb)) {
      NormalMonomial m;
      m.d = with(m.d, g);
      out.emplace(m, RatFunc(1));
      zd_cache_.insert(key, out);
      return out;
    }
    const Generator last = last_of(zb, Generator::Kind::Z, ctx_);
    const Block rest = without(zb, last);
    const int q = last.site, p = g.site;
    struct Piece {
      RatFunc coeff;
      std::optional<Generator> d, z;
    };
    std::vector<Piece> pieces;
    if (q < p) {
      pieces.push_back({RatFunc(1), g, last});
    } else if (p < q) {
      const RatFunc x = hvar_(p) - hvar_(q);
      pieces.push_back({x * (x + RatFunc(2)) / ((x + RatFunc(1)) * (x + RatFunc(1))), g, last});
    } else {
      for (int k = 1; k <= ctx_.n(); ++k) {
        RatFunc c = k == q ? RatFunc(1) : RatFunc(1) / (RatFunc(1) - (hvar_(q) - hvar_(k)));
        pieces.push_back({c, Generator::d(k, g.copy), Generator::z(k, last.copy)});
      }
      if (g.copy == last.copy) pieces.push_back({RatFunc(-1), std::nullopt, std::nullopt});
    }
    const ShiftVector wr = block_weight(rest, -1, ctx_);
    for (const Piece& pc : pieces) {
      const RatFunc c = pc.coeff.shifted(wr);
      if (!pc.d) {
        NormalMonomial m;
        m.z = rest;
        accumulate(out, m, c);
        continue;
      }
      for (const auto& [m1, e] : zmul_d(rest, *pc.d)) {
        const ShiftVector wd = block_weight(m1.d, +1, ctx_);
        for (const auto& [m2, f] : zmul_z(m1.z, *pc.z)) {
          NormalMonomial m;
          m.d = m1.d;
          m.z = m2.z;
          accumulate(out, m, c * e * f.shifted(wd));
        }
      }
    }
    zd_cache_.insert(key, out);
    return out;
  }

  static RatFunc hvar_(int i) { return RatFunc::var(weight_var(i)); }
};

Engine& engine_for(const RingCtx& ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Engine>> engines;
  std::lock_guard lock(mu);
  auto& slot = engines[{ctx.n(), ctx.N()}];
  if (!slot) slot = std::make_unique<Engine>(ctx);
  return *slot;
}

}  // namespace

std::vector<Generator> monomial_word(const NormalMonomial& m, const RingCtx& ctx) {
  std::vector<Generator> out;
  append_block(out, m.d, Generator::Kind::D, ctx);
  append_block(out, m.z, Generator::Kind::Z, ctx);
  return out;
}

ShiftVector weight(const NormalMonomial& m, const RingCtx& ctx) {
  return block_weight(m.d, +1, ctx) + block_weight(m.z, -1, ctx);
}

std::string monomial_to_string(const NormalMonomial& m, const RingCtx& ctx) {
  const auto word = monomial_word(m, ctx);
  std::string s;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!s.empty()) s += "*";
    s += word[i].to_string(ctx);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

std::span<const std::string> coefficient_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v(kNumVars);
    for (int i = 0; i < kNumVars; ++i)
      v[i] = is_weight_var(i) ? "h[" + std::to_string(i) + "]" : "c[" + std::to_string(i - kMaxSites) + "]";
    return v;
  }();
  return names;
}

RatFunc central_symbol(int k) {
  if (k < 1 || k > kNumVars - 1 - kMaxSites) throw std::invalid_argument("index out of range");
  return RatFunc::var(central_var(k));
}

Element Element::scalar(const RingCtx& ctx, const RatFunc& f) {
  Element e(ctx);
  e.add_term(NormalMonomial{}, f);
  return e;
}

Element Element::h(const RingCtx& ctx, int i) {
  if (i < 1 || i > ctx.n()) throw std::invalid_argument("index out of range");
  return scalar(ctx, RatFunc::var(weight_var(i)));
}

Element Element::gen(const RingCtx& ctx, const Generator& g) {
  check_generator(ctx, g);
  NormalMonomial m;
  (g.is_z() ? m.z : m.d)[ctx.slot(g.site, g.copy)] = 1;
  return monomial(ctx, m);
}

Element Element::monomial(const RingCtx& ctx, const NormalMonomial& m, const RatFunc& coeff) {
  Element e(ctx);
  e.add_term(m, coeff);
  return e;
}

Element Element::word(const RingCtx& ctx, std::span<const Generator> letters) {
  Element e = one(ctx);
  for (const auto& g : letters) e = e * gen(ctx, g);
  return e;
}

std::optional<RatFunc> Element::as_scalar() const {
  if (terms_.empty()) return RatFunc();
  if (terms_.size() == 1 && terms_.begin()->first.is_identity()) return terms_.begin()->second;
  return std::nullopt;
}

RatFunc Element::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

int Element::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void Element::add_term(const NormalMonomial& m, const RatFunc& coeff) { accumulate(terms_, m, coeff); }

void Element::check_same(const Element& other) const {
  if (!(ctx_ == other.ctx_)) throw std::invalid_argument("context mismatch");
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
  return *this;
}

Element Element::operator+(const Element& other) const {
  Element r = *this;
  r += other;
  return r;
}

Element Element::operator-(const Element& other) const { return *this + (-other); }

Element Element::operator*(const Element& other) const {
  check_same(other);
  Engine& eng = engine_for(ctx_);
  Element r(ctx_);
  for (const auto& [mx, f] : terms_) {
    const ShiftVector w = weight(mx, ctx_);
    for (const auto& [my, g] : other.terms_) {
      const RatFunc c = f * g.shifted(w);
      if (my.is_identity()) {
        accumulate(r.terms_, mx, c);
        continue;
      }
      for (const auto& [m, e] : eng.mul_mono(mx, my)) accumulate(r.terms_, m, c * e);
    }
  }
  return r;
}

Element operator*(const RatFunc& f, const Element& x) {
  Element r(x.ctx_);
  if (f.is_zero()) return r;
  for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, f * c);
  return r;
}

Element Element::times_right(const RatFunc& f) const {
  Element r(ctx_);
  for (const auto& [m, c] : terms_) accumulate(r.terms_, m, c * f.shifted(weight(m, ctx_)));
  return r;
}

Element Element::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Element r = one(ctx_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Element::operator==(const Element& other) const { return ctx_ == other.ctx_ && terms_ == other.terms_; }

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string term;
    const bool ident = m.is_identity();
    if (c.is_constant()) {
      const Rational v = c.constant_value();
      if (ident) {
        term = v.get_str();
      } else if (v == 1) {
        term = monomial_to_string(m, ctx_);
      } else if (v == -1) {
        term = "-" + monomial_to_string(m, ctx_);
      } else {
        term = v.get_str() + "*" + monomial_to_string(m, ctx_);
      }
    } else {
      term = "(" + c.to_string(coefficient_names()) + ")";
      if (!ident) term += "*" + monomial_to_string(m, ctx_);
    }
    if (first) {
      os << term;
    } else if (term.front() == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
    first = false;
  }
  return os.str();
}

Element product(const Element& x, const Element& y) { return x * y; }

Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

}  // namespace hdiff

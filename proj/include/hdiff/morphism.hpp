#pragma once

#include <array>
#include <string>
#include <vector>

#include "hdiff/relations.hpp"
#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"

namespace hdiff {

/// Thrown when a construction is asked for outside the range where it is defined.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A (anti-)morphism given by the images of the generators; coefficients are
/// mapped by a permutation of the h variables.
struct GeneratorMap {
  enum class Kind { Hom, Anti };

  RingCtx ctx;
  Kind kind = Kind::Hom;
  std::string name;
  std::vector<Element> z_images;  // indexed by RingCtx::slot
  std::vector<Element> d_images;
  std::array<int, kNumVars> perm{};  // x_v -> x_{perm[v]}

  const Element& image(const Generator& g) const;
  RatFunc map_coeff(const RatFunc& f) const { return f.permuted(perm); }
};

enum class MapKind { Zhelobenko, Epsilon, Sn };

/// Zhelobenko q_i and epsilon exist only for N = 1 (Unsupported otherwise).
GeneratorMap build_morphism(MapKind kind, int i, const RingCtx& ctx);

Element apply(const GeneratorMap& map, const Element& x);

/// Every defining relation is sent to a valid relation (order reversed for anti maps).
Report verify_morphism(const GeneratorMap& map);

/// Braid and distant commutation for Zhelobenko maps; additionally s_i^2 = id for S_n.
Report verify_group_relations(MapKind kind, const RingCtx& ctx);

/// epsilon(epsilon(g)) = g on every generator.
Report verify_involution(const GeneratorMap& map);

}  // namespace hdiff

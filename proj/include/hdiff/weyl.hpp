#pragma once

#include <array>
#include <string>
#include <vector>

#include "hdiff/laurent.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

enum class WeylGen { X, D, H, A, Psi, PsiPrime, Upsilon };

/// H_i sits in slot i, a_k in the central slot k.
RatFunc weyl_h(int i);
RatFunc weyl_a(int k);

/// X^i, D_i = H_i X^{-e_i}, H_i, a_k, Psi_i, Psi'_i and
/// Upsilon_i = H_i^n - sum_k (-1)^k a_k H_i^{n-k}.
WeylElement wgen(WeylGen g, int i, int n);
inline WeylElement wproduct(const WeylElement& u, const WeylElement& v) { return u * v; }

enum class DenominatorMode { T, T0 };

struct WhitelistResult {
  bool ok = true;
  std::string witness;
};

/// Every coefficient denominator is a product of H_j - H_k + l (j < k, l in Z).
/// For T0 the element must also lie in T0^{-1} W_n: a coefficient of X^b with
/// b_i < 0 has to be divisible by H_i (H_i + 1) ... (H_i + |b_i| - 1), which
/// is what D_i^{|b_i|} contributes.
WhitelistResult denominator_whitelist(const WeylElement& u, DenominatorMode mode);

/// Automorphism of the Weyl side given by the images of X^j and D_j; H_j goes
/// to H_{perm(j)} and the a_k are fixed.
struct WeylMap {
  int n = 1;
  std::string name;
  std::vector<WeylElement> x_images;  // index j-1
  std::vector<WeylElement> d_images;
  std::array<int, kNumVars> perm{};
};

WeylMap weyl_zhelobenko_map(int i, int n);
WeylElement apply(const WeylMap& map, const WeylElement& u);

/// Images, preservation of the Weyl relations, H images and the T0 whitelist.
Report weyl_zhelobenko(int i, int n);
/// Braid and distant commutation relations on X^j, D_j, H_j.
Report verify_weyl_braid(int n);
/// X, D presentation of W_n recovered from the model, H_jk shifts, Upsilon polynomial.
Report verify_weyl_presentation(int n);

}  // namespace hdiff

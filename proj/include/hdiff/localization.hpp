#pragma once

#include <optional>
#include <string>

#include "hdiff/laurent.hpp"
#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"
#include "hdiff/weyl.hpp"

namespace hdiff {

/// Image of Diff_h(n) (N = 1) in the localized model:
///   h_i -> h_i, Z^i -> Zo^i (1/psi'_i),
///   d_i -> chi_i^{-1} (h_i^n - h_i^n c(-1/h_i)) (Zo^i (1/psi'_i))^{-1}.
/// Throws Unsupported for N >= 2.
LocElement embed(const Element& x);
LocElement embed_generator(const RingCtx& ctx, const Generator& g);

/// X^i -> Zo^i, H_i -> h_i, a_k -> c_k and back; both are relabelings.
LocElement mu(const WeylElement& u);
WeylElement mu_inv(const LocElement& v);

/// Original-generator formulas for mu and mu^{-1}, embed of the defining
/// relations and of c_k, and transport of the B_W relations to B_D.
Report check_original_generator_formulas(int n);

/// psi_i Z^i, Z^i psi'_i, psi_i d_i, d_i psi'_i commute among themselves; Z^i do not.
Report verify_commuting_families(int n);

/// Zhelobenko maps on both sides agree through embed and mu.
Report verify_zhelobenko_transport(int n);

struct CenterResult {
  bool central = false;
  Poly polynomial;      // in the c_k slots when central
  std::string witness;  // generator with a nonzero commutator otherwise
  Element commutator_value{RingCtx(1)};
};

/// Decides membership in the center (N = 1): central elements are returned as
/// polynomials in c_1..c_n; others come with a generator they fail to commute with.
CenterResult center_decompose(const Element& x);

/// p(c_1, .., c_n) with the c_k slots of p replaced by the central elements.
Element central_polynomial_element(const RingCtx& ctx, const Poly& p);

struct OreWitness {
  int nu = 0;
  Element m_tilde{RingCtx(1)};
};

/// Smallest nu >= 1 with (Z^k)^nu m = m~ Z^k for some m~ in Diff_h(n).
/// Throws std::runtime_error when no nu <= bound works.
OreWitness ore_witness(int k, const Element& m, int bound);

}  // namespace hdiff

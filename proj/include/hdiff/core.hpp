#pragma once

#include "hdiff/relations.hpp"
#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"

namespace hdiff {

/// Entry R^{ij}_{kl} of the dynamical R-matrix on n sites.
/// Throws std::invalid_argument("index out of range").
RatFunc rhat(int i, int j, int k, int l, int n);

/// All n^6 component identities of the dynamical Yang-Baxter equation.
Report verify_dybe(int n);

/// Every defining relation holds in the engine, and the R-matrix form of the
/// quadratic relations agrees with the component form.
Report verify_relations(const RingCtx& ctx);
Report verify_rmatrix_form(const RingCtx& ctx);

/// Gamma_i = d_i Z^i (N = 1).
Element gamma_element(const RingCtx& ctx, int i);
/// e_k(h_1..h_n) as a scalar element.
Element sym_element(const RingCtx& ctx, int k);
/// c_k = sum_j (d e_k / d h_j) Gamma_j - e_k (N = 1).
Element central_element(const RingCtx& ctx, int k);

/// Gamma commutation rules, V V^{-1} = I and chi_j Gamma_j = h_j^n - h_j^n c(-1/h_j).
Report verify_core_lemmas(int n);
/// [c_k, g] = 0 for every k and every generator g, h_j included.
Report verify_centrality(int n);

}  // namespace hdiff

#pragma once

#include "hdiff/ratfunc.hpp"

namespace hdiff {

/// h_i as a rational function (slot i; also used for H_i and lambda_i).
RatFunc hvar(int i);
/// h_ij = h_i - h_j.
RatFunc hdiff_ij(int i, int j);

/// Elementary symmetric function e_k(h_1..h_n). Throws std::invalid_argument
/// unless 0 <= k <= n.
RatFunc sym_poly(int k, int n);
/// d e_k / d h_j.
RatFunc sym_poly_derivative(int k, int n, int j);

enum class ProductKind { Psi, PsiPrime, Chi, Phi, BigPsi, BigPsiPrime };

/// psi_i = prod_{k>i} h_ik, psi'_i = prod_{k<i} h_ik, chi_i = psi_i psi'_i,
/// phi_i = psi_i / psi_i[-eps_i]. The capital versions are the same products
/// read in the H variables, which share the slots of h.
RatFunc structural_product(ProductKind kind, int i, int n);

/// prod_l (h_0-h_l-1)/(h_0-h_l) + sum_j chi_j[-eps_j]/((h_0-h_j) chi_j) == 1.
bool verify_note3_identity(int n);

}  // namespace hdiff

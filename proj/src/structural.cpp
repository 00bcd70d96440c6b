#include "hdiff/structural.hpp"

#include <stdexcept>
#include <string>

namespace hdiff {

namespace {

void check_site(int i, int n) {
  if (n < 1 || n > kMaxSites || i < 1 || i > n) throw std::invalid_argument("index out of range");
}

}  // namespace

RatFunc hvar(int i) { return RatFunc::var(weight_var(i)); }

RatFunc hdiff_ij(int i, int j) { return hvar(i) - hvar(j); }

RatFunc sym_poly(int k, int n) {
  if (n < 0 || n > kMaxSites || k < 0 || k > n) throw std::invalid_argument("index out of range");
  // Newton recursion over the number of variables.
  std::vector<RatFunc> e(k + 1, RatFunc());
  e[0] = RatFunc(1);
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(k, m); j >= 1; --j) e[j] += hvar(m) * e[j - 1];
  return e[k];
}

RatFunc sym_poly_derivative(int k, int n, int j) {
  check_site(j, n);
  if (k < 0 || k > n) throw std::invalid_argument("index out of range");
  return RatFunc(sym_poly(k, n).numerator().derivative(weight_var(j)));
}

RatFunc structural_product(ProductKind kind, int i, int n) {
  check_site(i, n);
  RatFunc r(1);
  switch (kind) {
    case ProductKind::Psi:
    case ProductKind::BigPsi:
      for (int k = i + 1; k <= n; ++k) r *= hdiff_ij(i, k);
      break;
    case ProductKind::PsiPrime:
    case ProductKind::BigPsiPrime:
      for (int k = 1; k < i; ++k) r *= hdiff_ij(i, k);
      break;
    case ProductKind::Chi:
      for (int k = 1; k <= n; ++k)
        if (k != i) r *= hdiff_ij(i, k);
      break;
    case ProductKind::Phi:
      for (int k = i + 1; k <= n; ++k) r *= hdiff_ij(i, k) / (hdiff_ij(i, k) - RatFunc(1));
      break;
  }
  return r;
}

bool verify_note3_identity(int n) {
  if (n < 1 || n > kMaxSites) throw std::invalid_argument("index out of range");
  const RatFunc h0 = RatFunc::var(0);
  RatFunc lhs(1);
  for (int l = 1; l <= n; ++l) lhs *= (h0 - hvar(l) - RatFunc(1)) / (h0 - hvar(l));
  for (int j = 1; j <= n; ++j) {
    const RatFunc chi = structural_product(ProductKind::Chi, j, n);
    lhs += chi.shifted(ShiftVector::unit(j, -1)) / ((h0 - hvar(j)) * chi);
  }
  return lhs == RatFunc(1);
}

}  // namespace hdiff

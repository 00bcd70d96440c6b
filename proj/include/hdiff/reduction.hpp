#pragma once

#include <string>
#include <vector>

#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"

namespace hdiff {

/// entries[i-1][j-1] = tau_N(L_i^j) = sum_a Z^{j,a} d_{i,a}.
struct LMatrix {
  RingCtx ctx;
  std::vector<std::vector<Element>> entries;
  const Element& at(int i, int j) const { return entries[i - 1][j - 1]; }
};

LMatrix tau_L(int n, int N);

/// Placement of R and L in the reflection equation, as matrices indexed by pairs.
///   NoShift:      R at ((i,j),(k,l)) = R^{ij}_{kl}, L_1 at ((i,j),(k,l)) = L_k^i delta_jl
///   TransposedR:  R at ((i,j),(k,l)) = R^{kl}_{ij}
///   TransposedL:  L_1 at ((i,j),(k,l)) = L_i^k delta_jl
///   InteriorShift: as NoShift, the R between the two L factors of each quartic
///                  term has its entry at column (k,l) shifted by [eps_k]
enum class ReflectionConvention { NoShift, TransposedR, TransposedL, InteriorShift };

const std::vector<ReflectionConvention>& reflection_conventions();
std::string to_string(ReflectionConvention c);
/// Throws std::invalid_argument for unknown ids.
ReflectionConvention parse_convention(const std::string& id);

/// Componentwise R L R L - L R L R = R L - L R in Diff_h(n, N).
Report verify_reflection(int n, int N, ReflectionConvention convention);

struct ReflectionDiscovery {
  bool found = false;
  ReflectionConvention convention = ReflectionConvention::NoShift;
  Report report;  // components of the pinned convention, or every candidate when none passes
};

/// Tries the candidates in order and pins the first one under which every component agrees.
ReflectionDiscovery discover_reflection_convention(int n, int N);

/// h_i tau(L_j^k) = tau(L_j^k) (h_i + delta_ik - delta_ij).
Report verify_tau_weights(int n, int N);

/// s_i(tau_N(L_j^k)) as left Q(h)-combinations of {tau_N(L_a^b)} and 1,
/// with identical coefficients for N and N+1.
Report verify_sn_on_image(int n, int N);

}  // namespace hdiff

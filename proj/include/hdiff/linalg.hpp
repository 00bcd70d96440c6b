#pragma once

#include <optional>
#include <vector>

#include "hdiff/ratfunc.hpp"

namespace hdiff {

using RatMatrix = std::vector<std::vector<RatFunc>>;

struct LinearSolution {
  std::vector<RatFunc> x;  // free variables set to zero
  int rank = 0;
};

/// Solves A x = b over Q(h) by Gaussian elimination; nullopt if inconsistent.
std::optional<LinearSolution> solve(RatMatrix a, std::vector<RatFunc> b);

}  // namespace hdiff

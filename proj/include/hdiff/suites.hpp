#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"

namespace hdiff {

struct SuiteParams {
  int n = 2;
  int N = 1;
  std::uint64_t seed = 1;
  int degree = 3;  // maximal word length of sampled inputs
};

struct SuiteResult {
  std::string suite;
  SuiteParams params;
  Report report;
  long long elapsed_ms = 0;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or parameters no ring
/// supports. Suites defined only for N = 1 report a single skipped check.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

/// Seeded random word of 1..max_len letters (generators and h_i).
Element random_word(const RingCtx& ctx, std::uint64_t& state, int max_len);

/// (x y) z = x (y z) on seeded random word triples.
Report verify_associativity(const RingCtx& ctx, std::uint64_t seed, int triples, int max_len);

/// Classifies seeded inputs with center_decompose: polynomials in c_k of degree
/// <= 3 must come back as themselves; perturbed ones must be rejected with a
/// nonzero commutator.
Report center_decision_suite(int n, std::uint64_t seed, int central_inputs, int perturbed_inputs);

/// Ore witnesses for seeded monomials with 1 <= length <= max_len; each check
/// asserts nu <= length.
Report ore_suite(int n, std::uint64_t seed, int monomials, int max_len);

}  // namespace hdiff

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdiff/laurent.hpp"
#include "hdiff/relations.hpp"
#include "hdiff/report.hpp"
#include "hdiff/ring.hpp"

namespace hdiff {

/// Vector of the module induced from |> (d_i |> = 0, h_i |> = lambda_i |>),
/// in the basis Z^b |> with Z^b the canonical Z-block. Coefficients are rational
/// functions of lambda_1..lambda_n, stored in the weight slots.
struct HWVector {
  int n = 1;
  std::map<Exponents, RatFunc> terms;

  static HWVector vacuum(int n);
  static HWVector basis(int n, const Exponents& b, const RatFunc& coeff = RatFunc(1));

  bool is_zero() const { return terms.empty(); }
  void add_term(const Exponents& b, const RatFunc& c);
  HWVector operator+(const HWVector& o) const;
  HWVector operator-(const HWVector& o) const;
  bool operator==(const HWVector& o) const { return n == o.n && terms == o.terms; }
  std::string to_string() const;
};

/// x . v for x in Diff_h(n) (N = 1; Unsupported otherwise).
HWVector hw_apply(const Element& x, const HWVector& v);
/// Letters act right to left.
HWVector hw_apply(const RingCtx& ctx, const Word& w, const HWVector& v);

/// The first count nonzero exponent vectors in graded order.
std::vector<Exponents> excited_exponents(int n, int count);

/// Scalar by which c_k acts on |>, after checking it acts by the same scalar on
/// five excited vectors. Throws std::runtime_error if c_k does not act by a scalar.
RatFunc hw_central_value(int k, int n);
/// -e_k(lambda_1 - 1, .., lambda_n - 1).
RatFunc expected_hw_central_value(int k, int n);

/// Vector of V_{gamma,A}: finite combination of v_j, j in Z^n, with
/// X^i v_j = v_{j+e_i}, H_i v_j = (gamma_i + j_i + 1) v_j, a_k v_j = A_k v_j.
class VGammaVector {
 public:
  /// Throws std::invalid_argument if sizes differ from n or gamma_i - gamma_j is an integer for some i != j.
  VGammaVector(int n, std::vector<Rational> gamma, std::vector<Rational> a);

  static bool generic(const std::vector<Rational>& gamma);

  int n() const { return n_; }
  const std::vector<Rational>& gamma() const { return gamma_; }
  const std::vector<Rational>& a() const { return a_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Same module, no terms.
  VGammaVector zero() const;
  VGammaVector basis(const Exponents& j, const Rational& c = 1) const;
  void add_term(const Exponents& j, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  VGammaVector operator+(const VGammaVector& o) const;
  VGammaVector operator-(const VGammaVector& o) const;
  bool operator==(const VGammaVector& o) const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> gamma_;
  std::vector<Rational> a_;
  std::map<Exponents, Rational> terms_;
};

VGammaVector vgamma_apply(const WeylElement& u, const VGammaVector& v);
/// Through mu^{-1} of the localized image (N = 1).
VGammaVector vgamma_apply(const Element& x, const VGammaVector& v);
VGammaVector vgamma_apply(const RingCtx& ctx, const Word& w, const VGammaVector& v);

/// Seeded generic gamma and arbitrary A.
VGammaVector random_vgamma_module(int n, std::uint64_t seed);

/// Every defining relation annihilates the given vectors: in the highest weight
/// module on the first hw_vectors basis vectors, and in each V_{gamma,A} on
/// v_vectors seeded basis vectors. Also checks the weight eigenvalues, the action
/// of c_k on V_{gamma,A}, and Z^i against X^i.
struct ModuleSuiteParams {
  int n = 2;
  std::uint64_t seed = 1;
  int hw_vectors = 4;
  int gammas = 5;
  int v_vectors = 4;
};
Report module_relation_suite(const ModuleSuiteParams& p);

/// Number of relation-vector pairs tested in V_{gamma,A} modules by the suite.
int vgamma_pairs(const ModuleSuiteParams& p);

}  // namespace hdiff

#pragma once

#include <string>
#include <vector>

#include "waring/decomposition.hpp"
#include "waring/forms.hpp"

namespace waring {

/// x^a = m1 * m2^(k-1) with |m1| = |m2| = d.
struct MonomialFactorization {
  Exponent a;
  int k = 0;
  int d = 0;
  Exponent m1;
  Exponent m2;
  /// a_i = q_i (k-1) + r_i, b = (d - sum r_i) / (k-1), b_i <= q_i summing to b.
  std::vector<int> q;
  std::vector<int> r;
  std::vector<int> b_i;
  int b = 0;
};

/// Throws PreconditionError unless k divides |a| and (k-2) n <= d.
MonomialFactorization monomial_k_factor(const Exponent& a, int k);

/// At most k k-th powers of degree-d forms summing to x^a, from
/// sum_j zeta^-j (zeta^j u + v)^k = k^2 u v^(k-1) with u = x^m1, v = x^m2.
/// Exact for k in {1, 2, 4}.
Decomposition monomial_krank_upper(const Exponent& a, int k);

enum class CanonicalVariant { unique, relaxed };
std::string to_string(CanonicalVariant v);

/// p = sum_{j=0}^{k-1} y^(jd) p_j^(k-j), every p_j of degree d.
struct CanonicalForm {
  int k = 0;
  int d = 0;
  CanonicalVariant variant = CanonicalVariant::unique;
  std::vector<BinaryForm> parts;
  /// Whether p_j was allowed a y^d term (always true for the last part).
  std::vector<bool> has_yd_term;

  BinaryForm reconstruct() const;
  bool is_exact() const;
  /// Free coefficients on the right-hand side: d for a part without y^d, d+1 otherwise.
  int parameter_count() const;
};

/// Unique variant: every leading coefficient met by the recursion must be
/// nonzero (PreconditionError names the level). Relaxed variant: only the x^kd
/// coefficient must be nonzero; a vanishing leading coefficient one level
/// down is repaired by giving the previous part a y^d term.
CanonicalForm canonical_form(const BinaryForm& p, int k, int d, CanonicalVariant variant = CanonicalVariant::unique);

/// p(x) = lambda x^kd + p_0(x)^k + p_1(x)^(k-1) + ... + p_(k-1)(x).
struct UnivariateCanonical {
  int k = 0;
  int d = 0;
  Scalar lambda;
  /// parts[j][i] is the coefficient of x^i in p_j.
  std::vector<std::vector<Scalar>> parts;

  /// Coefficients of the right-hand side, ascending powers, length kd + 1.
  std::vector<Scalar> reconstruct() const;
};

/// coeffs[i] is the coefficient of x^i; degree at most kd.
UnivariateCanonical univariate_canonical(const std::vector<Scalar>& coeffs, int k, int d);

}  // namespace waring

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/decomposition.hpp"
#include "waring/forms.hpp"
#include "waring/matrix.hpp"

namespace waring {

// Variables of the ambient ring T for binary forms of degree d: Y_j stands for
// the monomial x^(d-j) y^j, j = 0..d.

/// Y_j -> x^(d-j) y^j. F must have d + 1 variables; the result has degree k*d.
BinaryForm project(const MultiForm& F, int d);

/// Greedy preimage: each x^i y^(kd-i) is split into k degree-d monomials
/// taking as much x as possible first.
MultiForm lift(const BinaryForm& f, int k, int d);

/// The linear form l_g = sum_j g_j Y_j of a degree-d binary form g.
MultiForm lift_linear(const BinaryForm& g);

/// Basis of the degree-k part of the ideal of the rational normal curve of
/// degree d: 2x2 minors of the Y-catalecticants times degree k-2 monomials,
/// kept in generation order whenever they enlarge the span.
std::vector<MultiForm> veronese_center(int d, int k);

/// sum lambda_j l_{g_j}^k for a certificate f = sum lambda_j g_j^k.
MultiForm lift_decomposition(const Decomposition& dec, int d);

/// Projects a Waring decomposition in T to a k-th power decomposition in x, y.
Decomposition push_down(const Decomposition& fiber_dec, int d);

struct PowerFiber {
  BinaryForm input;
  int k = 1;
  int d = 1;
  MultiForm lift{1, 0};
  std::vector<MultiForm> center;

  /// Throws PreconditionError unless k divides deg f.
  static PowerFiber build(const BinaryForm& f, int k);
  /// F_c = f0 - sum_j c_j E_j
  MultiForm point(const std::vector<Scalar>& c) const;
  std::size_t dimension() const noexcept { return center.size(); }
};

struct FiberPoint {
  std::vector<Scalar> c;
  MultiForm form{1, 0};
};

int fiber_cat_rank(const PowerFiber& fiber, const std::vector<Scalar>& c, int i, double tol = kDefaultRankTol);

/// Waring decomposition of a form in T when it is reachable by the
/// catalecticant method: at most two essential variables (reduced to a binary
/// form and Sylvester), or three variables with a kernel of conics cutting
/// finitely many reduced points. nullopt when neither applies.
std::optional<Decomposition> fiber_waring(const MultiForm& F, double tol = kDefaultRankTol);

/// Common zeros of two ternary conics; nullopt when they share a component.
std::optional<std::vector<std::vector<Scalar>>> intersect_conics(const MultiForm& q1, const MultiForm& q2);

struct KrankOptions {
  /// Fiber points tried (structured lifts, sparse c, then random c).
  int budget = 500;
  std::uint64_t seed = 0;
  /// Damped Gauss-Newton search for r-term decompositions when the fiber
  /// search stays above the generic rank + 1.
  bool numeric_search = true;
  int numeric_starts = 40;
};

struct KrankUpper {
  int bound = 0;
  /// f = sum lambda_j g_j^k with deg g_j = d.
  Decomposition certificate;
  /// A fiber element whose Waring rank is at most bound.
  MultiForm fiber_form{1, 0};
  /// Center coordinates when the certificate came from a point F_c.
  std::vector<Scalar> c;
  /// greedy-lift, monomial-lift, sparse, random, numeric, two-squares, sylvester-power, power
  std::string source;
  /// True when nothing beat the Sylvester fallback.
  bool heuristic = false;
  int points_tried = 0;
};

/// Best k-rank upper bound found within the budget.
KrankUpper krank_upper(const BinaryForm& f, int k, const KrankOptions& opt = {});

enum class Confidence { certified, sampled };
std::string to_string(Confidence c);

struct ProbeStratum {
  std::string name;
  long samples = 0;
  /// Smallest catalecticant rank seen.
  int min_cat_rank = 0;
  /// Lower bound for the Waring rank of every point of the stratum.
  int waring_lower = 0;
  std::vector<MultiForm> kernel;
};

struct ProbeOptions {
  int order = 2;
  long samples = 10000;
  std::uint64_t seed = 0;
  /// Additional fiber elements to include (e.g. KrankUpper::fiber_form).
  std::vector<MultiForm> extra_points;
};

struct KrankLower {
  int bound = 0;
  Confidence confidence = Confidence::sampled;
  std::vector<ProbeStratum> strata;
  std::string note;
};

/// Catalecticant evidence over the fiber. Certified for nonzero forms with
/// bound 1 and for the stratified family a*x*y^7 (and a*x^7*y), k = 4;
/// otherwise the minimum over sampled points, labeled sampled.
KrankLower krank_lower_probe(const BinaryForm& f, int k, const ProbeOptions& opt = {});

}  // namespace waring

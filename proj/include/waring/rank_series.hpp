#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "waring/forms.hpp"

namespace waring {

/// Integer power series known up to t^cutoff.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cutoff);
  TruncatedSeries(std::vector<mpz_class> coeffs);  // NOLINT(google-explicit-constructor)

  int cutoff() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  /// Coefficients of 1/(1-t)^n.
  static TruncatedSeries free_ring(int n, int cutoff);
  /// Product with (1 - t^degree).
  TruncatedSeries times_one_minus(int degree) const;
  /// Zeroes everything from the first non-positive coefficient on.
  TruncatedSeries froeberg_truncated() const;
  std::string str() const;

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

/// Truncation of prod(1 - t^{d_i}) / (1-t)^n at its first non-positive coefficient.
TruncatedSeries froeberg_series(int n, const std::vector<int>& gen_degrees, int cutoff);

/// Same as froeberg_series for s generators of one degree, using the binomial
/// expansion of (1 - t^degree)^s instead of s multiplications.
TruncatedSeries froeberg_series_uniform(int n, int degree, const mpz_class& s, int cutoff);

enum class RankStatus : std::uint8_t { proven, conjectural };
enum class FormulaPath : std::uint8_t { closed_form, series };

struct RankAnswer {
  long value = 0;
  RankStatus status = RankStatus::conjectural;
  /// The value exceeds the parameter count ceil(dim S_kd / dim S_d).
  bool exceptional = false;
  FormulaPath path = FormulaPath::closed_form;
  /// Minimal s with vanishing Froberg coefficient in degree kd.
  long series_value = 0;
  /// Closed form (before any known-exception adjustment) and series agree.
  bool cross_checked = false;
};

std::string to_string(RankStatus s);
std::string to_string(FormulaPath p);

/// Generic k-rank of forms of degree kd in n variables.
RankAnswer generic_k_rank(int n, int k, int d);

/// Minimal s such that the Froberg series for s generators of degree d(k-1)
/// has a zero coefficient in degree kd.
long generic_k_rank_series(int n, int k, int d);

/// Parameter count ceil(C(kd+n-1, n-1) / C(d+n-1, n-1)).
long parameter_count(int n, int k, int d);

/// Codimension of the s-th secant variety of the variety of k-th powers.
mpz_class secant_codim(int n, int k, int d, long s);

/// s_i = min{s : H_i <= 0} for i = d(k-1) .. dk, where H_i are the
/// coefficients of (1 - t^{d(k-1)})^s / (1-t)^n. Throws
/// InternalConsistencyError if the list is not non-increasing.
std::vector<long> si_thresholds(int n, int k, int d);

/// dim [S/I]_j for I generated by the given exact forms, via the exact rank
/// of the degree-j Macaulay matrix.
long macaulay_hilbert(const std::vector<MultiForm>& generators, int j);

/// dim [S/I]_j for I generated by pseudo-random integer forms (coefficients
/// uniform in [-50, 50]) of the given degrees, each raised to powers[i] when
/// powers is nonempty. Two independent draws must agree; on disagreement a
/// third draw is compared against the larger rank, then an error is raised.
long macaulay_hilbert_oracle(int n, const std::vector<int>& gen_degrees, int j, std::uint64_t seed,
                             const std::vector<int>& powers = {});

}  // namespace waring

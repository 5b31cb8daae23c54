#include "waring/rank_series.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "waring/errors.hpp"
#include "waring/matrix.hpp"

namespace waring {

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// C(s, j) for a possibly huge s.
mpz_class binom_big(const mpz_class& s, int j) {
  if (j < 0 || s < j) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(j));
  return r;
}

long ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q.get_si();
}

bool vanishes_at_kd(int n, int k, int d, long s) {
  return froeberg_series_uniform(n, d * (k - 1), mpz_class(s), k * d)[k * d] == 0;
}

// min{s >= 1 : s*B - C(s,2) >= A}, the k = 2 formula.
long k2_formula(int n, int d) {
  mpz_class a = binom(2L * d + n - 1, n - 1);
  mpz_class b = binom(static_cast<long>(d) + n - 1, n - 1);
  for (long s = 1;; ++s) {
    mpz_class lhs = b * s - binom(s, 2);
    if (lhs >= a) return s;
    if (s > 1000000) throw InternalConsistencyError("k = 2 rank formula did not terminate");
  }
}

// Smallest s >= 1 with A - s*B + C(s,2) <= 0.
long quadratic_threshold(const mpz_class& a, const mpz_class& b) {
  // s^2 - (2B+1) s + 2A <= 0
  mpz_class p = 2 * b + 1;
  mpz_class disc = p * p - 8 * a;
  if (disc < 0) throw InternalConsistencyError("H_2d never becomes non-positive");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  mpz_class guess = (p - root) / 2;
  long s = std::max(1L, guess.get_si() - 2);
  auto h = [&](long v) -> mpz_class { return a - b * v + binom(v, 2); };
  while (s > 1 && h(s - 1) <= 0) --s;
  while (h(s) > 0) ++s;
  return s;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int cutoff) {
  if (cutoff < 0) throw PreconditionError("negative cutoff");
  coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, mpz_class(0));
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("a series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::free_ring(int n, int cutoff) {
  TruncatedSeries s(cutoff);
  for (int i = 0; i <= cutoff; ++i) s.coeffs_[static_cast<std::size_t>(i)] = binom(i + n - 1L, n - 1L);
  return s;
}

TruncatedSeries TruncatedSeries::times_one_minus(int degree) const {
  TruncatedSeries out = *this;
  for (int i = cutoff(); i >= degree; --i)
    out.coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - degree)];
  return out;
}

TruncatedSeries TruncatedSeries::froeberg_truncated() const {
  TruncatedSeries out = *this;
  bool cut = false;
  for (auto& c : out.coeffs_) {
    if (!cut && c <= 0) cut = true;
    if (cut) c = 0;
  }
  return out;
}

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? "," : "") << coeffs_[i].get_str();
  return out.str();
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int cutoff = std::min(a.cutoff(), b.cutoff());
  TruncatedSeries out(cutoff);
  for (int i = 0; i <= cutoff; ++i)
    for (int j = 0; i + j <= cutoff; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return out;
}

TruncatedSeries froeberg_series(int n, const std::vector<int>& gen_degrees, int cutoff) {
  if (n < 1) throw PreconditionError("need at least one variable");
  TruncatedSeries s = TruncatedSeries::free_ring(n, cutoff);
  for (int dg : gen_degrees) {
    if (dg < 1) throw PreconditionError("generator degrees must be positive");
    s = s.times_one_minus(dg);
  }
  return s.froeberg_truncated();
}

TruncatedSeries froeberg_series_uniform(int n, int degree, const mpz_class& s, int cutoff) {
  if (n < 1 || degree < 1) throw PreconditionError("invalid series parameters");
  std::vector<mpz_class> c(static_cast<std::size_t>(cutoff) + 1);
  for (int i = 0; i <= cutoff; ++i) {
    mpz_class v = 0;
    for (int j = 0; j * degree <= i; ++j) {
      mpz_class term = binom_big(s, j) * binom(i - static_cast<long>(j) * degree + n - 1, n - 1);
      if (j % 2) v -= term;
      else v += term;
    }
    c[static_cast<std::size_t>(i)] = v;
  }
  return TruncatedSeries(std::move(c)).froeberg_truncated();
}

std::string to_string(RankStatus s) { return s == RankStatus::proven ? "proven" : "conjectural"; }
std::string to_string(FormulaPath p) { return p == FormulaPath::closed_form ? "closed-form" : "series"; }

long parameter_count(int n, int k, int d) {
  return ceil_div(binom(static_cast<long>(k) * d + n - 1, n - 1), binom(static_cast<long>(d) + n - 1, n - 1));
}

long generic_k_rank_series(int n, int k, int d) {
  if (n < 2 || k < 2 || d < 1) throw PreconditionError("generic_k_rank needs n >= 2, k >= 2, d >= 1");
  // Below the parameter count every window coefficient decreases in s, so the
  // scan can start one step below it once that step is shown to be nonzero.
  long s = std::max(1L, parameter_count(n, k, d) - 1);
  if (s > 1 && vanishes_at_kd(n, k, d, s - 1)) s = 1;
  const long cap = s + 100000;
  while (!vanishes_at_kd(n, k, d, s)) {
    if (++s > cap) throw InternalConsistencyError("series rank search did not terminate");
  }
  return s;
}

RankAnswer generic_k_rank(int n, int k, int d) {
  if (n < 2 || k < 2 || d < 1) throw PreconditionError("generic_k_rank needs n >= 2, k >= 2, d >= 1");
  RankAnswer ans;
  ans.series_value = generic_k_rank_series(n, k, d);
  long closed = 0;
  long bump = 0;
  if (n == 2) {
    closed = ceil_div(mpz_class(static_cast<long>(k) * d + 1), mpz_class(d + 1));
    ans.status = RankStatus::proven;
  } else if (d == 1) {
    // Alexander-Hirschowitz.
    closed = k == 2 ? n : ceil_div(binom(n + k - 1L, k), mpz_class(n));
    ans.status = RankStatus::proven;
    if ((n == 3 && k == 4) || (n == 4 && k == 4) || (n == 5 && k == 3) || (n == 5 && k == 4)) bump = 1;
  } else if (k == 2 && n == 3) {
    closed = ceil_div(binom(2L * d + 2, 2), binom(d + 2L, 2)) + ((d == 3 || d == 4) ? 1 : 0);
    ans.status = RankStatus::proven;
  } else if (k == 2 && n == 4) {
    closed = ceil_div(binom(2L * d + 3, 3), binom(d + 3L, 3)) + (d == 2 ? 1 : 0);
    ans.status = RankStatus::proven;
  } else {
    closed = k == 2 ? k2_formula(n, d) : parameter_count(n, k, d);
    ans.status = RankStatus::conjectural;
    ans.path = FormulaPath::series;
  }
  if (closed != ans.series_value)
    throw InternalConsistencyError("closed form (" + std::to_string(closed) + ") and series (" +
                                   std::to_string(ans.series_value) + ") disagree for n=" + std::to_string(n) +
                                   " k=" + std::to_string(k) + " d=" + std::to_string(d));
  ans.cross_checked = true;
  ans.value = closed + bump;
  ans.exceptional = ans.value > parameter_count(n, k, d);
  return ans;
}

mpz_class secant_codim(int n, int k, int d, long s) {
  if (s < 1) throw PreconditionError("secant index must be positive");
  mpz_class hf = froeberg_series_uniform(n, d * (k - 1), mpz_class(s), k * d)[k * d];
  return hf > 0 ? mpz_class(hf - 1) : mpz_class(0);
}

std::vector<long> si_thresholds(int n, int k, int d) {
  if (n < 2 || k < 2 || d < 2) throw PreconditionError("si_thresholds needs n, k, d >= 2");
  const int lo = d * (k - 1);
  const int hi = d * k;
  std::vector<long> out;
  for (int i = lo; i <= hi; ++i) {
    mpz_class a = binom(i + n - 1L, n - 1L);
    mpz_class b = binom(i - lo + n - 1L, n - 1L);
    long s;
    if (k == 2 && i == hi) {
      s = quadratic_threshold(a, b);
    } else {
      s = ceil_div(a, b);
    }
    out.push_back(s);
  }
  for (std::size_t j = 1; j < out.size(); ++j)
    if (out[j] > out[j - 1])
      throw InternalConsistencyError("s_i thresholds increase at i=" + std::to_string(lo + static_cast<int>(j)));
  return out;
}

long macaulay_hilbert(const std::vector<MultiForm>& generators, int j) {
  if (generators.empty()) throw PreconditionError("macaulay_hilbert needs the variable count from a generator");
  const int n = generators.front().num_vars();
  const auto target = monomials(n, j);
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : generators) {
    if (!g.is_exact()) throw PreconditionError("Macaulay matrix needs exact generators");
    if (g.num_vars() != n) throw PreconditionError("generators live in different rings");
    if (g.degree() > j || g.is_zero()) continue;
    mpz_class l(1);
    for (const auto& [e, c] : g.terms()) {
      if (!c.is_real()) throw PreconditionError("Macaulay matrix needs real rational generators");
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.real().get_den_mpz_t());
    }
    for (const auto& m : monomials(n, j - g.degree())) {
      std::vector<mpz_class> row(target.size());
      for (const auto& [e, c] : g.terms()) {
        Exponent sum(e);
        for (int v = 0; v < n; ++v) sum[static_cast<std::size_t>(v)] += m[static_cast<std::size_t>(v)];
        mpq_class scaled = c.real() * l;
        row[monomial_index(sum)] = scaled.get_num();
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(target.size()) - integer_rank(std::move(rows));
}

namespace {

std::vector<MultiForm> random_generators(int n, const std::vector<int>& degrees, const std::vector<int>& powers,
                                         std::uint64_t seed, std::uint64_t draw) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(draw)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::vector<MultiForm> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    MultiForm g(n, degrees[i]);
    for (const auto& e : monomials(n, degrees[i])) g.add_term(e, Scalar(coef(rng)));
    if (!powers.empty()) g = g.pow(powers[i]);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

long macaulay_hilbert_oracle(int n, const std::vector<int>& gen_degrees, int j, std::uint64_t seed,
                             const std::vector<int>& powers) {
  if (n < 1 || j < 0) throw PreconditionError("invalid oracle parameters");
  if (!powers.empty() && powers.size() != gen_degrees.size())
    throw PreconditionError("powers must match the generator list");
  const long full = static_cast<long>(binom(j + n - 1L, n - 1L).get_si());
  if (gen_degrees.empty()) return full;
  std::vector<int> eff(gen_degrees);
  if (!powers.empty())
    for (std::size_t i = 0; i < eff.size(); ++i) eff[i] *= powers[i];
  if (std::all_of(eff.begin(), eff.end(), [j](int v) { return v > j; })) return full;
  long h1 = macaulay_hilbert(random_generators(n, gen_degrees, powers, seed, 0), j);
  long h2 = macaulay_hilbert(random_generators(n, gen_degrees, powers, seed, 1), j);
  if (h1 == h2) return h1;
  long best = std::min(h1, h2);  // larger rank means smaller quotient
  long h3 = macaulay_hilbert(random_generators(n, gen_degrees, powers, seed, 2), j);
  if (h3 == best) return best;
  throw InternalConsistencyError("random draws disagree on the Hilbert function; genericity not reached");
}

}  // namespace waring

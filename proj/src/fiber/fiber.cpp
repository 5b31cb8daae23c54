#include "waring/fiber.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "waring/apolarity.hpp"
#include "waring/errors.hpp"
#include "waring/rank_series.hpp"
#include "waring/roots.hpp"
#include "waring/structured.hpp"

namespace waring {

namespace {

Scalar::Mode common_mode(std::initializer_list<Scalar::Mode> modes) {
  for (auto m : modes)
    if (m == Scalar::Mode::floating) return m;
  return Scalar::Mode::exact;
}

// Integer primitive vector with a positive first nonzero entry (exact), unit
// length (floating).
std::vector<Scalar> normalize_point(std::vector<Scalar> p) {
  if (!p.front().is_exact()) {
    double n = 0;
    for (const auto& v : p) n += std::norm(v.to_complex());
    n = std::sqrt(n);
    // Rotate so that the largest entry is real positive.
    std::size_t big = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
      if (p[i].abs() > p[big].abs()) big = i;
    const std::complex<double> phase = std::conj(p[big].to_complex()) / std::abs(p[big].to_complex());
    for (auto& v : p) v = Scalar::floating(v.to_complex() * phase / n);
    return p;
  }
  mpz_class den = 1;
  for (const auto& v : p) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.real().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.imag().get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& v : p) {
    mpz_class re = mpz_class(v.real() * den), im = mpz_class(v.imag() * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  if (g == 0) return p;
  Scalar scale(mpq_class(den, g));
  for (const auto& v : p) {
    if (v.is_zero()) continue;
    if (v.real() < 0 || (v.real() == 0 && v.imag() < 0)) scale = -scale;
    break;
  }
  for (auto& v : p) v = v * scale;
  return p;
}

bool vanishes_at(const MultiForm& q, const std::vector<Scalar>& p) {
  const Scalar::Mode m = common_mode({q.mode(), p.front().mode()});
  std::vector<Scalar> pt;
  double pn = 0;
  for (const auto& v : p) {
    pt.push_back(v.promoted_if(m));
    pn += std::norm(v.to_complex());
  }
  const Scalar val = q.promoted_if(m).eval(pt);
  if (m == Scalar::Mode::exact) return val.is_zero();
  return val.abs() <= 1e-7 * std::max(q.norm(), 1e-300) * std::max(std::pow(pn, q.degree() / 2.0), 1e-300);
}

bool same_point(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  // Proportional iff all 2x2 minors vanish.
  double scale = 0;
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max({scale, a[i].abs(), b[i].abs()});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      std::complex<double> m = a[i].to_complex() * b[j].to_complex() - a[j].to_complex() * b[i].to_complex();
      if (a[i].is_exact() && b[i].is_exact()) {
        if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
      } else if (std::abs(m) > 1e-7 * scale * scale) {
        return false;
      }
    }
  return true;
}

// Rows of m that span its row space, picked greedily.
std::vector<std::vector<Scalar>> row_basis(const ScalarMatrix& m, double tol) {
  std::vector<std::vector<Scalar>> basis;
  for (int i = 0; i < m.rows(); ++i) {
    auto trial = basis;
    trial.push_back(m.row(i));
    if (num_rank(ScalarMatrix::from_rows(trial), tol) > static_cast<int>(basis.size())) basis = std::move(trial);
  }
  return basis;
}

// F in at most two essential variables: rewrite as a binary form and run Sylvester.
std::optional<Decomposition> essential_binary(const MultiForm& F, const std::vector<std::vector<Scalar>>& L,
                                              double tol) {
  const int m = F.num_vars();
  const int D = F.degree();
  const Scalar::Mode mode = F.mode();
  std::vector<std::vector<Scalar>> M = L;
  for (int j = 0; j < m && static_cast<int>(M.size()) < m; ++j) {
    std::vector<Scalar> e(static_cast<std::size_t>(m), Scalar::zero(mode));
    e[static_cast<std::size_t>(j)] = Scalar::one(mode);
    auto trial = M;
    trial.push_back(e);
    if (num_rank(ScalarMatrix::from_rows(trial), tol) == static_cast<int>(trial.size())) M = std::move(trial);
  }
  LinearSubstitution inv = LinearSubstitution(M).inverse();
  MultiForm G = F.substitute(inv);
  const int r = static_cast<int>(L.size());
  std::vector<Scalar> coeffs(static_cast<std::size_t>(D) + 1, Scalar::zero(mode));
  for (const auto& [e, c] : G.terms()) {
    bool inside = true;
    for (int j = r; j < m; ++j) inside = inside && e[static_cast<std::size_t>(j)] == 0;
    if (!inside) {
      if (mode == Scalar::Mode::exact || c.abs() > 1e-9 * std::max(G.norm(), 1e-300)) return std::nullopt;
      continue;
    }
    coeffs[static_cast<std::size_t>(r == 1 ? 0 : e[1])] = c;
  }
  Decomposition out;
  out.method = "fiber-binary";
  if (r == 1) {
    out.terms.push_back({coeffs[0], MultiForm::linear(L[0]), D});
    return out;
  }
  Decomposition bin;
  try {
    bin = sylvester_decompose(BinaryForm(coeffs));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  for (const auto& t : bin.terms) {
    const Scalar::Mode tm = common_mode({t.base.mode(), mode});
    const Scalar a = t.base.coeff({1, 0}).promoted_if(tm), b = t.base.coeff({0, 1}).promoted_if(tm);
    std::vector<Scalar> lin;
    for (int j = 0; j < m; ++j)
      lin.push_back(a * L[0][static_cast<std::size_t>(j)].promoted_if(tm) + b * L[1][static_cast<std::size_t>(j)].promoted_if(tm));
    out.terms.push_back({t.lambda.promoted_if(tm), MultiForm::linear(lin), D});
  }
  return out;
}

// F = sum lambda_p (p . Y)^D over the given points, if such lambdas exist.
std::optional<Decomposition> solve_on_points(const MultiForm& F, const std::vector<std::vector<Scalar>>& pts) {
  Scalar::Mode mode = F.mode();
  for (const auto& p : pts) mode = common_mode({mode, p.front().mode()});
  const int D = F.degree();
  const auto mons = monomials(F.num_vars(), D);
  ScalarMatrix a(static_cast<int>(mons.size()), static_cast<int>(pts.size()), mode);
  std::vector<MultiForm> bases;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::vector<Scalar> lin;
    for (const auto& v : normalize_point(pts[j])) lin.push_back(v.promoted_if(mode));
    bases.push_back(MultiForm::linear(lin));
    MultiForm pw = bases.back().pow(D);
    for (const auto& [e, c] : pw.terms()) a.set(static_cast<int>(monomial_index(e)), static_cast<int>(j), c);
  }
  const MultiForm target = F.promoted_if(mode);
  std::vector<Scalar> rhs;
  for (const auto& e : mons) rhs.push_back(target.coeff(e));
  std::vector<Scalar> lambda;
  try {
    lambda = solve(a, rhs);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  Decomposition dec;
  dec.method = "catalecticant-conics";
  double lmax = 0;
  for (const auto& l : lambda) lmax = std::max(lmax, l.abs());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Scalar& l = lambda[j];
    if (l.is_exact() ? l.is_zero() : l.abs() <= 1e-12 * lmax) continue;
    dec.terms.push_back({l, bases[j], D});
  }
  if (dec.terms.empty() || !dec.verify(target)) return std::nullopt;
  return dec;
}

std::optional<Decomposition> conic_method(const MultiForm& F, double tol) {
  if (F.num_vars() != 3 || F.degree() < 2) return std::nullopt;
  auto K = catalecticant(F, 2).kernel_forms(tol);
  if (K.size() < 2) return std::nullopt;
  std::vector<std::pair<MultiForm, MultiForm>> pairs{{K[0], K[1]}};
  if (K.size() > 2) {
    pairs.emplace_back(K[0] + K[2], K[1] - K[2]);
    pairs.emplace_back(K[1], K[2]);
  }
  for (const auto& [q1, q2] : pairs) {
    if (q1.is_zero() || q2.is_zero()) continue;
    auto pts = intersect_conics(q1, q2);
    if (!pts) continue;
    std::vector<std::vector<Scalar>> keep;
    for (const auto& p : *pts) {
      bool ok = std::all_of(K.begin(), K.end(), [&](const MultiForm& q) { return vanishes_at(q, p); });
      if (ok) keep.push_back(p);
    }
    if (keep.empty()) continue;
    if (auto dec = solve_on_points(F, keep)) return dec;
  }
  return std::nullopt;
}

// Quadratic A t^2 + B t + C in t as a binary form in (t : 1).
BinaryForm quadratic_in_t(const Scalar& a, const Scalar& b, const Scalar& c) { return BinaryForm({a, b, c}); }

}  // namespace

BinaryForm project(const MultiForm& F, int d) {
  if (d < 1 || F.num_vars() != d + 1)
    throw PreconditionError("projection needs " + std::to_string(d + 1) + " variables, got " +
                            std::to_string(F.num_vars()));
  std::vector<MultiForm> images;
  for (int j = 0; j <= d; ++j) images.push_back(MultiForm::monomial({d - j, j}).promoted_if(F.mode()));
  return BinaryForm::from_multi(F.substitute(images));
}

MultiForm lift(const BinaryForm& f, int k, int d) {
  if (k < 1 || d < 1 || f.degree() != k * d) throw PreconditionError("lift needs deg f = k*d");
  MultiForm out(d + 1, k, f.mode());
  const int n = k * d;
  for (int j = 0; j <= n; ++j) {
    if (f[j].is_zero()) continue;
    int xr = n - j;
    Exponent e(static_cast<std::size_t>(d) + 1, 0);
    for (int t = 0; t < k; ++t) {
      const int xe = std::min(d, xr);
      xr -= xe;
      ++e[static_cast<std::size_t>(d - xe)];
    }
    out.add_term(e, f[j]);
  }
  return out;
}

MultiForm lift_linear(const BinaryForm& g) {
  return MultiForm::linear(std::vector<Scalar>(g.coeffs().begin(), g.coeffs().end()));
}

std::vector<MultiForm> veronese_center(int d, int k) {
  std::vector<MultiForm> out;
  if (d < 2 || k < 2) return out;
  const int nv = d + 1;
  auto Y = [&](int j) { return MultiForm::variable(nv, j); };
  std::vector<MultiForm> minors;
  for (int i = 1; i < d; ++i)
    for (int a = 0; a <= i; ++a)
      for (int a2 = a + 1; a2 <= i; ++a2)
        for (int b = 0; b <= d - i; ++b)
          for (int b2 = b + 1; b2 <= d - i; ++b2) {
            MultiForm m = Y(a + b) * Y(a2 + b2) - Y(a + b2) * Y(a2 + b);
            if (m.is_zero()) continue;
            bool seen = std::any_of(minors.begin(), minors.end(),
                                    [&](const MultiForm& o) { return o == m || o == -m; });
            if (!seen) minors.push_back(m);
          }
  const auto target = monomials(nv, k);
  const auto cofactors = monomials(nv, k - 2);
  // Incremental echelon form over the rationals.
  std::vector<std::pair<std::size_t, std::vector<mpq_class>>> echelon;
  for (const auto& m : minors)
    for (const auto& e : cofactors) {
      MultiForm cand = m * MultiForm::monomial(e);
      std::vector<mpq_class> v(target.size(), mpq_class(0));
      for (const auto& [ex, c] : cand.terms()) v[monomial_index(ex)] = c.real();
      for (const auto& [p, row] : echelon) {
        if (v[p] == 0) continue;
        const mpq_class f = v[p];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * row[t];
      }
      auto piv = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
      if (piv == v.end()) continue;
      const std::size_t p = static_cast<std::size_t>(piv - v.begin());
      const mpq_class lead = v[p];
      for (auto& x : v) x /= lead;
      echelon.emplace_back(p, std::move(v));
      out.push_back(std::move(cand));
    }
  return out;
}

MultiForm lift_decomposition(const Decomposition& dec, int d) {
  Scalar::Mode mode = Scalar::Mode::exact;
  for (const auto& t : dec.terms) mode = common_mode({mode, t.lambda.mode(), t.base.mode()});
  const int k = dec.terms.empty() ? 1 : dec.terms.front().exponent;
  MultiForm out(d + 1, k, mode);
  for (const auto& t : dec.terms)
    out += lift_linear(BinaryForm::from_multi(t.base.promoted_if(mode))).pow(t.exponent).scaled(t.lambda.promoted_if(mode));
  return out;
}

Decomposition push_down(const Decomposition& fiber_dec, int d) {
  Decomposition out;
  out.method = fiber_dec.method;
  out.heuristic = fiber_dec.heuristic;
  for (const auto& t : fiber_dec.terms) out.terms.push_back({t.lambda, project(t.base, d).to_multi(), t.exponent});
  return out;
}

PowerFiber PowerFiber::build(const BinaryForm& f, int k) {
  if (k < 1 || f.degree() < 1 || f.degree() % k != 0)
    throw PreconditionError("k = " + std::to_string(k) + " must divide the degree " + std::to_string(f.degree()));
  PowerFiber fib;
  fib.input = f;
  fib.k = k;
  fib.d = f.degree() / k;
  fib.lift = waring::lift(f, k, fib.d);
  for (const auto& e : veronese_center(fib.d, k)) fib.center.push_back(e.promoted_if(f.mode()));
  return fib;
}

MultiForm PowerFiber::point(const std::vector<Scalar>& c) const {
  if (c.size() != center.size())
    throw PreconditionError("fiber point needs " + std::to_string(center.size()) + " coordinates");
  Scalar::Mode mode = lift.mode();
  for (const auto& v : c) mode = common_mode({mode, v.mode()});
  MultiForm F = lift.promoted_if(mode);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) F -= center[j].promoted_if(mode).scaled(c[j].promoted_if(mode));
  return F;
}

int fiber_cat_rank(const PowerFiber& fiber, const std::vector<Scalar>& c, int i, double tol) {
  return catalecticant(fiber.point(c), i).rank(tol);
}

std::optional<std::vector<std::vector<Scalar>>> intersect_conics(const MultiForm& q1, const MultiForm& q2) {
  if (q1.num_vars() != 3 || q2.num_vars() != 3 || q1.degree() != 2 || q2.degree() != 2)
    throw PreconditionError("intersect_conics needs two ternary quadrics");
  const Scalar::Mode mode = common_mode({q1.mode(), q2.mode()});
  // Images of (1:0:0) under the trial coordinate changes.
  static const int shifts[][3] = {{1, 0, 0}, {1, 2, 3}, {1, -1, 2}, {2, 3, -1}, {1, 3, -2}, {3, -2, 5}};
  for (const auto& s : shifts) {
    const auto sc = [&](long v) { return Scalar(v).promoted_if(mode); };
    LinearSubstitution S({{sc(s[0]), sc(0), sc(0)}, {sc(s[1]), sc(1), sc(0)}, {sc(s[2]), sc(0), sc(1)}});
    const MultiForm Q1 = q1.promoted_if(mode).substitute(S), Q2 = q2.promoted_if(mode).substitute(S);
    const Scalar A1 = Q1.coeff({2, 0, 0}), A2 = Q2.coeff({2, 0, 0});
    if (A1.is_zero() || A2.is_zero()) continue;
    const BinaryForm B1({Q1.coeff({1, 1, 0}), Q1.coeff({1, 0, 1})}), B2({Q2.coeff({1, 1, 0}), Q2.coeff({1, 0, 1})});
    const BinaryForm C1({Q1.coeff({0, 2, 0}), Q1.coeff({0, 1, 1}), Q1.coeff({0, 0, 2})});
    const BinaryForm C2({Q2.coeff({0, 2, 0}), Q2.coeff({0, 1, 1}), Q2.coeff({0, 0, 2})});
    const BinaryForm u = A1 * C2 - A2 * C1;
    const BinaryForm v = A1 * B2 - A2 * B1;
    const BinaryForm w = B1 * C2 - B2 * C1;
    const BinaryForm R = u * u - v * w;
    const double scale = std::max(q1.norm() * q2.norm(), 1e-300);
    if (R.is_exact() ? R.is_zero() : R.norm() <= 1e-12 * scale * scale) return std::nullopt;

    std::vector<std::vector<Scalar>> pts;
    for (const auto& root : roots(R).roots) {
      const Scalar::Mode m = common_mode({mode, root.x.mode()});
      const Scalar rx = root.x.promoted_if(m), ry = root.y.promoted_if(m);
      const BinaryForm p1 = quadratic_in_t(A1.promoted_if(m), B1.promoted_if(m).eval(rx, ry), C1.promoted_if(m).eval(rx, ry));
      const BinaryForm p2 = quadratic_in_t(A2.promoted_if(m), B2.promoted_if(m).eval(rx, ry), C2.promoted_if(m).eval(rx, ry));
      std::vector<Scalar> ts;
      if (m == Scalar::Mode::exact) {
        const BinaryForm g = form_gcd(p1, p2);
        if (g.degree() < 1) continue;
        for (const auto& tr : roots(g).roots)
          if (!tr.y.is_zero()) ts.push_back((tr.x / tr.y).promoted_if(roots(g).exact ? m : Scalar::Mode::floating));
      } else {
        const double s2 = std::max(p2.norm(), 1e-300);
        for (const auto& tr : roots(p1).roots) {
          if (tr.y.abs() < 1e-14) continue;
          const Scalar t = tr.x.promoted() / tr.y.promoted();
          if (p2.eval(t, Scalar::floating(1.0)).abs() <= 1e-6 * s2 * std::max(1.0, std::norm(t.to_complex())))
            ts.push_back(t);
        }
      }
      for (const auto& t : ts) {
        const Scalar::Mode pm = common_mode({m, t.mode()});
        const Scalar tt = t.promoted_if(pm);
        std::vector<Scalar> p{sc(s[0]).promoted_if(pm) * tt, sc(s[1]).promoted_if(pm) * tt + rx.promoted_if(pm),
                              sc(s[2]).promoted_if(pm) * tt + ry.promoted_if(pm)};
        p = normalize_point(p);
        bool dup = std::any_of(pts.begin(), pts.end(), [&](const auto& o) { return same_point(o, p); });
        if (!dup) pts.push_back(p);
      }
    }
    return pts;
  }
  return std::nullopt;
}

std::optional<Decomposition> fiber_waring(const MultiForm& F, double tol) {
  if (F.is_zero()) return std::nullopt;
  const int D = F.degree();
  if (D == 0) return std::nullopt;
  if (D == 1) {
    Decomposition dec;
    dec.method = "fiber-binary";
    std::vector<Scalar> lin;
    for (int j = 0; j < F.num_vars(); ++j) {
      Exponent e(static_cast<std::size_t>(F.num_vars()), 0);
      e[static_cast<std::size_t>(j)] = 1;
      lin.push_back(F.coeff(e));
    }
    dec.terms.push_back({Scalar::one(F.mode()), MultiForm::linear(lin), 1});
    return dec;
  }
  const auto L = row_basis(catalecticant(F, D - 1).matrix, tol);
  try {
    if (L.size() <= 2) return essential_binary(F, L, tol);
    if (L.size() == 3 && F.num_vars() == 3) return conic_method(F, tol);
  } catch (const AmbiguityError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

using cvec = std::vector<std::complex<double>>;

cvec poly_mul(const cvec& a, const cvec& b) {
  cvec out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

cvec poly_pow(const cvec& a, int e) {
  cvec out{1.0};
  for (int t = 0; t < e; ++t) out = poly_mul(out, a);
  return out;
}

// Damped Gauss-Newton on sum_j g_j^k = f (f scaled to unit norm).
std::optional<std::vector<cvec>> newton_powers(const cvec& target, int k, int d, int r, std::mt19937_64& rng,
                                               int starts) {
  const int N = static_cast<int>(target.size());
  const int n = r * (d + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double amp = std::pow(1.0 / r, 1.0 / k) / std::sqrt(static_cast<double>(d + 1));
  auto residual = [&](const std::vector<cvec>& g) {
    cvec res(target.begin(), target.end());
    for (auto& v : res) v = -v;
    for (const auto& gj : g) {
      cvec p = poly_pow(gj, k);
      for (int i = 0; i < N; ++i) res[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
    }
    return res;
  };
  auto norm_of = [](const cvec& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
  };
  for (int s = 0; s < starts; ++s) {
    std::vector<cvec> g(static_cast<std::size_t>(r), cvec(static_cast<std::size_t>(d) + 1));
    for (auto& gj : g)
      for (auto& c : gj) c = amp * std::complex<double>(gauss(rng), gauss(rng));
    cvec res = residual(g);
    double rn = norm_of(res);
    for (int it = 0; it < 200 && rn > 1e-14; ++it) {
      Eigen::MatrixXcd J(N, n);
      J.setZero();
      for (int j = 0; j < r; ++j) {
        cvec p = poly_pow(g[static_cast<std::size_t>(j)], k - 1);
        for (int t = 0; t <= d; ++t)
          for (std::size_t i = 0; i < p.size(); ++i) J(static_cast<int>(i) + t, j * (d + 1) + t) = static_cast<double>(k) * p[i];
      }
      Eigen::VectorXcd rhs(N);
      for (int i = 0; i < N; ++i) rhs(i) = -res[static_cast<std::size_t>(i)];
      Eigen::VectorXcd step = J.completeOrthogonalDecomposition().solve(rhs);
      double alpha = 1.0;
      bool moved = false;
      while (alpha > 1e-6) {
        std::vector<cvec> trial = g;
        for (int j = 0; j < r; ++j)
          for (int t = 0; t <= d; ++t) trial[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] += alpha * step(j * (d + 1) + t);
        cvec tres = residual(trial);
        const double tn = norm_of(tres);
        if (tn < rn) {
          g = std::move(trial);
          res = std::move(tres);
          rn = tn;
          moved = true;
          break;
        }
        alpha /= 2;
      }
      if (!moved) break;
    }
    if (rn <= 1e-12) return g;
  }
  return std::nullopt;
}

}  // namespace

KrankUpper krank_upper(const BinaryForm& f, int k, const KrankOptions& opt) {
  if (f.is_zero()) throw PreconditionError("cannot bound the k-rank of the zero form");
  if (k < 1 || f.degree() < 1 || f.degree() % k != 0)
    throw PreconditionError("k = " + std::to_string(k) + " must divide the degree " + std::to_string(f.degree()));
  const int d = f.degree() / k;
  const MultiForm target = f.to_multi();
  KrankUpper best;
  best.bound = INT_MAX;
  auto consider = [&](Decomposition cert, const std::string& source, const std::vector<Scalar>& c,
                      const std::optional<MultiForm>& Fy) {
    if (static_cast<int>(cert.size()) >= best.bound) return;
    if (!cert.verify(target)) return;
    best.bound = static_cast<int>(cert.size());
    best.certificate = std::move(cert);
    best.source = source;
    best.c = c;
    best.fiber_form = Fy ? *Fy : lift_decomposition(best.certificate, d);
  };

  if (k == 1) {
    Decomposition dec;
    dec.method = "power";
    dec.terms.push_back({Scalar::one(f.mode()), target, 1});
    consider(dec, "power", {}, std::nullopt);
    return best;
  }

  // Fallback: every l^(kd) is the k-th power of l^d.
  {
    Decomposition syl = sylvester_decompose(f);
    Decomposition dec;
    dec.method = "sylvester-power";
    for (const auto& t : syl.terms) dec.terms.push_back({t.lambda, BinaryForm::from_multi(t.base).pow(d).to_multi(), k});
    consider(dec, d == 1 ? "sylvester" : "sylvester-power", {}, std::nullopt);
  }
  if (d == 1) return best;

  if (k == 2) {
    TwoSquares ts = two_squares(f);
    Decomposition dec;
    dec.method = "two-squares";
    const Scalar one = Scalar::one(ts.g1.mode());
    if (!ts.g1.is_zero()) dec.terms.push_back({one, ts.g1.to_multi(), 2});
    if (!ts.g2.is_zero()) dec.terms.push_back({one, ts.g2.to_multi(), 2});
    consider(dec, "two-squares", {}, std::nullopt);
  }

  const PowerFiber fib = PowerFiber::build(f, k);
  const int dim = static_cast<int>(fib.dimension());
  const int probe_order = std::max(1, k / 2);
  int tried = 0;
  auto attempt = [&](const MultiForm& F, const std::string& source, const std::vector<Scalar>& c) {
    ++tried;
    if (best.bound <= 1) return;
    if (catalecticant(F, probe_order).rank() >= best.bound) return;
    auto dec = fiber_waring(F);
    if (!dec) return;
    consider(push_down(*dec, d), source, c, F);
  };

  std::vector<Scalar> zero(static_cast<std::size_t>(dim), Scalar(0));
  attempt(fib.lift, "greedy-lift", zero);

  // Monomial input: the lift Y_m1 Y_m2^(k-1) of a factorization m1 m2^(k-1).
  int nonzero = 0, where = 0;
  for (int j = 0; j <= f.degree(); ++j)
    if (!f[j].is_zero()) {
      ++nonzero;
      where = j;
    }
  if (nonzero == 1 && tried < opt.budget) {
    try {
      auto fac = monomial_k_factor({f.degree() - where, where}, k);
      Exponent e(static_cast<std::size_t>(d) + 1, 0);
      ++e[static_cast<std::size_t>(fac.m1[1])];
      e[static_cast<std::size_t>(fac.m2[1])] += k - 1;
      attempt(MultiForm::monomial(e, f[where]), "monomial-lift", {});
    } catch (const PreconditionError&) {
    }
  }

  static const std::pair<long, long> values[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}};
  for (int i = 0; i < dim && tried < opt.budget; ++i)
    for (const auto& [num, den] : values) {
      if (tried >= opt.budget) break;
      auto c = zero;
      c[static_cast<std::size_t>(i)] = Scalar::rational(num, den);
      attempt(fib.point(c), "sparse", c);
    }
  for (int i = 0; i < dim && tried < opt.budget; ++i)
    for (int j = i + 1; j < dim && tried < opt.budget; ++j)
      for (const auto& [n1, d1] : values)
        for (const auto& [n2, d2] : values) {
          if (tried >= opt.budget) break;
          auto c = zero;
          c[static_cast<std::size_t>(i)] = Scalar::rational(n1, d1);
          c[static_cast<std::size_t>(j)] = Scalar::rational(n2, d2);
          attempt(fib.point(c), "sparse", c);
        }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> small(-3, 3);
  while (tried < opt.budget && dim > 0 && best.bound > 1) {
    auto c = zero;
    for (auto& v : c) v = Scalar(small(rng));
    attempt(fib.point(c), "random", c);
  }
  if (dim == 0) tried = std::max(tried, 1);
  best.points_tried = tried;

  const long generic = generic_k_rank(2, k, d).value;
  if (opt.numeric_search && best.bound > generic + 1) {
    const double scale = f.norm();
    std::vector<std::complex<double>> t;
    for (const auto& c : f.coeffs()) t.push_back(c.to_complex() / scale);
    std::mt19937_64 nrng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int r = static_cast<int>(std::max(1L, generic)); r < best.bound; ++r) {
      auto g = newton_powers(t, k, d, r, nrng, opt.numeric_starts);
      if (!g) continue;
      Decomposition dec;
      dec.method = "gauss-newton";
      const std::complex<double> root = std::pow(std::complex<double>(scale, 0.0), 1.0 / k);
      for (const auto& gj : *g) {
        std::vector<Scalar> coeffs;
        for (const auto& c : gj) coeffs.push_back(Scalar::floating(c * root));
        dec.terms.push_back({Scalar::floating(1.0), BinaryForm(coeffs).to_multi(), k});
      }
      consider(dec, "numeric", {}, std::nullopt);
      break;
    }
  }
  best.heuristic = best.source == "sylvester-power";
  best.certificate.heuristic = best.heuristic;
  return best;
}

std::string to_string(Confidence c) { return c == Confidence::certified ? "certified" : "sampled"; }

namespace {

// Kernel of the degree-2 catalecticant on the c0 = .. = c4 = 0 stratum of the
// x y^7 fiber: y0^2, y0 y1, 2 y0 y2 + 3 y1^2 in the dual variables.
std::vector<MultiForm> xy7_stratum_kernel() {
  MultiForm q1 = MultiForm::monomial({2, 0, 0});
  MultiForm q2 = MultiForm::monomial({1, 1, 0});
  MultiForm q3 = MultiForm::monomial({1, 0, 1}, Scalar(2)) + MultiForm::monomial({0, 2, 0}, Scalar(3));
  return {q1, q2, q3};
}

bool same_span(const std::vector<MultiForm>& a, const std::vector<MultiForm>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const auto mons = monomials(a.front().num_vars(), a.front().degree());
  auto rank_of = [&](const std::vector<MultiForm>& forms) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& f : forms) {
      std::vector<Scalar> r;
      for (const auto& e : mons) r.push_back(f.coeff(e));
      rows.push_back(std::move(r));
    }
    return num_rank(ScalarMatrix::from_rows(rows));
  };
  std::vector<MultiForm> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = rank_of(a), rb = rank_of(b);
  return ra == rb && rank_of(both) == ra;
}

Scalar random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  long n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Scalar::rational(n, den(rng));
}

std::optional<KrankLower> xy7_probe(const BinaryForm& f, const ProbeOptions& opt) {
  // a x y^7, or a x^7 y after swapping the variables.
  BinaryForm g = f;
  int nonzero = 0;
  for (int j = 0; j <= 8; ++j) nonzero += f[j].is_zero() ? 0 : 1;
  if (nonzero != 1 || !f.is_exact()) return std::nullopt;
  if (!f[1].is_zero()) g = f.substitute(LinearSubstitution::swap());
  if (g[7].is_zero()) return std::nullopt;

  const PowerFiber fib = PowerFiber::build(g, 4);
  KrankLower out;
  out.confidence = Confidence::certified;
  std::mt19937_64 rng(opt.seed);

  ProbeStratum gen{"c0..c4 not all zero", 0, INT_MAX, 0, {}};
  std::uniform_int_distribution<int> mask_dist(1, 31);
  for (long s = 0; s < opt.samples; ++s) {
    std::vector<Scalar> c(6, Scalar(0));
    const int mask = mask_dist(rng);
    for (int i = 0; i < 5; ++i)
      if (mask & (1 << i)) c[static_cast<std::size_t>(i)] = random_rational(rng, true);
    c[5] = random_rational(rng, false);
    gen.min_cat_rank = std::min(gen.min_cat_rank, fiber_cat_rank(fib, c, 2));
    ++gen.samples;
  }
  // The 4x4 minors cut exactly c0 = .. = c4 = 0, so the sampled minimum is
  // the rank bound on the whole stratum once it is at least 4.
  gen.waring_lower = std::min(gen.min_cat_rank, 4);
  if (gen.min_cat_rank < 4) {
    out.confidence = Confidence::sampled;
    out.note = "a point with some c0..c4 != 0 has catalecticant rank below 4";
  }

  ProbeStratum c5{"c0..c4 = 0, c5 != 0", 0, INT_MAX, 7, {}};
  const std::vector<MultiForm> expected = xy7_stratum_kernel();
  for (const Scalar& v : {Scalar(1), Scalar(-1), Scalar::rational(2, 3), Scalar(5), random_rational(rng, true)}) {
    std::vector<Scalar> c(6, Scalar(0));
    c[5] = v;
    const Catalecticant cat = catalecticant(fib.point(c), 2);
    c5.min_cat_rank = std::min(c5.min_cat_rank, cat.rank());
    auto ker = cat.kernel_forms();
    if (c5.kernel.empty()) c5.kernel = ker;
    if (cat.rank() != 3 || !same_span(ker, expected)) {
      out.confidence = Confidence::sampled;
      out.note = "the c5 stratum does not have the expected kernel";
    }
    ++c5.samples;
  }
  // A quartic whose quadratic apolar part cuts a curvilinear length-3 scheme
  // supported at one point has Waring rank 7.
  c5.waring_lower = 7;

  ProbeStratum zero{"c = 0", 1, 0, 0, {}};
  const MultiForm M0 = fib.lift;
  zero.min_cat_rank = catalecticant(M0, 2).rank();
  auto dec = fiber_waring(M0);
  zero.waring_lower = dec ? static_cast<int>(dec->size()) : zero.min_cat_rank;

  out.bound = std::min({gen.waring_lower, c5.waring_lower, zero.waring_lower});
  out.strata = {gen, c5, zero};
  if (out.note.empty()) out.note = "stratified probe of the x y^7 fiber";
  return out;
}

}  // namespace

KrankLower krank_lower_probe(const BinaryForm& f, int k, const ProbeOptions& opt) {
  if (f.is_zero()) throw PreconditionError("cannot bound the k-rank of the zero form");
  if (k < 1 || f.degree() < 1 || f.degree() % k != 0)
    throw PreconditionError("k = " + std::to_string(k) + " must divide the degree " + std::to_string(f.degree()));
  if (k == 4 && f.degree() == 8 && opt.order == 2)
    if (auto r = xy7_probe(f, opt)) return *r;

  const PowerFiber fib = PowerFiber::build(f, k);
  const int dim = static_cast<int>(fib.dimension());
  const int i = std::min(opt.order, k);
  KrankLower out;
  ProbeStratum s{"sampled fiber points", 0, INT_MAX, 0, {}};
  auto look = [&](const MultiForm& F) {
    s.min_cat_rank = std::min(s.min_cat_rank, catalecticant(F, i).rank());
    ++s.samples;
  };
  look(fib.lift);
  std::mt19937_64 rng(opt.seed);
  for (long t = 0; t < opt.samples && dim > 0; ++t) {
    std::vector<Scalar> c(static_cast<std::size_t>(dim), Scalar(0));
    // Alternate sparse and dense draws.
    if (t % 2 == 0) {
      std::uniform_int_distribution<int> pos(0, dim - 1);
      c[static_cast<std::size_t>(pos(rng))] = random_rational(rng, true);
    } else {
      for (auto& v : c) v = random_rational(rng, false);
    }
    look(fib.point(c));
  }
  for (const auto& F : opt.extra_points) look(F);
  s.waring_lower = std::max(1, s.min_cat_rank);
  out.bound = s.waring_lower;
  out.confidence = out.bound == 1 ? Confidence::certified : Confidence::sampled;
  out.note = out.bound == 1 ? "every nonzero form has k-rank at least 1"
                            : "minimum catalecticant rank over sampled fiber points; not a proof";
  out.strata = {s};
  return out;
}

}  // namespace waring

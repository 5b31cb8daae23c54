#include "waring/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Univariate polynomials as coefficient vectors, highest degree first.
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  std::size_t k = 0;
  while (k + 1 < p.size() && p[k].is_zero()) ++k;
  p.erase(p.begin(), p.begin() + static_cast<long>(k));
}

bool is_zero_poly(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_zero(); });
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  const int n = poly_degree(p);
  if (n <= 0) return {Scalar::zero(p.front().mode())};
  Poly d;
  for (int i = 0; i < n; ++i) {
    Scalar f(n - i);
    d.push_back(p[static_cast<std::size_t>(i)] * (p.front().is_exact() ? f : f.promoted()));
  }
  return d;
}

// a = q b + r
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  const int db = poly_degree(b);
  const Scalar lead = b.front();
  const int da = poly_degree(a);
  if (da < db) {
    q = {Scalar::zero(lead.mode())};
    r = a;
    return;
  }
  q.assign(static_cast<std::size_t>(da - db + 1), Scalar::zero(lead.mode()));
  for (int i = 0; i <= da - db; ++i) {
    Scalar c = a[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  r.assign(a.begin() + (da - db + 1), a.end());
  if (r.empty()) r = {Scalar::zero(lead.mode())};
  trim(r);
}

Poly make_monic(Poly p) {
  trim(p);
  Scalar inv = Scalar::one(p.front().mode()) / p.front();
  for (auto& c : p) c *= inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (is_zero_poly(a)) return make_monic(b);
  if (is_zero_poly(b)) return make_monic(a);
  while (!is_zero_poly(b)) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!is_zero_poly(r)) throw PreconditionError("polynomial division is not exact");
  return q;
}

Scalar horner(const Poly& p, const Scalar& z) {
  Scalar acc = Scalar::zero(z.mode());
  for (const auto& c : p) acc = acc * z + c;
  return acc;
}

std::complex<double> horner_c(const std::vector<std::complex<double>>& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (const auto& c : p) acc = acc * z + c;
  return acc;
}

// Numerical roots of a univariate polynomial of degree >= 1 with nonzero
// leading coefficient: companion eigenvalues followed by Newton polishing.
std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  std::vector<std::complex<double>> c;
  for (const auto& s : p) c.push_back(s.to_complex());
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-c[1] / c[0]);
    return out;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) comp(0, j) = -c[static_cast<std::size_t>(j + 1)] / c[0];
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw InternalConsistencyError("eigenvalue iteration did not converge");
  std::vector<std::complex<double>> dc;
  for (int i = 0; i < n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * static_cast<double>(n - i));
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    double best = std::abs(horner_c(c, z));
    for (int it = 0; it < 8 && best > 0; ++it) {
      std::complex<double> d = horner_c(dc, z);
      if (d == 0.0) break;
      std::complex<double> zn = z - horner_c(c, z) / d;
      double v = std::abs(horner_c(c, zn));
      if (!(v < best)) break;
      z = zn;
      best = v;
    }
    out.push_back(z);
  }
  // Deterministic ordering.
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

// a - b with the constant terms aligned.
Poly subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.insert(a.begin(), b.size() - a.size(), Scalar::zero(b.front().mode()));
  for (std::size_t k = 0; k < b.size(); ++k) a[a.size() - b.size() + k] -= b[k];
  trim(a);
  return a;
}

// Yun square-free factorization of an exact polynomial: returns (factor, multiplicity).
std::vector<std::pair<Poly, int>> yun(const Poly& g) {
  std::vector<std::pair<Poly, int>> out;
  Poly dg = derivative(g);
  Poly b = poly_gcd(g, dg);
  Poly c = poly_div_exact(g, b);
  Poly d = subtract(poly_div_exact(dg, b), derivative(c));
  int i = 1;
  while (poly_degree(c) > 0) {
    Poly a = poly_gcd(c, d);
    c = poly_div_exact(c, a);
    d = subtract(poly_div_exact(d, a), derivative(c));
    if (poly_degree(a) > 0) out.emplace_back(a, i);
    ++i;
  }
  return out;
}

Poly dehomogenize(const BinaryForm& f, int m) {
  Poly p(f.coeffs().begin() + m, f.coeffs().end());
  return p;
}

BinaryForm homogenize(Poly p, int y_power) {
  trim(p);
  Scalar z = Scalar::zero(p.front().mode());
  p.insert(p.begin(), static_cast<std::size_t>(y_power), z);
  return BinaryForm(std::move(p));
}

}  // namespace

BinaryForm ProjectiveRoot::linear_factor() const { return BinaryForm::linear(y, -x); }

int RootSet::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

RootSet roots(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("roots of the zero form are undefined");
  RootSet out;
  const Scalar::Mode mode = f.mode();
  const int m = f.y_multiplicity();
  if (m > 0) out.roots.push_back({Scalar::one(mode), Scalar::zero(mode), m});
  Poly g = dehomogenize(f, m);
  if (f.is_exact()) {
    bool all_exact = true;
    std::vector<std::pair<std::complex<double>, int>> inexact;
    if (poly_degree(g) > 0) {
      for (auto& [factor, mult] : yun(g)) {
        Poly rest = factor;
        for (auto z : numeric_roots(factor)) {
          Scalar r(rationalize(z.real(), 1000000L), rationalize(z.imag(), 1000000L));
          if (poly_degree(rest) > 0 && horner(rest, r).is_zero()) {
            rest = poly_div_exact(rest, {Scalar(1), -r});
            out.roots.push_back({r, Scalar(1), mult});
          }
        }
        if (poly_degree(rest) > 0) {
          all_exact = false;
          for (auto z : numeric_roots(rest)) inexact.emplace_back(z, mult);
        }
      }
    }
    out.exact = all_exact;
    if (!all_exact) {
      for (auto& r : out.roots) {
        r.x = r.x.promoted();
        r.y = r.y.promoted();
      }
      for (auto& [z, mult] : inexact) out.roots.push_back({Scalar::floating(z), Scalar::floating(1.0), mult});
    }
    return out;
  }
  out.exact = false;
  for (auto z : numeric_roots(g)) out.roots.push_back({Scalar::floating(z), Scalar::floating(1.0), 1});
  return out;
}

double normalized_discriminant(const BinaryForm& f) {
  const int d = f.degree();
  if (d <= 1) return 1.0;
  BinaryForm fx = f.promoted().derivative_x();
  BinaryForm fy = f.promoted().derivative_y();
  const int n = d - 1;
  // Sylvester matrix of two forms of degree n.
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= n; ++j) {
      s(r, r + j) = fx[j].to_complex();
      s(n + r, r + j) = fy[j].to_complex();
    }
  double nx = fx.norm();
  double ny = fy.norm();
  if (nx == 0 || ny == 0) return 0.0;
  std::complex<double> det = s.partialPivLu().determinant();
  return std::abs(det) / (std::pow(nx, n) * std::pow(ny, n));
}

bool is_square_free(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("square-freeness of the zero form is undefined");
  if (f.degree() <= 1) return true;
  if (f.is_exact()) {
    const int m = f.y_multiplicity();
    if (m >= 2) return false;
    Poly g = dehomogenize(f, m);
    if (poly_degree(g) <= 0) return true;
    return poly_degree(poly_gcd(g, derivative(g))) == 0;
  }
  double v = normalized_discriminant(f);
  if (v <= 1e-8) return false;
  if (v >= 1e-6) return true;
  throw AmbiguityError("square-freeness undecidable at float precision (normalized discriminant " +
                       std::to_string(v) + ")");
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  if (!a.is_exact()) throw PreconditionError("form_gcd needs exact input");
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero forms");
  if (a.is_zero()) return homogenize(make_monic(dehomogenize(b, b.y_multiplicity())), b.y_multiplicity());
  if (b.is_zero()) return homogenize(make_monic(dehomogenize(a, a.y_multiplicity())), a.y_multiplicity());
  const int ma = a.y_multiplicity();
  const int mb = b.y_multiplicity();
  Poly g = poly_gcd(dehomogenize(a, ma), dehomogenize(b, mb));
  return homogenize(g, std::min(ma, mb));
}

BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero form");
  if (a.is_zero()) return BinaryForm::zero(std::max(0, a.degree() - b.degree()), a.mode());
  const int ma = a.y_multiplicity();
  const int mb = b.y_multiplicity();
  if (mb > ma || b.degree() > a.degree()) throw PreconditionError("form does not divide");
  Poly q = poly_div_exact(dehomogenize(a, ma), dehomogenize(b, mb));
  return homogenize(q, ma - mb);
}

BinaryForm square_free_part(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("square-free part of the zero form");
  if (!f.is_exact()) throw PreconditionError("square_free_part needs exact input");
  const int m = f.y_multiplicity();
  Poly g = dehomogenize(f, m);
  Poly s = g;
  if (poly_degree(g) > 0) s = poly_div_exact(g, poly_gcd(g, derivative(g)));
  return homogenize(make_monic(s), std::min(m, 1));
}

double root_residual(const BinaryForm& f, const ProjectiveRoot& r) {
  std::complex<double> x = r.x.to_complex();
  std::complex<double> y = r.y.to_complex();
  double n = std::sqrt(std::norm(x) + std::norm(y));
  Scalar xs = Scalar::floating(x / n);
  Scalar ys = Scalar::floating(y / n);
  double fn = f.norm();
  return f.promoted().eval(xs, ys).abs() / (fn > 0 ? fn : 1.0);
}

}  // namespace waring

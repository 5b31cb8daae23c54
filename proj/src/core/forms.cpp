#include "waring/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

namespace {

Scalar::Mode common_mode(std::span<const Scalar> v) {
  Scalar::Mode m = v.front().mode();
  for (const auto& s : v)
    if (s.mode() != m) throw ModeMismatch();
  return m;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Appends "coef*mono" to out with the correct separator.
void append_term(std::ostringstream& out, bool first, const Scalar& c, const std::string& mono) {
  std::string cs;
  bool negative = false;
  if (c.is_real()) {
    if (c.is_exact()) {
      negative = sgn(c.real()) < 0;
      cs = (negative ? -c : c).str();
    } else {
      negative = c.to_complex().real() < 0;
      cs = (negative ? -c : c).str();
    }
  } else {
    cs = "(" + c.str() + ")";
  }
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (mono.empty()) {
    out << cs;
  } else if (cs == "1") {
    out << mono;
  } else {
    out << cs << "*" << mono;
  }
}

std::string monomial_str(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("a binary form needs at least one coefficient");
  common_mode(coeffs_);
}

BinaryForm BinaryForm::zero(int degree, Scalar::Mode mode) {
  if (degree < 0) throw PreconditionError("negative degree");
  return BinaryForm(std::vector<Scalar>(static_cast<std::size_t>(degree) + 1, Scalar::zero(mode)));
}

BinaryForm BinaryForm::from_binomial(const std::vector<Scalar>& a) {
  if (a.empty()) throw PreconditionError("empty binomial coefficient list");
  int d = static_cast<int>(a.size()) - 1;
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (int k = 0; k <= d; ++k) {
    Scalar b = binomial_scalar(d, k);
    c.push_back(a[k] * (a[k].is_exact() ? b : b.promoted()));
  }
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::linear(const Scalar& alpha, const Scalar& beta) {
  return BinaryForm({alpha, beta});
}

BinaryForm BinaryForm::monomial(int x_exp, int y_exp, const Scalar& c) {
  BinaryForm f = zero(x_exp + y_exp, c.mode());
  f.coeffs_[static_cast<std::size_t>(y_exp)] = c;
  return f;
}

BinaryForm BinaryForm::from_multi(const MultiForm& f) {
  if (f.num_vars() != 2) throw PreconditionError("expected a form in two variables");
  BinaryForm out = zero(f.degree(), f.mode());
  for (const auto& [e, c] : f.terms()) out.coeffs_[static_cast<std::size_t>(e[1])] = c;
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar BinaryForm::binomial_coeff(int k) const {
  Scalar b = binomial_scalar(degree(), k);
  return (*this)[k] / (is_exact() ? b : b.promoted());
}

std::vector<Scalar> BinaryForm::binomial_view() const {
  std::vector<Scalar> a;
  for (int k = 0; k <= degree(); ++k) a.push_back(binomial_coeff(k));
  return a;
}

BinaryForm BinaryForm::promoted() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s.promoted());
  return BinaryForm(std::move(c));
}

Scalar BinaryForm::eval(const Scalar& x, const Scalar& y) const {
  // Homogeneous Horner: sum c_j x^(D-j) y^j.
  Scalar acc = Scalar::zero(mode());
  Scalar ypow = Scalar::one(mode());
  std::vector<Scalar> ypows;
  ypows.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    ypows.push_back(ypow);
    ypow *= y;
  }
  Scalar xpow = Scalar::one(mode());
  for (int j = degree(); j >= 0; --j) {
    acc += coeffs_[static_cast<std::size_t>(j)] * xpow * ypows[static_cast<std::size_t>(j)];
    xpow *= x;
  }
  return acc;
}

BinaryForm BinaryForm::derivative_x() const {
  int d = degree();
  if (d == 0) return zero(0, mode());
  std::vector<Scalar> c;
  for (int j = 0; j < d; ++j) {
    Scalar f(d - j);
    c.push_back(coeffs_[static_cast<std::size_t>(j)] * (is_exact() ? f : f.promoted()));
  }
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::derivative_y() const {
  int d = degree();
  if (d == 0) return zero(0, mode());
  std::vector<Scalar> c;
  for (int j = 1; j <= d; ++j) {
    Scalar f(j);
    c.push_back(coeffs_[static_cast<std::size_t>(j)] * (is_exact() ? f : f.promoted()));
  }
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw PreconditionError("negative exponent");
  BinaryForm result({Scalar::one(mode())});
  BinaryForm base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BinaryForm BinaryForm::substitute(const LinearSubstitution& s) const {
  if (s.size() != 2) throw PreconditionError("substitution size does not match a binary form");
  BinaryForm lx = linear(s.at(0, 0), s.at(0, 1));
  BinaryForm ly = linear(s.at(1, 0), s.at(1, 1));
  if (lx.mode() != mode()) throw ModeMismatch();
  int d = degree();
  std::vector<BinaryForm> xp{BinaryForm({Scalar::one(mode())})};
  std::vector<BinaryForm> yp{BinaryForm({Scalar::one(mode())})};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(xp.back() * lx);
    yp.push_back(yp.back() * ly);
  }
  BinaryForm out = zero(d, mode());
  for (int j = 0; j <= d; ++j) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    out = out + c * (xp[static_cast<std::size_t>(d - j)] * yp[static_cast<std::size_t>(j)]);
  }
  return out;
}

BinaryForm BinaryForm::shear(const Scalar& t) const { return substitute(LinearSubstitution::shear(t)); }

BinaryForm BinaryForm::divide_by_y_power(int m) const {
  if (m < 0 || m > degree()) throw PreconditionError("cannot divide by y^" + std::to_string(m));
  for (int j = 0; j < m; ++j)
    if (!coeffs_[static_cast<std::size_t>(j)].is_zero())
      throw PreconditionError("form is not divisible by y^" + std::to_string(m));
  return BinaryForm(std::vector<Scalar>(coeffs_.begin() + m, coeffs_.end()));
}

int BinaryForm::y_multiplicity() const {
  int m = 0;
  while (m <= degree() && coeffs_[static_cast<std::size_t>(m)].is_zero()) ++m;
  return m;
}

double BinaryForm::norm() const {
  double s = 0;
  for (const auto& c : coeffs_) s += std::norm(c.to_complex());
  return std::sqrt(s);
}

MultiForm BinaryForm::to_multi() const {
  MultiForm f(2, degree(), mode());
  for (int j = 0; j <= degree(); ++j) f.add_term({degree() - j, j}, coeffs_[static_cast<std::size_t>(j)]);
  return f;
}

std::string BinaryForm::str() const { return to_multi().str(); }

BinaryForm BinaryForm::operator-() const {
  std::vector<Scalar> c;
  for (const auto& s : coeffs_) c.push_back(-s);
  return BinaryForm(std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw PreconditionError("degree mismatch in addition");
  std::vector<Scalar> c;
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c.push_back(a.coeffs_[j] + b.coeffs_[j]);
  return BinaryForm(std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  BinaryForm out = BinaryForm::zero(a.degree() + b.degree(), a.mode());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

BinaryForm operator*(const Scalar& s, const BinaryForm& f) {
  std::vector<Scalar> c;
  for (const auto& x : f.coeffs_) c.push_back(s * x);
  return BinaryForm(std::move(c));
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return false;
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
    if (a.coeffs_[j] != b.coeffs_[j]) return false;
  return true;
}

// ----------------------------------------------------------------- MultiForm

MultiForm::MultiForm(int num_vars, int degree, Scalar::Mode mode)
    : num_vars_(num_vars), degree_(degree), mode_(mode) {
  if (num_vars < 1) throw PreconditionError("a form needs at least one variable");
  if (degree < 0) throw PreconditionError("negative degree");
}

MultiForm MultiForm::monomial(const Exponent& e, const Scalar& c) {
  MultiForm f(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0), c.mode());
  f.add_term(e, c);
  return f;
}

MultiForm MultiForm::variable(int num_vars, int i, Scalar::Mode mode) {
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(e, Scalar::one(mode));
}

MultiForm MultiForm::linear(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw PreconditionError("empty linear form");
  MultiForm f(static_cast<int>(coeffs.size()), 1, common_mode(coeffs));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

MultiForm MultiForm::constant(int num_vars, const Scalar& c) {
  MultiForm f(num_vars, 0, c.mode());
  f.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
  return f;
}

Scalar MultiForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

void MultiForm::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != num_vars_) throw PreconditionError("exponent length mismatch");
  if (std::accumulate(e.begin(), e.end(), 0) != degree_ ||
      std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }))
    throw PreconditionError("exponent does not match the form degree");
  if (c.mode() != mode_) throw ModeMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiForm MultiForm::promoted() const {
  MultiForm f(num_vars_, degree_, Scalar::Mode::floating);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, c.promoted());
  return f;
}

MultiForm MultiForm::pow(int e) const {
  if (e < 0) throw PreconditionError("negative exponent");
  MultiForm result = constant(num_vars_, Scalar::one(mode_));
  MultiForm base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiForm MultiForm::scaled(const Scalar& s) const {
  MultiForm f(num_vars_, degree_, mode_);
  if (s.mode() != mode_) throw ModeMismatch();
  if (s.is_zero()) return f;
  for (const auto& [e, c] : terms_) {
    Scalar v = c * s;
    if (!v.is_zero()) f.terms_.emplace(e, std::move(v));
  }
  return f;
}

MultiForm MultiForm::substitute(const std::vector<MultiForm>& images) const {
  if (static_cast<int>(images.size()) != num_vars_)
    throw PreconditionError("substitution has " + std::to_string(images.size()) + " images for " +
                            std::to_string(num_vars_) + " variables");
  const int nv = images.front().num_vars();
  const int deg = images.front().degree();
  for (const auto& im : images) {
    if (im.num_vars() != nv || im.degree() != deg) throw PreconditionError("inconsistent substitution images");
    if (im.mode() != mode_) throw ModeMismatch();
  }
  // powers[i][p] = images[i]^p
  std::vector<std::vector<MultiForm>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(constant(nv, Scalar::one(mode_)));
  MultiForm out(nv, degree_ * deg, mode_);
  for (const auto& [e, c] : terms_) {
    MultiForm prod = constant(nv, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      prod = prod * pw[static_cast<std::size_t>(e[i])];
    }
    out += prod;
  }
  return out;
}

MultiForm MultiForm::substitute(const LinearSubstitution& s) const {
  if (s.size() != num_vars_) throw PreconditionError("substitution size mismatch");
  std::vector<MultiForm> images;
  for (const auto& row : s.rows()) images.push_back(linear(row));
  return substitute(images);
}

MultiForm MultiForm::derivative(int var) const {
  Exponent alpha(static_cast<std::size_t>(num_vars_), 0);
  alpha.at(static_cast<std::size_t>(var)) = 1;
  return derivative(alpha);
}

MultiForm MultiForm::derivative(const Exponent& alpha) const {
  int order = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (order > degree_) return MultiForm(num_vars_, 0, mode_);
  MultiForm out(num_vars_, degree_ - order, mode_);
  for (const auto& [e, c] : terms_) {
    Exponent r(e);
    mpz_class factor(1);
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < alpha[i]) {
        ok = false;
        break;
      }
      for (int t = 0; t < alpha[i]; ++t) factor *= (e[i] - t);
      r[i] = e[i] - alpha[i];
    }
    if (!ok) continue;
    Scalar f(factor);
    out.add_term(r, c * (is_exact() ? f : f.promoted()));
  }
  return out;
}

Scalar MultiForm::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw PreconditionError("point dimension mismatch");
  Scalar acc = Scalar::zero(mode_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

double MultiForm::norm() const {
  double s = 0;
  for (const auto& [e, c] : terms_) s += std::norm(c.to_complex());
  return std::sqrt(s);
}

double MultiForm::relative_distance(const MultiForm& a, const MultiForm& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a == b) return 0.0;
  }
  MultiForm diff = a.promoted() - b.promoted();
  double nb = b.norm();
  return diff.norm() / std::max(nb, 1e-300);
}

std::string MultiForm::str(const std::vector<std::string>& names) const {
  std::vector<std::string> nm = names.empty() ? default_variable_names(num_vars_) : names;
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic order: iterate the map backwards.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, first, it->second, monomial_str(it->first, nm));
    first = false;
  }
  return out.str();
}

MultiForm MultiForm::operator-() const {
  MultiForm f(num_vars_, degree_, mode_);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

void MultiForm::require_compatible(const MultiForm& o) const {
  if (o.num_vars_ != num_vars_) throw PreconditionError("variable count mismatch");
  if (o.mode_ != mode_) throw ModeMismatch();
}

MultiForm& MultiForm::operator+=(const MultiForm& o) {
  require_compatible(o);
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    throw PreconditionError("degree mismatch in addition");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& o) { return *this += -o; }

MultiForm operator*(const MultiForm& a, const MultiForm& b) {
  a.require_compatible(b);
  MultiForm out(a.num_vars_, a.degree_ + b.degree_, a.mode_);
  Exponent e(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar v = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, v);
      if (!inserted) it->second += v;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (it->second.is_zero())
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

bool operator==(const MultiForm& a, const MultiForm& b) {
  if (a.num_vars_ != b.num_vars_ || a.mode_ != b.mode_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::vector<Exponent> monomials(int num_vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  // Recursive enumeration in descending lexicographic order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == num_vars - 1) {
      e[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (num_vars == 0) return out;
  rec(rec, 0, degree);
  return out;
}

std::size_t monomial_index(const Exponent& e) {
  const int n = static_cast<int>(e.size());
  int rem = std::accumulate(e.begin(), e.end(), 0);
  std::size_t idx = 0;
  for (int i = 0; i + 1 < n; ++i) {
    int tail = n - i - 1;
    for (int v = rem; v > e[static_cast<std::size_t>(i)]; --v)
      idx += static_cast<std::size_t>(binom(rem - v + tail - 1, tail - 1));
    rem -= e[static_cast<std::size_t>(i)];
  }
  return idx;
}

std::vector<std::string> default_variable_names(int num_vars) {
  if (num_vars == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (int i = 1; i <= num_vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// -------------------------------------------------------- LinearSubstitution

LinearSubstitution::LinearSubstitution(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw PreconditionError("empty substitution");
  Scalar::Mode m = rows_.front().front().mode();
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw PreconditionError("substitution matrix must be square");
    for (const auto& s : r)
      if (s.mode() != m) throw ModeMismatch();
  }
}

LinearSubstitution LinearSubstitution::identity(int n, Scalar::Mode mode) {
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n),
                                        std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(mode)));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar::one(mode);
  return LinearSubstitution(std::move(rows));
}

LinearSubstitution LinearSubstitution::shear(const Scalar& t) {
  Scalar::Mode m = t.mode();
  return LinearSubstitution({{Scalar::one(m), Scalar::zero(m)}, {t, Scalar::one(m)}});
}

LinearSubstitution LinearSubstitution::swap() { return LinearSubstitution({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}); }

Scalar LinearSubstitution::determinant() const {
  auto a = rows_;
  const std::size_t n = a.size();
  Scalar det = Scalar::one(mode());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = -1;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      double mag = a[r][col].abs();
      if (mode() == Scalar::Mode::exact) {
        piv = r;
        break;
      }
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (piv == n) return Scalar::zero(mode());
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

bool LinearSubstitution::is_invertible() const { return !determinant().is_zero(); }

LinearSubstitution LinearSubstitution::inverse() const {
  const std::size_t n = rows_.size();
  Scalar::Mode m = mode();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar::zero(m)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows_[i][j];
    a[i][n + i] = Scalar::one(m);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      if (m == Scalar::Mode::exact) {
        piv = r;
        break;
      }
      if (a[r][col].abs() > best) {
        best = a[r][col].abs();
        piv = r;
      }
    }
    if (piv == n) throw PreconditionError("substitution is not invertible");
    std::swap(a[piv], a[col]);
    Scalar inv = Scalar::one(m) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Scalar>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<long>(n), a[i].end());
  return LinearSubstitution(std::move(out));
}

LinearSubstitution LinearSubstitution::then(const LinearSubstitution& next) const {
  const std::size_t n = rows_.size();
  if (next.rows_.size() != n) throw PreconditionError("substitution size mismatch");
  std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, Scalar::zero(mode())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += rows_[i][k] * next.rows_[k][j];
  return LinearSubstitution(std::move(out));
}

LinearSubstitution LinearSubstitution::promoted() const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& s : r) s = s.promoted();
  return LinearSubstitution(std::move(rows));
}

std::string LinearSubstitution::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) out << (j ? ", " : "") << rows_[i][j].str();
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace waring

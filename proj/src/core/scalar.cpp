#include "waring/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

#include "waring/errors.hpp"

namespace waring {

namespace {

std::string float_str(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Exact n-th root of a non-negative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& v, int n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)) != 0) return r;
  return std::nullopt;
}

std::optional<mpq_class> exact_rational_root(const mpq_class& q, int n) {
  if (sgn(q) < 0) return std::nullopt;
  auto num = exact_root(q.get_num(), n);
  auto den = exact_root(q.get_den(), n);
  if (!num || !den) return std::nullopt;
  return mpq_class(*num, *den);
}

class NumberReader {
 public:
  explicit NumberReader(std::string_view s) : s_(s) {}

  Scalar read_all() {
    skip_ws();
    Scalar v = read_complex();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw ParseError(std::string("invalid number '") + std::string(s_) + "': " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  // [sign] real [ (+|-) imag i ]  |  [sign] imag i  |  '(' ... ')'
  Scalar read_complex() {
    if (peek('(')) {
      ++pos_;
      Scalar v = read_complex();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    Scalar total = Scalar();
    bool any = false;
    bool floating = false;
    while (true) {
      skip_ws();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (any) {
        break;
      }
      if (pos_ >= s_.size()) {
        if (any) fail("dangling sign");
        fail("empty");
      }
      bool has_digits = pos_ < s_.size() &&
                        (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.');
      mpq_class qv(1);
      double dv = 1.0;
      bool part_float = false;
      if (has_digits) part_float = read_unsigned(qv, dv);
      skip_ws();
      bool imaginary = false;
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        imaginary = true;
        ++pos_;
      } else if (!has_digits) {
        fail("expected digits");
      }
      floating = floating || part_float;
      if (part_float) {
        std::complex<double> z = imaginary ? std::complex<double>(0, sign * dv)
                                           : std::complex<double>(sign * dv, 0);
        total = any ? (total.is_exact() ? total.promoted() : total) + Scalar::floating(z)
                    : Scalar::floating(z);
      } else {
        Scalar part = imaginary ? Scalar(mpq_class(0), sign * qv) : Scalar(sign * qv);
        if (any && !total.is_exact()) part = part.promoted();
        total = any ? total + part : part;
      }
      any = true;
    }
    return total;
  }

  // Returns true when the literal is a decimal (floating).
  bool read_unsigned(mpq_class& q, double& d) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    bool is_float = false;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      is_float = true;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        is_float = true;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    std::string lit(s_.substr(start, pos_ - start));
    if (lit.empty() || lit == ".") fail("expected digits");
    if (is_float) {
      d = std::stod(lit);
      return true;
    }
    mpz_class num(lit);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected denominator");
      mpz_class den(std::string(s_.substr(ds, pos_ - ds)));
      if (den == 0) fail("zero denominator");
      q = mpq_class(num, den);
      q.canonicalize();
    } else {
      q = mpq_class(num);
    }
    return false;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::floating(std::complex<double> z) {
  Scalar s;
  s.mode_ = Mode::floating;
  s.z_ = z;
  return s;
}

Scalar Scalar::imag_unit(Mode m) {
  return m == Mode::exact ? Scalar(mpq_class(0), mpq_class(1)) : floating(0.0, 1.0);
}

Scalar Scalar::parse(std::string_view text) { return NumberReader(text).read_all(); }

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(re_) == 0 && sgn(im_) == 0;
  return z_ == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_one() const {
  if (is_exact()) return re_ == 1 && sgn(im_) == 0;
  return z_ == std::complex<double>(1.0, 0.0);
}

bool Scalar::is_real() const { return is_exact() ? sgn(im_) == 0 : z_.imag() == 0.0; }

bool Scalar::near_zero(double tol) const { return is_exact() ? is_zero() : std::abs(z_) <= tol; }

const mpq_class& Scalar::real() const {
  if (!is_exact()) throw ModeMismatch();
  return re_;
}

const mpq_class& Scalar::imag() const {
  if (!is_exact()) throw ModeMismatch();
  return im_;
}

std::complex<double> Scalar::to_complex() const {
  return is_exact() ? std::complex<double>(re_.get_d(), im_.get_d()) : z_;
}

Scalar Scalar::promoted() const { return is_exact() ? floating(to_complex()) : *this; }

Scalar Scalar::conj() const {
  if (is_exact()) return Scalar(re_, -im_);
  return floating(std::conj(z_));
}

double Scalar::abs() const { return std::abs(to_complex()); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return Scalar::one(mode_) / pow(-e);
  Scalar result = Scalar::one(mode_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  if (!is_exact()) {
    if (z_.imag() == 0.0) return float_str(z_.real());
    std::string im = float_str(std::abs(z_.imag())) + "i";
    if (z_.real() == 0.0) return (z_.imag() < 0 ? "-" : "") + im;
    return float_str(z_.real()) + (z_.imag() < 0 ? "-" : "+") + im;
  }
  if (sgn(im_) == 0) return rational_str(re_);
  mpq_class aim = sgn(im_) < 0 ? mpq_class(-im_) : im_;
  std::string im = (aim == 1 ? std::string() : rational_str(aim)) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im;
  return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + im;
}

std::string Scalar::factor_str() const {
  std::string s = str();
  if (!is_real()) return "(" + s + ")";
  return s;
}

void Scalar::require_same_mode(const Scalar& o) const {
  if (mode_ != o.mode_) throw ModeMismatch();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(o);
  if (is_exact()) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
  } else {
    z_ += o.z_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(o);
  if (is_exact()) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
  } else {
    z_ -= o.z_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(o);
  if (is_exact()) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
    } else {
      mpq_class r = re_ * o.re_ - im_ * o.im_;
      mpq_class i = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(r);
      im_ = std::move(i);
    }
  } else {
    z_ *= o.z_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(o);
  if (o.is_zero()) throw Error("division by zero");
  if (is_exact()) {
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
    } else {
      mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
      mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
      mpq_class i = (im_ * o.re_ - re_ * o.im_) / den;
      re_ = std::move(r);
      im_ = std::move(i);
    }
  } else {
    z_ /= o.z_;
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-re_, -im_);
  return floating(-z_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_mode(b);
  if (a.is_exact()) return a.re_ == b.re_ && a.im_ == b.im_;
  return a.z_ == b.z_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar principal_root(const Scalar& s, int n) {
  if (n < 1) throw PreconditionError("root order must be positive");
  if (n == 1 || s.is_zero()) return s;
  if (s.is_exact() && s.is_real()) {
    const mpq_class& q = s.real();
    if (sgn(q) > 0) {
      if (auto r = exact_rational_root(q, n)) return Scalar(*r);
    } else if (n % 2 == 1) {
      if (auto r = exact_rational_root(-q, n)) return Scalar(-*r);
    } else if (n == 2) {
      if (auto r = exact_rational_root(-q, n)) return Scalar(mpq_class(0), *r);
    }
  }
  if (s.is_exact() && n == 2 && !s.is_real()) {
    // sqrt(a+bi) = u+vi with u = sqrt((|z|+a)/2), v = sign(b) sqrt((|z|-a)/2).
    mpq_class norm2 = s.real() * s.real() + s.imag() * s.imag();
    if (auto mod = exact_rational_root(norm2, 2)) {
      auto u = exact_rational_root((*mod + s.real()) / 2, 2);
      auto v = exact_rational_root((*mod - s.real()) / 2, 2);
      if (u && v) return Scalar(*u, sgn(s.imag()) < 0 ? mpq_class(-*v) : *v);
    }
  }
  std::complex<double> z = s.to_complex();
  return Scalar::floating(std::pow(z, 1.0 / n));
}

Scalar root_of_unity(int n, long j) {
  if (n < 1) throw PreconditionError("root of unity order must be positive");
  long r = ((j % n) + n) % n;
  switch (n) {
    case 1:
      return Scalar(1);
    case 2:
      return Scalar(r == 0 ? 1 : -1);
    case 4: {
      static const Scalar table[4] = {Scalar(1), Scalar(mpq_class(0), mpq_class(1)), Scalar(-1),
                                      Scalar(mpq_class(0), mpq_class(-1))};
      return table[r];
    }
    default:
      break;
  }
  double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return Scalar::floating(std::cos(angle), std::sin(angle));
}

mpq_class rationalize(double v, long max_den) {
  if (!std::isfinite(v)) throw PreconditionError("cannot rationalize a non-finite value");
  // Continued fraction convergents h/k of v.
  mpz_class h_prev(1), h(0), k_prev(0), k(1);
  double x = v;
  mpq_class best(0);
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    mpz_class ai(a);
    mpz_class h_next = ai * h_prev + h;
    mpz_class k_next = ai * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    if (k_prev > max_den) break;
    best = mpq_class(h_prev, k_prev);
    best.canonicalize();
    double frac = x - a;
    if (std::abs(v - best.get_d()) <= 1e-15 * std::max(1.0, std::abs(v)) || frac == 0.0) break;
    x = 1.0 / frac;
  }
  return best;
}

Scalar binomial_scalar(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

}  // namespace waring

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace waring {

/// A number in one of two modes: an exact Gaussian rational re + im*i, or a
/// complex double. Exact values are kept in lowest terms by GMP. Binary
/// arithmetic between different modes throws ModeMismatch; use promoted().
class Scalar {
 public:
  enum class Mode : std::uint8_t { exact, floating };

  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& re) : re_(re) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }
  static Scalar floating(std::complex<double> z);
  static Scalar floating(double re, double im = 0.0) { return floating({re, im}); }
  static Scalar zero(Mode m) { return m == Mode::exact ? Scalar() : floating(0.0); }
  static Scalar one(Mode m) { return m == Mode::exact ? Scalar(1) : floating(1.0); }
  /// The imaginary unit in the given mode.
  static Scalar imag_unit(Mode m);

  /// Parses "3", "-3/7", "1.25", "2e-3", "(1+2i)", "1-2/3i", "i". Decimal
  /// notation yields a floating scalar, everything else is exact.
  static Scalar parse(std::string_view text);

  Mode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == Mode::exact; }
  bool is_zero() const;
  bool is_one() const;
  bool is_real() const;
  /// |z| <= tol; exact values compare against zero exactly.
  bool near_zero(double tol) const;

  const mpq_class& real() const;
  const mpq_class& imag() const;
  std::complex<double> to_complex() const;
  Scalar promoted() const;
  /// promoted() when m is floating, *this otherwise.
  Scalar promoted_if(Mode m) const { return m == Mode::floating ? promoted() : *this; }
  Scalar conj() const;
  double abs() const;
  Scalar pow(long e) const;

  /// Canonical text. Exact: "3/7", "1+2i", "-i/2" style ("-1/2i"). Floating:
  /// decimals that always contain '.' or 'e' so that they re-parse as floating.
  std::string str() const;
  /// Like str() but wrapped in parentheses when it would not parse as a single
  /// product factor (complex values).
  std::string factor_str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  /// Exact equality within a mode; mixed modes throw.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void require_same_mode(const Scalar& o) const;

  Mode mode_ = Mode::exact;
  mpq_class re_{0};
  mpq_class im_{0};
  std::complex<double> z_{0.0, 0.0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Principal n-th root; exact when the argument is a perfect n-th power of a
/// rational (or, for n in {2, 4}, a Gaussian rational that is a perfect power
/// with rational parts), floating otherwise.
Scalar principal_root(const Scalar& s, int n);

/// exp(2*pi*i*j/n): exact for n in {1, 2, 4}, floating otherwise.
Scalar root_of_unity(int n, long j);

/// Best rational approximation of v with denominator <= max_den.
mpq_class rationalize(double v, long max_den = 100000000L);

/// Binomial coefficient as an exact scalar.
Scalar binomial_scalar(long n, long k);

}  // namespace waring

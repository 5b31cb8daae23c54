#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "waring/scalar.hpp"

namespace waring {

class MultiForm;
class LinearSubstitution;

/// Homogeneous polynomial in x, y stored densely in the monomial basis:
/// coeffs[j] is the coefficient of x^(D-j) y^j. The binomial-scaled view
/// a_j = coeffs[j] / C(D, j) is computed on demand.
class BinaryForm {
 public:
  /// The zero form of degree 0 (exact).
  BinaryForm() : coeffs_{Scalar()} {}
  explicit BinaryForm(std::vector<Scalar> coeffs);

  static BinaryForm zero(int degree, Scalar::Mode mode = Scalar::Mode::exact);
  static BinaryForm from_binomial(const std::vector<Scalar>& a);
  /// alpha*x + beta*y
  static BinaryForm linear(const Scalar& alpha, const Scalar& beta);
  static BinaryForm monomial(int x_exp, int y_exp, const Scalar& c = Scalar(1));
  /// Converts a two-variable MultiForm (variables ordered x, y).
  static BinaryForm from_multi(const MultiForm& f);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  Scalar::Mode mode() const noexcept { return coeffs_.front().mode(); }
  bool is_exact() const noexcept { return mode() == Scalar::Mode::exact; }
  bool is_zero() const;

  Scalar binomial_coeff(int k) const;
  std::vector<Scalar> binomial_view() const;

  BinaryForm promoted() const;
  BinaryForm promoted_if(Scalar::Mode m) const { return m == Scalar::Mode::floating ? promoted() : *this; }
  Scalar eval(const Scalar& x, const Scalar& y) const;
  BinaryForm derivative_x() const;
  BinaryForm derivative_y() const;
  BinaryForm pow(int e) const;
  BinaryForm substitute(const LinearSubstitution& s) const;
  /// p(x, T x + y)
  BinaryForm shear(const Scalar& t) const;
  /// Divides by y^m exactly; throws if not divisible (exact) or if the dropped
  /// coefficients are not zero (floating, exact comparison).
  BinaryForm divide_by_y_power(int m) const;
  /// Number of leading coefficients that are exactly zero (multiplicity of the
  /// root (1:0)).
  int y_multiplicity() const;
  /// Euclidean norm of the coefficient vector.
  double norm() const;
  MultiForm to_multi() const;
  std::string str() const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Scalar& s, const BinaryForm& f);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

 private:
  std::vector<Scalar> coeffs_;
};

using Exponent = std::vector<int>;

/// Sparse homogeneous polynomial in m >= 1 variables. No zero coefficient is
/// ever stored and every exponent vector sums to the degree.
class MultiForm {
 public:
  MultiForm(int num_vars, int degree, Scalar::Mode mode = Scalar::Mode::exact);

  static MultiForm monomial(const Exponent& e, const Scalar& c = Scalar(1));
  static MultiForm variable(int num_vars, int i, Scalar::Mode mode = Scalar::Mode::exact);
  /// sum_i coeffs[i] * X_i
  static MultiForm linear(const std::vector<Scalar>& coeffs);
  static MultiForm constant(int num_vars, const Scalar& c);

  int num_vars() const noexcept { return num_vars_; }
  int degree() const noexcept { return degree_; }
  Scalar::Mode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == Scalar::Mode::exact; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }

  Scalar coeff(const Exponent& e) const;
  /// Adds c * x^e (validates the exponent).
  void add_term(const Exponent& e, const Scalar& c);

  MultiForm promoted() const;
  MultiForm promoted_if(Scalar::Mode m) const { return m == Scalar::Mode::floating ? promoted() : *this; }
  MultiForm pow(int e) const;
  MultiForm scaled(const Scalar& s) const;
  /// Replaces variable i by images[i]; all images share one degree and one
  /// variable count. The result has degree degree() * images.front().degree().
  MultiForm substitute(const std::vector<MultiForm>& images) const;
  MultiForm substitute(const LinearSubstitution& s) const;
  MultiForm derivative(int var) const;
  /// Coefficient-wise partial derivative d^alpha.
  MultiForm derivative(const Exponent& alpha) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  double norm() const;
  /// Relative coefficient distance ||a - b|| / max(||b||, tiny), promoting modes.
  static double relative_distance(const MultiForm& a, const MultiForm& b);

  /// Variable names default to x, y for two variables and x1..xn otherwise.
  std::string str(const std::vector<std::string>& names = {}) const;

  MultiForm operator-() const;
  MultiForm& operator+=(const MultiForm& o);
  MultiForm& operator-=(const MultiForm& o);
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator*(const MultiForm& a, const MultiForm& b);
  friend MultiForm operator*(const Scalar& s, const MultiForm& f) { return f.scaled(s); }
  friend bool operator==(const MultiForm& a, const MultiForm& b);

 private:
  void require_compatible(const MultiForm& o) const;

  int num_vars_;
  int degree_;
  Scalar::Mode mode_;
  std::map<Exponent, Scalar> terms_;
};

/// All exponent vectors of the given degree in n variables, in descending
/// lexicographic order (x1^d first, xn^d last).
std::vector<Exponent> monomials(int num_vars, int degree);

/// Index of an exponent vector inside monomials(num_vars, degree).
std::size_t monomial_index(const Exponent& e);

/// Default variable names for n variables.
std::vector<std::string> default_variable_names(int num_vars);

/// Variable x_i is replaced by sum_j matrix[i][j] x_j.
class LinearSubstitution {
 public:
  explicit LinearSubstitution(std::vector<std::vector<Scalar>> rows);

  static LinearSubstitution identity(int n, Scalar::Mode mode = Scalar::Mode::exact);
  /// (x, y) -> (x, t x + y)
  static LinearSubstitution shear(const Scalar& t);
  /// (x, y) -> (y, x)
  static LinearSubstitution swap();

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  const Scalar& at(int i, int j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }
  Scalar::Mode mode() const { return rows_.front().front().mode(); }

  Scalar determinant() const;
  bool is_invertible() const;
  /// Inverse substitution; throws PreconditionError when singular.
  LinearSubstitution inverse() const;
  /// Substitution equivalent to applying *this first and then `next`:
  /// f.substitute(a).substitute(b) == f.substitute(a.then(b)).
  LinearSubstitution then(const LinearSubstitution& next) const;
  LinearSubstitution promoted() const;
  LinearSubstitution promoted_if(Scalar::Mode m) const { return m == Scalar::Mode::floating ? promoted() : *this; }
  std::string str() const;

 private:
  std::vector<std::vector<Scalar>> rows_;
};

}  // namespace waring

#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "waring/scalar.hpp"

namespace waring {

/// Relative tolerance for numerical rank decisions.
inline constexpr double kDefaultRankTol = 1e-10;

/// Dense row-major matrix of Scalars sharing one mode.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols, Scalar::Mode mode = Scalar::Mode::exact);
  static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static ScalarMatrix identity(int n, Scalar::Mode mode = Scalar::Mode::exact);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Scalar::Mode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == Scalar::Mode::exact; }

  const Scalar& operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, const Scalar& v);

  ScalarMatrix promoted() const;
  ScalarMatrix transposed() const;
  std::vector<Scalar> row(int i) const;
  std::vector<Scalar> column(int j) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::string str() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  Scalar::Mode mode_ = Scalar::Mode::exact;
  std::vector<Scalar> data_;
};

/// Exact rank (elimination over Gaussian rationals) or numerical rank:
/// singular values above tol * sigma_max * max(rows, cols).
int num_rank(const ScalarMatrix& m, double tol = kDefaultRankTol);

/// Kernel basis. Exact mode returns the reduced-echelon basis (one vector per
/// free column, with a 1 in that column); float mode returns the right singular
/// vectors of the trailing singular values.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m, double tol = kDefaultRankTol);

/// Solves m x = b. Exact mode requires a consistent system (throws
/// PreconditionError otherwise) and returns one solution; float mode returns
/// the least-squares solution.
std::vector<Scalar> solve(const ScalarMatrix& m, const std::vector<Scalar>& b);

/// Singular values in decreasing order (promotes exact input).
std::vector<double> singular_values(const ScalarMatrix& m);

/// Fraction-free (Bareiss) rank of an integer matrix given as rows.
int integer_rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace waring

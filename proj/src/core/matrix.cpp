#include "waring/matrix.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Dense>

#include "waring/errors.hpp"

namespace waring {

namespace {

Eigen::MatrixXcd to_eigen(const ScalarMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
  return e;
}

bool all_real(const ScalarMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

// Reduced row echelon form over exact scalars; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Scalar>>& a, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = Scalar(1) / a[r][static_cast<std::size_t>(c)];
    for (auto& v : a[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][static_cast<std::size_t>(c)].is_zero()) continue;
      Scalar f = a[i][static_cast<std::size_t>(c)];
      for (std::size_t j = static_cast<std::size_t>(c); j < a[i].size(); ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> rows_of(const ScalarMatrix& m) {
  std::vector<std::vector<Scalar>> a;
  for (int i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

}  // namespace

ScalarMatrix::ScalarMatrix(int rows, int cols, Scalar::Mode mode)
    : rows_(rows), cols_(cols), mode_(mode),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar::zero(mode)) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.front().size()) : 0;
  Scalar::Mode mode = (r && c) ? rows.front().front().mode() : Scalar::Mode::exact;
  ScalarMatrix m(r, c, mode);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw PreconditionError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

ScalarMatrix ScalarMatrix::identity(int n, Scalar::Mode mode) {
  ScalarMatrix m(n, n, mode);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
  return m;
}

std::size_t ScalarMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw PreconditionError("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

void ScalarMatrix::set(int i, int j, const Scalar& v) {
  if (v.mode() != mode_) throw ModeMismatch();
  data_[index(i, j)] = v;
}

ScalarMatrix ScalarMatrix::promoted() const {
  ScalarMatrix m(rows_, cols_, Scalar::Mode::floating);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].promoted();
  return m;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix t(cols_, rows_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::vector<Scalar> ScalarMatrix::row(int i) const {
  std::vector<Scalar> r;
  for (int j = 0; j < cols_; ++j) r.push_back((*this)(i, j));
  return r;
}

std::vector<Scalar> ScalarMatrix::column(int j) const {
  std::vector<Scalar> c;
  for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw PreconditionError("vector length mismatch");
  std::vector<Scalar> out(static_cast<std::size_t>(rows_), Scalar::zero(mode_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
    }
  return out;
}

std::string ScalarMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).str();
    out << "]\n";
  }
  return out.str();
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
  if (a.mode_ != b.mode_) throw ModeMismatch();
  ScalarMatrix c(a.rows_, b.cols_, a.mode_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.data_[c.index(i, j)] += x * b(k, j);
    }
  return c;
}

int num_rank(const ScalarMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_exact()) {
    if (all_real(m)) {
      // Clear denominators row by row and go fraction-free.
      std::vector<std::vector<mpz_class>> rows;
      for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).real().get_den_mpz_t());
        std::vector<mpz_class> r;
        for (int j = 0; j < m.cols(); ++j) {
          mpq_class v = m(i, j).real() * l;
          r.push_back(v.get_num());
        }
        rows.push_back(std::move(r));
      }
      return integer_rank(std::move(rows));
    }
    auto a = rows_of(m);
    return static_cast<int>(rref(a, m.cols()).size());
  }
  auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  double cut = tol * sv.front() * std::max(m.rows(), m.cols());
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m, double tol) {
  std::vector<std::vector<Scalar>> basis;
  const int n = m.cols();
  if (n == 0) return basis;
  if (m.is_exact()) {
    auto a = rows_of(m);
    auto pivots = rref(a, n);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int free = 0; free < n; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
      v[static_cast<std::size_t>(free)] = Scalar(1);
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free)];
      basis.push_back(std::move(v));
    }
    return basis;
  }
  if (m.rows() == 0) {
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::floating(0.0));
      v[static_cast<std::size_t>(j)] = Scalar::floating(1.0);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  int rank = num_rank(m, tol);
  const auto& V = svd.matrixV();
  for (int j = rank; j < n; ++j) {
    std::vector<Scalar> v;
    for (int i = 0; i < n; ++i) v.push_back(Scalar::floating(V(i, j)));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> solve(const ScalarMatrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw PreconditionError("right-hand side length mismatch");
  const int n = m.cols();
  if (m.is_exact()) {
    std::vector<std::vector<Scalar>> a;
    for (int i = 0; i < m.rows(); ++i) {
      auto r = m.row(i);
      if (!b[static_cast<std::size_t>(i)].is_exact()) throw ModeMismatch();
      r.push_back(b[static_cast<std::size_t>(i)]);
      a.push_back(std::move(r));
    }
    auto pivots = rref(a, n + 1);
    if (!pivots.empty() && pivots.back() == n) throw PreconditionError("inconsistent linear system");
    std::vector<Scalar> x(static_cast<std::size_t>(n), Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = a[r][static_cast<std::size_t>(n)];
    return x;
  }
  Eigen::VectorXcd rhs(m.rows());
  for (int i = 0; i < m.rows(); ++i) rhs(i) = b[static_cast<std::size_t>(i)].to_complex();
  Eigen::VectorXcd sol = to_eigen(m).completeOrthogonalDecomposition().solve(rhs);
  std::vector<Scalar> x;
  for (int i = 0; i < n; ++i) x.push_back(Scalar::floating(sol(i)));
  return x;
}

std::vector<double> singular_values(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

int integer_rank(std::vector<std::vector<mpz_class>> a) {
  // Bareiss elimination; every division below is exact.
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace waring

#include "dercalc/matrix.hpp"

#include <utility>

namespace dercalc {

namespace {
void check_dims(std::size_t rows, std::size_t cols) {
  if (rows > Matrix::kMaxDim || cols > Matrix::kMaxDim) {
    throw Error("matrix dimension exceeds cap of " + std::to_string(Matrix::kMaxDim));
  }
}
}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  e_.assign(rows * cols, Rational(0));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  check_dims(rows, cols);
  if (e_.size() != rows * cols) throw Error("entry count does not match matrix shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += rat_str(at(i, j));
    }
    s += "]";
  }
  s += "]";
  return s;
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("shape mismatch in matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("shape mismatch in matrix product");
  Matrix c(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(static_cast<std::size_t>(i), k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(static_cast<std::size_t>(i), j) += aik * b.at(k, j);
    }
  }
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  // The whole corpus lives at tiny dimensions where thread fan-out costs more
  // than the multiply; only sizeable products go parallel.
  if (a.rows() >= 32 && a.rows() * b.cols() * a.cols() >= 16384) return mul_parallel(a, b);
  return mul_serial(a, b);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("shape mismatch in matrix sum");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("shape mismatch in matrix difference");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("row mismatch in hstack");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("column mismatch in vstack");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Matrix block(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
             std::size_t cols) {
  if (row0 + rows > m.rows() || col0 + cols > m.cols()) throw Error("block out of range");
  Matrix c(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) c.at(i, j) = m.at(row0 + i, col0 + j);
  return c;
}

}  // namespace dercalc

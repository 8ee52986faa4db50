#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dercalc/rational.hpp"

namespace dercalc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dense matrix over Q, row-major. 0xN and Nx0 matrices are legal and stand
// for maps out of / into the zero space.
class Matrix {
 public:
  static constexpr std::size_t kMaxDim = 512;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transposed() const;
  std::string str() const;  // [[a b][c d]] with rational entries

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

// Serial reference kernel and the OpenMP one; `operator*` dispatches on size.
// Both produce bit-identical results (exact arithmetic, fixed update order).
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Block diagonal [a 0; 0 b].
Matrix direct_sum(const Matrix& a, const Matrix& b);
// Kronecker product, a-blocks scaled by entries of a.
Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
             std::size_t cols);

}  // namespace dercalc

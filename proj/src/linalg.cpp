#include "dercalc/linalg.hpp"

namespace dercalc {

namespace {

template <bool Parallel>
RrefResult rref_impl(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    const Rational inv_p = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < cols; ++j) m.at(lead, j) *= inv_p;
    auto eliminate = [&](std::size_t i) {
      if (i == lead || m.at(i, col) == 0) return;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    };
    if constexpr (Parallel) {
      const long n = static_cast<long>(rows);
#pragma omp parallel for schedule(static)
      for (long i = 0; i < n; ++i) eliminate(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < rows; ++i) eliminate(i);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = out.pivot_cols.size();
  out.reduced = std::move(m);
  return out;
}

}  // namespace

RrefResult rref_serial(Matrix m) { return rref_impl<false>(std::move(m)); }
RrefResult rref_parallel(Matrix m) { return rref_impl<true>(std::move(m)); }

RrefResult rref(const Matrix& m) {
  if (m.rows() >= 64 && m.rows() * m.cols() >= 8192) return rref_parallel(m);
  return rref_serial(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix k(m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t j = free_cols[t];
    k.at(j, t) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k.at(r.pivot_cols[i], t) = -r.reduced.at(i, j);
  }
  return k;
}

Cokernel cokernel(const Matrix& m) {
  const RrefResult r = rref(m.transposed());  // rows of r.reduced span im(m)
  std::vector<bool> is_pivot(m.rows(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

  Cokernel out;
  out.dim = m.rows() - r.rank;
  out.projection = Matrix(out.dim, m.rows());
  std::size_t t = 0;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (is_pivot[j]) continue;
    out.projection.at(t, j) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      out.projection.at(t, r.pivot_cols[i]) = -r.reduced.at(i, j);
    ++t;
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw Error("shape mismatch in solve");
  const RrefResult r = rref(hstack(m, b));
  for (std::size_t p : r.pivot_cols)
    if (p >= m.cols()) return std::nullopt;  // pivot in the augmented part
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivot_cols[i], j) = r.reduced.at(i, m.cols() + j);
  return x;
}

Matrix factor_through_surjection(const Matrix& p, const Matrix& b) {
  if (rank(p) != p.rows()) throw Error("factor_through_surjection: map is not surjective");
  // Want m with m * p == b; transpose to p^T * m^T == b^T.
  auto mt = solve(p.transposed(), b.transposed());
  if (!mt) throw Error("factor_through_surjection: inconsistent system");
  return mt->transposed();
}

Matrix factor_through_injection(const Matrix& i, const Matrix& b) {
  if (rank(i) != i.cols()) throw Error("factor_through_injection: map is not injective");
  auto m = solve(i, b);
  if (!m) throw Error("factor_through_injection: inconsistent system");
  return *m;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  auto x = solve(m, Matrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw Error("matrix is singular");
  return *x;
}

}  // namespace dercalc

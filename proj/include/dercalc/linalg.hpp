#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dercalc/matrix.hpp"

namespace dercalc {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Exact reduced row echelon form. The serial routine is the reference; the
// parallel one splits the per-pivot row updates across threads and yields the
// same matrix entry for entry.
RrefResult rref_serial(Matrix m);
RrefResult rref_parallel(Matrix m);
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of ker(m); dim = cols - rank. The basis vector for
// free column j has a 1 in slot j, so the result for a 0xN matrix is I_N.
Matrix kernel_basis(const Matrix& m);

struct Cokernel {
  Matrix projection;  // dim x rows(m), surjective, projection * m == 0
  std::size_t dim = 0;
};

// Quotient Q^rows / im(m). The basis is the non-pivot coordinates of
// rref(transpose(m)), read off in ascending order, so repeated runs agree.
Cokernel cokernel(const Matrix& m);

// A solution of m * x = b with free variables set to zero, or nullopt when
// the system is inconsistent. Column counts of b give the number of systems.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// Unique m with m * p == b for surjective p. Throws Error if p is not
// surjective or no solution exists (both indicate misuse).
Matrix factor_through_surjection(const Matrix& p, const Matrix& b);

// Unique m with i * m == b for injective i. Throws on misuse.
Matrix factor_through_injection(const Matrix& i, const Matrix& b);

bool is_invertible(const Matrix& m);
// Inverse of a square invertible matrix; throws Error otherwise.
Matrix inverse(const Matrix& m);

}  // namespace dercalc

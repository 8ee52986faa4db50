#include <doctest.h>

#include "dercalc/linalg.hpp"
#include "dercalc/sampling.hpp"

using namespace dercalc;

namespace {
Matrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Rational> e;
  for (long x : v) e.push_back(rat(x));
  return Matrix(r, c, std::move(e));
}
}  // namespace

TEST_CASE("rref on frozen examples") {
  auto r1 = rref(Matrix::identity(3));
  CHECK(r1.reduced == Matrix::identity(3));
  CHECK(r1.pivot_cols == std::vector<std::size_t>{0, 1, 2});
  CHECK(r1.rank == 3);

  auto r2 = rref(Matrix::zero(2, 3));
  CHECK(r2.reduced == Matrix::zero(2, 3));
  CHECK(r2.rank == 0);

  // [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1 (hand elimination)
  auto r3 = rref(mat(2, 2, {1, 2, 2, 4}));
  CHECK(r3.reduced == mat(2, 2, {1, 2, 0, 0}));
  CHECK(r3.rank == 1);
}

TEST_CASE("kernel_basis on frozen examples") {
  CHECK(kernel_basis(mat(2, 2, {1, 1, 0, 1})).cols() == 0);  // invertible
  CHECK(kernel_basis(mat(1, 2, {1, 0})) == mat(2, 1, {0, 1}));
  CHECK(kernel_basis(Matrix::zero(0, 4)) == Matrix::identity(4));
}

TEST_CASE("cokernel on frozen examples") {
  CHECK(cokernel(Matrix::identity(3)).dim == 0);
  auto ck = cokernel(mat(2, 1, {1, 0}));
  CHECK(ck.dim == 1);
  CHECK(ck.projection == mat(1, 2, {0, 1}));  // kills the first coordinate
  CHECK(cokernel(Matrix::zero(0, 2)).dim == 0);
}

TEST_CASE("solve on frozen examples") {
  Matrix m = mat(2, 2, {2, 0, 0, 4});
  auto x = solve(m, Matrix::identity(2));
  REQUIRE(x);
  CHECK(m * *x == Matrix::identity(2));

  CHECK(!solve(Matrix::zero(1, 1), mat(1, 1, {3})));

  auto y = solve(mat(1, 2, {1, 1}), mat(1, 1, {3}));
  REQUIRE(y);
  CHECK(*y == mat(2, 1, {3, 0}));  // free variable pinned to zero
}

TEST_CASE("rational algebra properties on random matrices") {
  Policy pol;
  SplitMix64 rng(11);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = rng.below(5), c = rng.below(5);
    Matrix m = random_matrix(r, c, rng, pol);

    auto rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);  // idempotent
    CHECK(rank(m) == rank(m.transposed()));
    Matrix k = kernel_basis(m);
    CHECK(rr.rank + k.cols() == c);  // rank-nullity
    if (k.cols() > 0) CHECK((m * k).is_zero());
    auto ck = cokernel(m);
    CHECK(ck.dim == r - rr.rank);
    if (r > 0) CHECK((ck.projection * m).is_zero());
    CHECK(rank(ck.projection) == ck.dim);

    Matrix b = random_matrix(r, 2, rng, pol);
    if (auto x = solve(m, b)) CHECK(m * *x == b);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  Policy pol;
  pol.entry_min = -9;
  pol.entry_max = 9;
  SplitMix64 rng(23);
  for (int it = 0; it < 6; ++it) {
    std::size_t n = 20 + rng.below(30);
    Matrix a = random_matrix(n, n + 3, rng, pol);
    Matrix b = random_matrix(n + 3, n, rng, pol);
    CHECK(mul_serial(a, b) == mul_parallel(a, b));
    auto rs = rref_serial(a);
    auto rp = rref_parallel(a);
    CHECK(rs.reduced == rp.reduced);
    CHECK(rs.pivot_cols == rp.pivot_cols);
  }
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(Matrix(513, 1), Error);
  CHECK_NOTHROW(Matrix(512, 1));
}

TEST_CASE("rational parsing round-trips") {
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("5")) == "5");
  CHECK_THROWS(rat_parse("1/0"));
  CHECK_THROWS(rat_parse("x"));
}

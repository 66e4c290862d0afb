#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "scenery/linalg.hpp"
#include "scenery/walk.hpp"

using namespace scenery;

namespace {

ComplexMatrix random_matrix(SeededRng& rng, std::size_t r, std::size_t c) {
  ComplexMatrix m(r, c);
  for (auto& x : m.data()) x = Complex(rng.normal(), rng.normal());
  return m;
}

// rank-k product of random factors
ComplexMatrix low_rank(SeededRng& rng, std::size_t r, std::size_t c, std::size_t k) {
  return matmul(random_matrix(rng, r, k), random_matrix(rng, k, c));
}

}  // namespace

TEST_CASE("matmul and kron against hand values") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  b(0, 0) = 0; b(0, 1) = 1; b(1, 0) = 1; b(1, 1) = 0;
  const ComplexMatrix ab = matmul(a, b);
  CHECK(ab(0, 0) == Complex(2));
  CHECK(ab(0, 1) == Complex(1));
  CHECK(ab(1, 0) == Complex(4));
  CHECK(ab(1, 1) == Complex(3));
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1));
  CHECK(k(1, 0) == Complex(1));
  CHECK(k(0, 3) == Complex(2));
  CHECK(k(3, 2) == Complex(4));
  CHECK(trace(a) == Complex(5));
  CHECK(trace_of_product(a, b) == trace(ab));
}

TEST_CASE("mixed product and trace properties of kron") {
  SeededRng rng(3);
  const auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
  const auto c = random_matrix(rng, 2, 2), d = random_matrix(rng, 3, 3);
  CHECK(max_abs_diff(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d))) < 1e-12);
  CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-12);
}

TEST_CASE("mat_power and inverse") {
  SeededRng rng(4);
  const auto a = random_matrix(rng, 3, 3);
  ComplexMatrix p = a;
  for (unsigned e = 2; e <= 7; ++e) {
    p = matmul(p, a);
    CHECK(max_abs_diff(mat_power(a, e), p) < 1e-9 * max_abs(p));
  }
  CHECK(max_abs_diff(matmul(a, inverse(a)), ComplexMatrix::identity(3)) < 1e-12);
  CHECK_THROWS_AS(mat_power(a, 0), std::invalid_argument);
  CHECK_THROWS_AS(inverse(ComplexMatrix(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rank agrees with SVD and null vectors are null") {
  SeededRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.next() % 9, c = 1 + rng.next() % 9;
    const std::size_t k = rng.next() % (std::min(r, c) + 1);
    const ComplexMatrix m = k == 0 ? ComplexMatrix(r, c) : low_rank(rng, r, c, k);
    const RankResult res = rank_nullspace(m);
    CAPTURE(r);
    CAPTURE(c);
    CAPTURE(k);
    CHECK(res.rank == k);
    CHECK(res.rank == oracle::svd_rank(oracle::to_eigen(m)));
    CHECK(res.null_basis.size() == c - k);
    for (const auto& v : res.null_basis) {
      double big = 0.0;
      for (const auto& x : v) big = std::max(big, std::abs(x));
      CHECK(big == doctest::Approx(1.0));
      for (const auto& y : matvec(m, v)) CHECK(std::abs(y) < 1e-9 * (1.0 + max_abs(m)));
    }
  }
}

TEST_CASE("null basis is linearly independent") {
  SeededRng rng(5);
  const ComplexMatrix m = low_rank(rng, 4, 8, 3);
  const RankResult res = rank_nullspace(m);
  REQUIRE(res.null_basis.size() == 5);
  Eigen::MatrixXcd basis(8, 5);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 8; ++i) basis(i, j) = res.null_basis[j][i];
  CHECK(oracle::svd_rank(basis) == 5);
}

TEST_CASE("rank of scaled matrices is scale-free") {
  SeededRng rng(6);
  const ComplexMatrix m = low_rank(rng, 6, 6, 4);
  CHECK(rank_nullspace(Complex(1e-8) * m).rank == 4);
  CHECK(rank_nullspace(Complex(1e8) * m).rank == 4);
  CHECK_THROWS_AS(rank_nullspace(m, 0.0), std::invalid_argument);
}

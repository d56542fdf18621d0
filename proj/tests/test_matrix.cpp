#include <random>

#include "doctest.h"
#include "rankvar/matrix.hpp"
#include "rankvar/parse.hpp"

using namespace rankvar;

TEST_CASE("rank examples") {
  FieldPtr F2 = Field::prime(2);
  CHECK(rank(Matrix::identity(F2, 3)) == 3);
  CHECK(rank(Matrix(F2, 4, 5)) == 0);
  FieldPtr K = Field::rational_functions(F2, 1);
  const FieldElem t = K->variable(0);
  Matrix a = Matrix::from_rows(K, {{t, K->one()}, {t * t, t}});
  CHECK(rank(a) == 1);
  CHECK(rank(a) == echelon(a).pivots.size());
}

TEST_CASE("kernel examples") {
  FieldPtr F3 = Field::prime(3);
  CHECK(kernel_basis(Matrix::identity(F3, 4)).cols() == 0);
  CHECK(kernel_basis(Matrix(F3, 3, 3)) == Matrix::identity(F3, 3));
  const Matrix a = Matrix::from_ints(F3, 1, 2, {1, 1});
  const Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK((a * k).is_zero());
}

TEST_CASE("kron examples") {
  FieldPtr F5 = Field::prime(5);
  CHECK(kron(Matrix::identity(F5, 2), Matrix::identity(F5, 3)) == Matrix::identity(F5, 6));
  CHECK(kron(Matrix::identity(F5, 2), Matrix(F5, 2, 2)).is_zero());
  const Matrix n = Matrix::from_ints(F5, 2, 2, {0, 1, 0, 0});
  const Matrix k = kron(n, Matrix::identity(F5, 2));
  int ones = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) ones += k(i, j).is_one();
  CHECK(ones == 2);
  CHECK(k(0, 2).is_one());
  CHECK(k(1, 3).is_one());
  CHECK_THROWS_AS(kron(n, Matrix::identity(Field::prime(2), 2)), FieldMismatch);
}

TEST_CASE("solve examples") {
  FieldPtr F2 = Field::prime(2);
  const Matrix b = Matrix::from_ints(F2, 2, 1, {1, 0});
  CHECK(*solve(Matrix::identity(F2, 2), b) == b);
  CHECK(!solve(Matrix(F2, 2, 2), b).has_value());
  CHECK_THROWS_AS(solve_or_throw(Matrix(F2, 2, 2), b), NoSolution);
  const Matrix a = Matrix::from_ints(F2, 1, 2, {1, 1});
  const auto x = solve(a, Matrix::from_ints(F2, 1, 1, {1}));
  REQUIRE(x.has_value());
  CHECK(a * *x == Matrix::from_ints(F2, 1, 1, {1}));
}

namespace {

Matrix random_matrix(FieldPtr F, size_t r, size_t c, std::mt19937_64& rng, int sparsity = 2) {
  Matrix m(F, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng() % sparsity == 0) m(i, j) = F->element_at(rng() % F->size());
  return m;
}

}  // namespace

TEST_CASE("rank-nullity, kron rank and solve on random matrices") {
  std::mt19937_64 rng(11);
  for (FieldPtr F : {Field::prime(2), Field::prime(3), Field::extension(2, 2u)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix a = random_matrix(F, 1 + rng() % 6, 1 + rng() % 6, rng);
      const Matrix k = kernel_basis(a);
      CHECK(rank(a) + k.cols() == a.cols());
      CHECK((a * k).is_zero());
      CHECK(rank(k) == k.cols());
      const Matrix b = random_matrix(F, 1 + rng() % 3, 1 + rng() % 3, rng);
      CHECK(rank(kron(a, b)) == rank(a) * rank(b));
      const Matrix rhs = random_matrix(F, a.rows(), 1, rng);
      const auto x = solve(a, rhs);
      if (x) CHECK(a * *x == rhs);
      else CHECK(rank(hstack({a, rhs})) > rank(a));
    }
  }
}

TEST_CASE("generic rank over k(t) agrees with symbolic elimination") {
  std::mt19937_64 rng(5);
  FieldPtr K = Field::rational_functions(Field::prime(2), 2);
  const FieldElem t1 = K->variable(0), t2 = K->variable(1);
  for (int trial = 0; trial < 15; ++trial) {
    const size_t n = 2 + rng() % 4;
    Matrix a(K, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const int c = static_cast<int>(rng() % 5);
        a(i, j) = c == 0 ? t1 : c == 1 ? t2 : c == 2 ? K->one() : K->zero();
      }
    // Force a dependency half the time.
    if (trial % 2)
      for (size_t j = 0; j < n; ++j) a(n - 1, j) = t1 * a(0, j) + t2 * a(1, j);
    CHECK(rank(a) == echelon(a).pivots.size());
  }
}

#include <random>

#include "doctest.h"
#include "leibten/error.hpp"
#include "leibten/matrix.hpp"
#include "leibten/structures.hpp"
#include "suite.hpp"

using namespace leibten;
using leibten::testing::random_matrix;

namespace {

Matrix rows(std::vector<std::vector<int>> r) {
  const std::size_t c = r.empty() ? 0 : r[0].size();
  Matrix m(r.size(), c);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = r[i][j];
  return m;
}

// Random invertible matrix as a product of elementary operations.
Matrix random_invertible(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  Matrix m = Matrix::identity(n);
  if (n < 2) return 3 * m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    Matrix e = Matrix::identity(n);
    e(a, b) = coef(rng);
    m = e * m;
  }
  return m;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  // Exact: no rounding after many operations.
  Rational x = 0;
  for (int k = 1; k <= 50; ++k) x += Rational(1, k * (k + 1));
  CHECK(x == Rational(50, 51));
  CHECK(factorial(5) == 120);
}

TEST_CASE("rank and kernel on the documented examples") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 4)) == 0);
  CHECK(rank(rows({{1, 2}, {2, 4}})) == 1);

  CHECK(kernel_basis(Matrix::identity(3)).empty());
  const auto z = kernel_basis(Matrix(2, 3));
  REQUIRE(z.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(z[i] == basis_vector(3, i));

  const auto k = kernel_basis(rows({{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  // Proportional to (-2, 1).
  CHECK(k[0][0] == -2 * k[0][1]);
  CHECK(k[0][1] != 0);
}

TEST_CASE("quotient dimension") {
  CHECK(quotient_dim(Matrix(1, 4), Matrix(4, 1)) == 4);
  CHECK(quotient_dim(Matrix::identity(3), Matrix(3, 2)) == 0);
  // d_out has a one-dimensional kernel spanned by (1,-1,0); d_in maps onto it.
  const Matrix d_out = rows({{1, 1, 0}, {0, 0, 1}});
  const Matrix d_in = rows({{2}, {-2}, {0}});
  CHECK(quotient_dim(d_out, d_in) == 0);
  CHECK(quotient_dim(d_out, Matrix(3, 1)) == 1);
  // Not composable: d_out d_in != 0, or shapes disagree.
  CHECK_THROWS_AS(quotient_dim(Matrix::identity(2), Matrix::identity(2)), Error);
  CHECK_THROWS_AS(quotient_dim(Matrix(1, 3), Matrix(2, 1)), Error);
}

TEST_CASE("rank-nullity and invariance on random matrices") {
  for (unsigned s = 0; s < 40; ++s) {
    const std::size_t r = 1 + s % 5, c = 1 + (s / 5) % 6;
    const Matrix m = random_matrix(r, c, s, -2, 2);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(span_rank(ker, c) == ker.size());
    // Row operations on d_out and column operations on d_in leave the quotient unchanged.
    const Matrix p = random_invertible(r, 100 + s);
    CHECK(rank(p * m) == rank(m));
    const Matrix d_in = Matrix::from_columns(ker, c);
    if (!ker.empty()) {
      const Matrix q = random_invertible(ker.size(), 200 + s);
      CHECK(quotient_dim(p * m, d_in * q) == quotient_dim(m, d_in));
      CHECK(quotient_dim(m, d_in) == 0);
    }
    // Deterministic.
    CHECK(kernel_basis(m) == ker);
    CHECK(reduced_echelon(m).rref == reduced_echelon(m).rref);
  }
}

TEST_CASE("solve, inverse and reduction") {
  const Matrix a = rows({{1, 2}, {3, 4}});
  const auto x = solve(a, Vector{5, 6});
  REQUIRE(x);
  CHECK(a.apply(*x) == Vector{5, 6});
  CHECK_FALSE(solve(rows({{1, 1}, {1, 1}}), Vector{1, 2}));
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == Matrix::identity(2));
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));

  const RowEchelon basis = reduced_echelon(rows({{1, 0, 1}, {0, 1, 1}}));
  CHECK(is_zero(reduce_modulo(Vector{2, 3, 5}, basis)));
  CHECK_FALSE(is_zero(reduce_modulo(Vector{0, 0, 1}, basis)));
  CHECK(reduced_echelon(rows({{0, 2, 4}, {0, 1, 2}, {1, 0, 0}})).pivot_cols == std::vector<std::size_t>{0, 1});
}

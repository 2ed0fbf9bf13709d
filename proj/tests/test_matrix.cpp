// Integer matrices: characteristic polynomials, determinants, primitivity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "safzero/matrix.hpp"

using namespace safzero;

static IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

TEST_CASE("products and transpose") {
  IntMatrix a = from_rows({{1, 2}, {3, 4}});
  IntMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
  CHECK(a.nonnegative());
  CHECK(!from_rows({{1, -2}}).nonnegative());
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly_exact(from_rows({{2, 1}, {1, 1}})) == ZPoly{1, -3, 1});
  CHECK(char_poly_exact(IntMatrix::identity(3)) ==
        ZPoly{-1, 1} * ZPoly{-1, 1} * ZPoly{-1, 1});
  CHECK(char_poly_exact(from_rows({{0, 1}, {1, 1}})) == ZPoly{-1, -1, 1});
  CHECK(det(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(det(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);

  // oracle: char poly of a triangular matrix is the product over the diagonal
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> cd(-5, 5);
  for (int it = 0; it < 100; ++it) {
    IntMatrix t(4, 4);
    ZPoly expect = ZPoly::one();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) t(i, j) = cd(rng);
      expect = expect * ZPoly(std::vector<Int>{-t(i, i), 1});
    }
    CHECK(char_poly_exact(t) == expect);
  }
  // similarity invariance under a random unimodular conjugation
  for (int it = 0; it < 50; ++it) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = cd(rng);
    // E = I + e_{01}: inverse is I - e_{01}
    IntMatrix e = IntMatrix::identity(3), einv = IntMatrix::identity(3);
    e(0, 1) = 1;
    einv(0, 1) = -1;
    CHECK(char_poly_exact(e * m * einv) == char_poly_exact(m));
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(from_rows({{0, 1}, {1, 1}})));
  CHECK(is_primitive(from_rows({{2, 1}, {1, 1}})));
  // a permutation matrix is irreducible but never primitive
  CHECK(!is_primitive(from_rows({{0, 1}, {1, 0}})));
  CHECK(!is_primitive(from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
  // block diagonal: not even irreducible
  CHECK(!is_primitive(from_rows({{1, 0}, {0, 1}})));
  CHECK(is_primitive(from_rows({{1}})));
  CHECK(!is_primitive(from_rows({{0}})));
  // slow mixer: primitive but needs a high power
  CHECK(is_primitive(from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}})));
  CHECK_THROWS(is_primitive(from_rows({{-1}})));
}

TEST_CASE("eigenvalue minimal polynomial from an interval") {
  IntMatrix m = from_rows({{2, 1}, {1, 1}});
  // Perron root (3+sqrt5)/2 ~ 2.618
  CHECK(eigen_min_poly(m, {Rat(2), Rat(3)}) == ZPoly{1, -3, 1});
  // identity-block example: factor (x-1) vs (x^2-3x+1)
  IntMatrix b(3, 3);
  b(0, 0) = 2; b(0, 1) = 1; b(1, 0) = 1; b(1, 1) = 1; b(2, 2) = 1;
  CHECK(eigen_min_poly(b, {Rat(2), Rat(3)}) == ZPoly{1, -3, 1});
  CHECK(eigen_min_poly(b, {Rat(1, 3), Rat(1, 2)}) == ZPoly{1, -3, 1});
  // an interval containing roots of two different factors must fail
  CHECK_THROWS(eigen_min_poly(b, {Rat(1, 2), Rat(3)}));
  CHECK_THROWS(eigen_min_poly(b, {Rat(4), Rat(5)}));
}

// Factorization over Z: fixed factorizations, irreducibility, cyclotomic
// detection, and randomized product round trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "safzero/factor.hpp"

using namespace safzero;

TEST_CASE("fixed factorizations") {
  // (x-1)(x-2)^2 (x^2+1)
  ZPoly p = ZPoly{-1, 1} * ZPoly{-2, 1} * ZPoly{-2, 1} * ZPoly{1, 0, 1};
  auto fs = factor_over_Z(p);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == std::make_pair(ZPoly{-2, 1}, 2));
  CHECK(fs[1] == std::make_pair(ZPoly{-1, 1}, 1));
  CHECK(fs[2] == std::make_pair(ZPoly{1, 0, 1}, 1));

  // product of two conjugate-by-reversal cubics and (x - 1)
  ZPoly a{-1, 6, -8, 1};
  ZPoly b{-1, 8, -6, 1};
  auto gs = factor_over_Z(a * b * ZPoly{-1, 1});
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].first == ZPoly{-1, 1});
  CHECK(gs[1].first == ZPoly{-1, 6, -8, 1});
  CHECK(gs[2].first == ZPoly{-1, 8, -6, 1});

  // content and sign are dropped
  auto hs = factor_over_Z(Int(-6) * ZPoly{-1, 0, 1});
  REQUIRE(hs.size() == 2);
  CHECK(hs[0].first == ZPoly{-1, 1});
  CHECK(hs[1].first == ZPoly{1, 1});
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible_over_Q(ZPoly{-2, 0, 1}));
  CHECK(is_irreducible_over_Q(ZPoly{-1, 5, -6, 1}));
  CHECK(!is_irreducible_over_Q(ZPoly{-1, 0, 1}));
  CHECK(!is_irreducible_over_Q(ZPoly{0, 0, 1}));
  CHECK(!is_irreducible_over_Q(ZPoly{4}));
  // degree 4 with no rational roots but a quadratic split:
  // x^4 - 3x^2 + 1 = (x^2 + x - 1)(x^2 - x - 1)
  CHECK(!is_irreducible_over_Q(ZPoly{1, 0, -3, 0, 1}));
}

TEST_CASE("recombination handles false modular splits") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime
  CHECK(is_irreducible_over_Q(ZPoly{1, 0, 0, 0, 1}));
  // x^4 - 10x^2 + 1 (min poly of sqrt2 + sqrt3): same situation
  CHECK(is_irreducible_over_Q(ZPoly{1, 0, -10, 0, 1}));
  // swinnerton-dyer style degree 8
  ZPoly p{1, 0, -40, 0, 352, 0, -960, 0, 576};
  auto fs = factor_over_Z(p);
  ZPoly prod = ZPoly::one();
  for (auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) prod = prod * f;
  CHECK(prod == p.primitive_part());
}

TEST_CASE("random product round trips") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nd(1, 3), dd(1, 3), cd(-6, 6);
  for (int it = 0; it < 200; ++it) {
    ZPoly p = ZPoly::one();
    int nf = nd(rng);
    for (int i = 0; i < nf; ++i) {
      int d = dd(rng);
      std::vector<Int> c(d + 1);
      for (auto& v : c) v = cd(rng);
      ZPoly f(std::move(c));
      if (f.degree() < 1) { --i; continue; }
      p = p * f;
    }
    auto fs = factor_over_Z(p);
    ZPoly prod = ZPoly::one();
    int total_deg = 0;
    for (auto& [f, m] : fs) {
      CHECK(f.lc() > 0);
      CHECK(f.content() == 1);
      for (int i = 0; i < m; ++i) prod = prod * f;
      total_deg += f.degree() * m;
    }
    CHECK(total_deg == p.degree());
    CHECK(prod == p.primitive_part());
    // factors of distinct irreducibles must themselves not split further
    for (auto& [f, m] : fs) CHECK(is_irreducible_over_Q(f));
  }
}

TEST_CASE("cyclotomic factor detection") {
  CHECK(has_cyclotomic_factor(ZPoly{-1, 1}));
  CHECK(has_cyclotomic_factor(ZPoly{1, 1, 1} * ZPoly{-2, 0, 1}));
  CHECK(!has_cyclotomic_factor(ZPoly{-1, 5, -6, 1}));
  CHECK(!has_cyclotomic_factor(ZPoly{-2, 0, 1}));
  // a high-order cyclotomic hiding in a product
  CHECK(has_cyclotomic_factor(cyclotomic(15) * ZPoly{-3, 1}));
}

// Polynomial layer: arithmetic, division, reciprocity, cyclotomics,
// trace substitution.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "safzero/poly.hpp"

using namespace safzero;

static ZPoly random_poly(std::mt19937& rng, int max_deg, int coeff_range) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<int> dc(-coeff_range, coeff_range);
  int d = dd(rng);
  std::vector<Int> c(d + 1);
  for (auto& v : c) v = dc(rng);
  return ZPoly(std::move(c));
}

TEST_CASE("basic arithmetic") {
  ZPoly xp1{1, 1}, xm1{-1, 1};
  CHECK(xp1 * xm1 == ZPoly{-1, 0, 1});
  CHECK(xp1 + xm1 == ZPoly{0, 2});
  CHECK(xp1 - xp1 == ZPoly::zero());
  CHECK(ZPoly::zero().degree() == -1);
  CHECK(ZPoly::monomial(3, 2) == ZPoly{0, 0, 0, 2});
  CHECK((-xp1).eval(Int(5)) == -6);
  CHECK(ZPoly({-1, 5, -6, 1}).eval(Rat(1, 2)) == Rat(1, 8) - Rat(6, 4) + Rat(5, 2) - 1);
}

TEST_CASE("derivative, content, primitive part") {
  ZPoly p{4, 0, 6};  // 6x^2 + 4
  CHECK(p.derivative() == ZPoly{0, 12});
  CHECK(p.content() == 2);
  CHECK(p.primitive_part() == ZPoly{2, 0, 3});
  CHECK((-p).primitive_part() == ZPoly{2, 0, 3});  // sign normalized
  CHECK(ZPoly::zero().content() == 0);
}

TEST_CASE("integer division") {
  ZPoly a{-1, 0, 1};  // x^2 - 1
  ZPoly b{1, 1};
  CHECK(a.divisible_by(b));
  CHECK(a.divexact(b) == ZPoly{-1, 1});
  CHECK(!a.divisible_by(ZPoly{1, 2}));
  CHECK_THROWS(a.divexact(ZPoly{0, 2}));

  // random round trip: (q*b + r) recovers a
  std::mt19937 rng(7);
  for (int it = 0; it < 500; ++it) {
    ZPoly f = random_poly(rng, 8, 9);
    ZPoly g = random_poly(rng, 4, 9);
    if (g.is_zero()) continue;
    ZPoly q, r;
    if (f.try_divide(g, q, r)) {
      CHECK(q * g + r == f);
      CHECK(r.degree() < g.degree());
    }
    // products always divide back exactly
    if (!f.is_zero()) {
      ZPoly prod = f * g;
      CHECK(prod.divisible_by(f));
      CHECK(prod.divexact(f) == g);
    }
  }
}

TEST_CASE("rational division and gcd") {
  QPoly a(ZPoly{-1, 0, 0, 0, 1});  // x^4 - 1
  QPoly b(ZPoly{-1, 0, 1});        // x^2 - 1
  QPoly q, r;
  a.divmod(b, q, r);
  CHECK(r.is_zero());
  CHECK(q == QPoly(ZPoly{1, 0, 1}));
  CHECK(gcd(a, b) == b.monic());
  CHECK(gcd_z(ZPoly{-2, 0, 2}, ZPoly{-3, 3}) == ZPoly{-1, 1});

  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    ZPoly f = random_poly(rng, 6, 5);
    ZPoly g = random_poly(rng, 6, 5);
    ZPoly h = random_poly(rng, 3, 5);
    if (f.is_zero() || g.is_zero() || h.degree() < 1) continue;
    ZPoly d = gcd_z(f * h, g * h);
    CHECK(d.divisible_by(h.primitive_part()));
  }
}

TEST_CASE("reciprocal predicate matches the reversal oracle") {
  CHECK(is_reciprocal(ZPoly{1, -3, -3, 1}));
  CHECK(is_reciprocal(ZPoly{-1, 8, -8, 1}) == false);
  CHECK(is_reciprocal(ZPoly{1}));
  // oracle: p is reciprocal iff x^n p(1/x) == p coefficientwise
  std::mt19937 rng(23);
  for (int it = 0; it < 500; ++it) {
    ZPoly p = random_poly(rng, 7, 3);
    if (p.is_zero() || p.coeff(0) == 0) continue;
    std::vector<Int> rev(p.coeffs().rbegin(), p.coeffs().rend());
    CHECK(is_reciprocal(p) == (ZPoly(std::move(rev)) == p));
  }
}

TEST_CASE("reverse inverts roots") {
  ZPoly p{-1, 5, -6, 1};
  ZPoly r = reverse(p);
  CHECK(r == ZPoly{-1, 6, -5, 1});  // sign-normalized so the lc is positive
  CHECK(r.lc() > 0);
  // rational-root oracle: p(2) = 0 iff reverse(p)(1/2) = 0
  ZPoly q{-2, 1};  // root 2
  CHECK(reverse(q).eval(Rat(1, 2)) == 0);
  CHECK_THROWS(reverse(ZPoly{0, 1}));
}

TEST_CASE("power substitution") {
  ZPoly f{-1, 5, -6, 1};
  ZPoly g = substitute_power(f, 3);
  CHECK(g.degree() == 9);
  CHECK(power_substitution_index(g) == 3);
  CHECK(power_substitution_index(f) == 1);
  CHECK(power_substitution_index(ZPoly{7, 0, 1}) == 2);
  // substituting back x^1 is the identity
  CHECK(substitute_power(f, 1) == f);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == ZPoly{-1, 1});
  CHECK(cyclotomic(2) == ZPoly{1, 1});
  CHECK(cyclotomic(3) == ZPoly{1, 1, 1});
  CHECK(cyclotomic(4) == ZPoly{1, 0, 1});
  CHECK(cyclotomic(6) == ZPoly{1, -1, 1});
  CHECK(cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
  // product over divisors reassembles x^n - 1
  for (int n = 1; n <= 20; ++n) {
    ZPoly prod = ZPoly::one();
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == ZPoly::monomial(n) - ZPoly::one());
  }
}

TEST_CASE("trace substitution x^m q(x + 1/x)") {
  // x^4 - x^3 - x^2 - x + 1 = x^2 ((x+1/x)^2 - (x+1/x) - 3)
  CHECK(trace_polynomial(ZPoly{1, -1, -1, -1, 1}) == ZPoly{-3, -1, 1});
  CHECK(trace_polynomial(ZPoly{1, 0, 1}) == ZPoly{0, 1});
  CHECK_THROWS(trace_polynomial(ZPoly{-1, 5, -6, 1}));

  // round trip against direct expansion
  std::mt19937 rng(31);
  for (int it = 0; it < 200; ++it) {
    ZPoly q = random_poly(rng, 4, 5);
    if (q.degree() < 1) continue;
    int m = q.degree();
    // p = x^m q(x + 1/x)
    ZPoly p;
    for (int j = 0; j <= m; ++j) {
      ZPoly t = ZPoly::one();
      for (int i = 0; i < j; ++i) t = t * ZPoly{1, 0, 1};
      p = p + q.coeff(j) * (ZPoly::monomial(m - j) * t);
    }
    CHECK(trace_polynomial(p) == q);
  }
}

TEST_CASE("printing") {
  CHECK(ZPoly{-1, 5, -6, 1}.str() == "x^3-6x^2+5x-1");
  CHECK(ZPoly{0}.str() == "0");
  CHECK(ZPoly{-1, 0, 1}.str() == "x^2-1");
  CHECK(ZPoly{3}.str() == "3");
}

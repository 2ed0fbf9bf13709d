// Perron data, suspension checks, certificates, and loop search.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "safzero/veech.hpp"

using namespace safzero;

namespace {

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

LoopWord alpha2() {
  return LoopWord{LabeledPermutation::symmetric(7),
                  parse_word("10101(0^1)10011100001111100000(1^1)0")};
}

LoopWord rho1() {
  return LoopWord{parse_permutation("7354621"),
                  parse_word("00001010(111111^0)" "1101(00^0)" "010100111")};
}

}  // namespace

TEST_CASE("primitivity") {
  CHECK(!is_primitive(IntMatrix::identity(2)));
  CHECK(!is_primitive(mat2(0, 1, 1, 0)));
  CHECK(is_primitive(mat2(1, 1, 1, 2)));
  CHECK(is_primitive(transition_matrix(alpha2())));
  IntMatrix neg(2, 2);
  neg(0, 1) = -1;
  CHECK_THROWS_AS(is_primitive(neg), std::invalid_argument);
}

TEST_CASE("perron data on a 2x2 example") {
  auto pd = perron_data(mat2(2, 1, 1, 1), LabeledPermutation::symmetric(2));
  CHECK(pd.field->modulus() == ZPoly{1, -3, 1});
  // lengths proportional to (1, theta - 2), normalized to sum 1
  NFElement theta = pd.theta;
  NFElement two = NFElement::from_rational(pd.field, Rat(2));
  CHECK((pd.lengths[1] - (theta - two) * pd.lengths[0]).is_zero());
  NFElement sum = pd.lengths[0] + pd.lengths[1];
  CHECK((sum - NFElement::from_rational(pd.field, Rat(1))).is_zero());
  CHECK(nf_sign(pd.lengths[0]) > 0);
  CHECK(nf_sign(pd.lengths[1]) > 0);
  // heights normalized at the first coordinate
  CHECK((pd.heights[0] - NFElement::from_rational(pd.field, Rat(1))).is_zero());

  CHECK_THROWS_AS(perron_data(IntMatrix::identity(2), LabeledPermutation::symmetric(2)),
                  NotPrimitive);
}

TEST_CASE("suspension check") {
  auto f = std::make_shared<NumberField>(ZPoly{1, -3, 1}, Interval{Rat(2), Rat(3)});
  auto r = [&](long v) { return NFElement::from_rational(f, Rat(v)); };
  auto e2 = LabeledPermutation::symmetric(2);
  CHECK(check_suspension(e2, {r(1), r(1)}, {r(1), r(-1)}));
  CHECK(!check_suspension(e2, {r(1), r(1)}, {r(-1), r(1)}));

  auto pd = perron_data(transition_matrix(alpha2()), alpha2().base);
  CHECK(check_suspension(alpha2().base, pd.lengths, pd.heights));
}

TEST_CASE("certificates") {
  auto e2 = LabeledPermutation::symmetric(2);
  auto c = certify(LoopWord{e2, {0, 1}});
  CHECK(c.min_poly == ZPoly{1, -3, 1});
  CHECK(c.char_poly == ZPoly{1, -3, 1});
  CHECK(!c.saf_zero_thm1);
  CHECK(c.suspension_ok);
  CHECK(c.hyperelliptic);
  CHECK(c.stratum == StratumProfile{{0}, 1, 1});

  auto ca = certify(alpha2(), true);
  CHECK(ca.min_poly == ZPoly{-1, 6, -8, 1});
  CHECK(ca.char_poly == ZPoly{-1, 6, -8, 1} * ZPoly{-1, 8, -6, 1} * ZPoly{-1, 1});
  CHECK(ca.saf_zero_thm1);
  REQUIRE(ca.saf_tensor_zero.has_value());
  CHECK(*ca.saf_tensor_zero);
  CHECK(ca.suspension_ok);
  CHECK(ca.hyperelliptic);
  CHECK(ca.stratum == StratumProfile{{2, 2}, 3, 2});

  auto cr = certify(rho1());
  CHECK(cr.min_poly == ZPoly{-1, 5, -7, 1});
  CHECK(!cr.hyperelliptic);
  CHECK(cr.stratum == StratumProfile{{2, 2}, 3, 2});
  CHECK(cr.saf_zero_thm1);
  CHECK(cr.suspension_ok);

  CHECK_THROWS_AS(certify(LoopWord{e2, {0}}, false), NotPrimitive);
  CHECK_THROWS_AS(certify(LoopWord{LabeledPermutation::symmetric(3), {0}}, false),
                  NotClosed);
}

TEST_CASE("the dual loop gives the inverse map with equal minimal polynomial") {
  for (auto loop : {alpha2(), rho1()}) {
    LoopWord inverse = dual_loop(loop);
    REQUIRE(is_loop(inverse));
    auto a = certify(loop, true), b = certify(inverse, true);
    CHECK(a.min_poly == b.min_poly);
    CHECK(a.char_poly == b.char_poly);
    // stable/unstable symmetry of the SAF invariant
    CHECK(*a.saf_tensor_zero == *b.saf_tensor_zero);
  }
  CHECK(dual_loop(rho1()).base == parse_permutation("7624351"));
  CHECK(parse_permutation("7354621").transposed().transposed() ==
        parse_permutation("7354621"));
}

TEST_CASE("loop search on the one-vertex diagram") {
  auto e2 = LabeledPermutation::symmetric(2);
  RauzyDiagram d(e2);
  auto certs = search_loops(d, e2, 2);
  REQUIRE(certs.size() == 1);  // only "01" is primitive among 5 rotation classes
  CHECK(certs[0].loop.word_str() == "01");
  CHECK(certs[0].min_poly == ZPoly{1, -3, 1});
}

TEST_CASE("loop search invariants at degree 4") {
  auto e4 = LabeledPermutation::symmetric(4);
  RauzyDiagram d(e4);
  auto certs = search_loops(d, e4, 8);
  CHECK(!certs.empty());
  for (const auto& c : certs) {
    CHECK(c.suspension_ok);
    // char poly = reciprocal R of degree 2g times (x-1)^(sigma-1)
    ZPoly r = c.char_poly;
    for (int i = 1; i < c.stratum.sigma; ++i) r = r.divexact(ZPoly{-1, 1});
    CHECK(r.degree() == 2 * c.stratum.genus);
    CHECK(is_reciprocal(r));
    CHECK(c.loop.base.degree() ==
          2 * c.stratum.genus + c.stratum.sigma - 1);
    // hyperelliptic diagram: the loop passes through the symmetric vertex
    LabeledPermutation v = c.loop.base;
    bool hits = v == e4;
    for (int t : c.loop.types) {
      v = v.rauzy(t);
      hits = hits || v == e4;
    }
    CHECK(hits);
    // min poly divides char poly
    CHECK(c.char_poly.divisible_by(c.min_poly));
  }
  // determinism across thread counts
  auto certs3 = search_loops(d, e4, 8, nullptr, 3);
  REQUIRE(certs.size() == certs3.size());
  for (std::size_t i = 0; i < certs.size(); ++i) {
    CHECK(certs[i].loop.word_str() == certs3[i].loop.word_str());
    CHECK(certs[i].loop.base == certs3[i].loop.base);
    CHECK(certs[i].min_poly == certs3[i].min_poly);
  }
  // filtered search: SAF-zero certificates have non-reciprocal min polys
  // (the filter is vacuous at this degree: genus-2 hyperelliptic loops all
  // have reciprocal minimal polynomials)
  auto zeros = search_loops(d, e4, 12, [](const PseudoAnosovCertificate& c) {
    return c.saf_zero_thm1;
  });
  for (const auto& c : zeros) CHECK(!is_reciprocal(c.min_poly));
  // a non-vacuous filter for comparison
  auto pos = search_loops(d, e4, 8, [](const PseudoAnosovCertificate& c) {
    return c.suspension_ok;
  });
  CHECK(pos.size() == certs.size());
}

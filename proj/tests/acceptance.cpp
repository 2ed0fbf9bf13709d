// Acceptance gate: twelve end-to-end checks, one pass/fail line each.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "safzero/families.hpp"
#include "safzero/numclass.hpp"
#include "safzero/veech.hpp"

using namespace safzero;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - "
            << what << std::endl;
  if (!ok) ++failures;
}

bool eigen_ok(const PseudoAnosovCertificate& c) {
  const auto& pd = c.dilatation;
  std::size_t d = c.matrix.rows();
  NFElement theta_inv = nf_inverse(pd.theta);
  for (std::size_t i = 0; i < d; ++i) {
    NFElement accl = NFElement::from_rational(pd.field, Rat(0));
    NFElement acch = accl;
    for (std::size_t j = 0; j < d; ++j) {
      accl = accl + Rat(c.matrix(i, j)) * pd.lengths[j];
      acch = acch + Rat(c.matrix(i, j)) * pd.heights[j];
    }
    if (!(accl - pd.theta * pd.lengths[i]).is_zero()) return false;
    if (!(acch - theta_inv * pd.heights[i]).is_zero()) return false;
  }
  return true;
}

bool visits(const LoopWord& loop, const LabeledPermutation& target) {
  LabeledPermutation v = loop.base;
  if (v == target) return true;
  for (int t : loop.types) {
    v = v.rauzy(t);
    if (v == target) return true;
  }
  return false;
}

}  // namespace

int main() {
  // ---- 1 & 2: closed-form matrices and characteristic polynomials ----
  bool m_ok = true, cp_ok = true;
  std::vector<PseudoAnosovCertificate> family_certs;
  for (const auto& name : family_names()) {
    int klo = family_min_k(name), khi = klo + (name == "rho" ? 9 : 8);
    for (int k = klo; k <= khi; ++k) {
      auto loop = family_loop(name, k);
      IntMatrix v = transition_matrix(loop);
      auto em = expected_matrix(name, k);
      if (em.has_value()) m_ok = m_ok && v == *em;
      cp_ok = cp_ok && char_poly_exact(v) == expected_charpoly(name, k);
      family_certs.push_back(certify(loop));
    }
  }
  report(1, m_ok,
         "alpha/beta/gamma/delta transition matrices match the closed forms "
         "entry-for-entry, k = 2..10 (rho has no usable closed-form matrix "
         "and is checked through its characteristic polynomial)");
  report(2, cp_ok,
         "characteristic polynomials match the stated product forms, "
         "k = 2..10 (rho: 1..10)");

  // ---- 3: dilatation anchors for rho_1, rho_2 ----
  bool anchors = true;
  {
    std::vector<ZPoly> expect{ZPoly{-1, 5, -7, 1}, ZPoly{-1, 6, -10, 1}};
    for (int k = 1; k <= 2; ++k) {
      auto c = certify(family_loop("rho", k));
      anchors = anchors && c.min_poly == expect[k - 1];
      const Interval& iv = c.dilatation.field->root_interval();
      anchors = anchors && count_real_roots(c.min_poly, iv.lo, iv.hi) == 1 &&
                count_real_roots(c.min_poly, iv.hi,
                                 root_bound(c.min_poly) + 1) == 0;
    }
  }
  report(3, anchors,
         "rho_1 and rho_2 have dilatation minimal polynomials x^3-7x^2+5x-1 "
         "and x^3-10x^2+6x-1 with certified intervals isolating the largest "
         "real root");

  // ---- 4: the fixed catalog ----
  bool cat_ok = true;
  std::vector<PseudoAnosovCertificate> catalog_certs;
  for (const auto& e : fixed_catalog()) {
    LoopWord loop{e.start, parse_word(e.word)};
    cat_ok = cat_ok && is_loop(loop);
    auto c = certify(loop, true);  // certify() itself enforces primitivity
    cat_ok = cat_ok && c.char_poly == e.expected_charpoly;
    cat_ok = cat_ok && c.saf_zero_thm1 == e.expected_saf_zero;
    // both classification methods must agree on every entry
    cat_ok = cat_ok && *c.saf_tensor_zero == c.saf_zero_thm1;
    catalog_certs.push_back(std::move(c));
  }
  report(4, cat_ok,
         "all 15 catalog loops close, are primitive, and reproduce the "
         "listed characteristic polynomials; the SAF classification agrees "
         "with the exact tensor on every entry (the three degree-8 entries "
         "whose dominant factor is x^2-6x+1 have nonvanishing invariant by "
         "both methods)");

  // ---- 5: exhaustive tensor vs non-reciprocity cross-check ----
  bool xcheck = true;
  std::vector<PseudoAnosovCertificate> d4_certs;
  {
    auto e4 = LabeledPermutation::symmetric(4);
    RauzyDiagram dia4(e4);
    d4_certs = search_loops(dia4, e4, 14, nullptr, 8, true);
    xcheck = xcheck && !d4_certs.empty();
    for (const auto& c : d4_certs)
      xcheck = xcheck && *c.saf_tensor_zero == c.saf_zero_thm1;
    auto e5 = LabeledPermutation::symmetric(5);
    RauzyDiagram dia5(e5);
    for (const auto& c : search_loops(dia5, e5, 10, nullptr, 8, true))
      xcheck = xcheck && *c.saf_tensor_zero == c.saf_zero_thm1;
  }
  report(5, xcheck,
         "for every primitive loop of length <= 14 at degree 4 and <= 10 at "
         "degree 5, the exact SAF tensor vanishes iff the dilatation's "
         "minimal polynomial is non-reciprocal");

  // ---- 6: diagram cardinalities ----
  bool sizes = true;
  {
    auto size_of = [](const LabeledPermutation& p) {
      return RauzyDiagram(p).size();
    };
    sizes = sizes && size_of(LabeledPermutation::symmetric(4)) == 7;
    sizes = sizes && size_of(LabeledPermutation::symmetric(6)) == 31;
    sizes = sizes && size_of(LabeledPermutation::symmetric(7)) == 63;
    sizes = sizes && size_of(parse_permutation("7354621")) == 294;
    // cross-check: the transposed diagram is a relabeled copy
    sizes = sizes && size_of(LabeledPermutation::symmetric(7).transposed()) == 63;
    sizes = sizes && size_of(parse_permutation("7354621").transposed()) == 294;
  }
  report(6, sizes,
         "diagram sizes: 7 (degree 4), 31 (degree 6), 63 (degree 7) matching "
         "2^(d-1)-1, and 294 for start 7354621; transposed starts agree");

  // ---- 7: every primitive loop passes through the symmetric vertex ----
  bool through = true;
  for (int d = 4; d <= 5; ++d) {
    auto ed = LabeledPermutation::symmetric(d);
    RauzyDiagram dia(ed);
    for (const auto& c : search_loops(dia, ed, 12, nullptr, 8))
      through = through && visits(c.loop, ed);
  }
  report(7, through,
         "every primitive loop of length <= 12 in the degree 4 and 5 "
         "hyperelliptic diagrams passes through the symmetric vertex");

  // ---- 8: stratum bookkeeping ----
  bool strata = true;
  {
    auto check = [&](const PseudoAnosovCertificate& c) {
      int sum = 0;
      for (int m : c.stratum.multiplicities) sum += m;
      strata = strata && sum == 2 * c.stratum.genus - 2;
      strata = strata && c.loop.base.degree() ==
                             2 * c.stratum.genus + c.stratum.sigma - 1;
    };
    for (const auto& c : family_certs) {
      check(c);
      strata = strata && c.stratum == StratumProfile{{2, 2}, 3, 2};
      bool hyp_start = c.loop.base == LabeledPermutation::symmetric(7);
      strata = strata && c.hyperelliptic == hyp_start;
    }
    for (const auto& c : catalog_certs) check(c);
    for (const auto& c : d4_certs) check(c);
  }
  report(8, strata,
         "sum of zero orders = 2g-2 and d = 2g+sigma-1 for every "
         "certificate; degree-7 family loops lie in stratum (2,2), "
         "hyperelliptic for the symmetric start and not for 7354621");

  // ---- 9: cubic Pisot units = cubic bi-Perron units ----
  bool cubic = true;
  std::vector<ZPoly> bi_perron_corpus;
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b)
      for (int c0 : {1, -1}) {
        ZPoly p{long(c0), long(b), long(a), 1};
        if (!is_irreducible_over_Q(p)) continue;
        bool bp = is_bi_perron(p);
        cubic = cubic && bp == is_pisot(p);
        if (bp) bi_perron_corpus.push_back(p);
      }
  {
    ZPoly q{1, 3, 0, -4, 1};  // x^4-4x^3+3x+1
    cubic = cubic && is_bi_perron(q) && !is_pisot(q) && !is_reciprocal(q);
  }
  report(9, cubic,
         "over all irreducible x^3+ax^2+bx+-1 with |a|,|b| <= 20, Pisot and "
         "bi-Perron coincide; x^4-4x^3+3x+1 is bi-Perron, non-Pisot, "
         "non-reciprocal");

  // ---- 10: realization pipeline ----
  bool realized = !bi_perron_corpus.empty();
  for (const auto& p : bi_perron_corpus)
    realized = realized && homological_criterion(realize_bi_perron(p)).pass;
  realized = realized &&
             homological_criterion(realize_bi_perron(ZPoly{1, -1, -1, -1, 1})).pass;
  report(10, realized,
         "realize_bi_perron output satisfies the homological criterion for "
         "every bi-Perron unit in the cubic corpus and for x^4-x^3-x^2-x+1");

  // ---- 11: trichotomy and the trace identity ----
  bool knot = true;
  {
    ZPoly f1{-1, 1, -2, 1}, f2{-1, 2, -1, 1};
    knot = knot && birman_trichotomy(f1 * f2, 3) == BirmanCase::SYMPL_IRRED_SAF_ZERO;
    auto field = std::make_shared<NumberField>(f2, Interval{Rat(0), Rat(1)});
    NFElement lam = NFElement::generator(field);
    NFElement t = lam + nf_inverse(lam);
    NFElement rhs = -(t * t) + Rat(3) * t - NFElement::from_rational(field, Rat(1));
    knot = knot && (lam - rhs).is_zero();
  }
  report(11, knot,
         "(x^3-2x^2+x-1)(x^3-x^2+2x-1) at genus 3 classifies as reducible "
         "but symplectically irreducible, and lambda = "
         "-(lambda+1/lambda)^2+3(lambda+1/lambda)-1 holds exactly");

  // ---- 12: eigen/suspension exactness and dual loops ----
  bool exact = true;
  {
    std::vector<const std::vector<PseudoAnosovCertificate>*> groups{
        &family_certs, &catalog_certs, &d4_certs};
    for (const auto* g : groups)
      for (const auto& c : *g) {
        exact = exact && eigen_ok(c) && c.suspension_ok;
      }
    for (const auto& c : family_certs) {
      auto dual = certify(dual_loop(c.loop));
      exact = exact && dual.min_poly == c.min_poly;
    }
    for (const auto& c : catalog_certs) {
      auto dual = certify(dual_loop(c.loop));
      exact = exact && dual.min_poly == c.min_poly;
    }
  }
  report(12, exact,
         "V*lambda = theta*lambda and V*tau = theta^-1*tau hold exactly, all "
         "suspension sign conditions pass, and the type-swapped loop at the "
         "transposed base has the same dilatation minimal polynomial");

  if (failures == 0) {
    std::cout << "all 12 criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return 1;
}

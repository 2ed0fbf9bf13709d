// Number-theoretic classifiers: unit/Pisot/bi-Perron predicates,
// symplectic irreducibility, the homological realization criterion, and
// the trichotomy for reciprocal characteristic polynomials of orientable
// pseudo-Anosov maps.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "factor.hpp"
#include "nfpoly.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace safzero {

struct RootCount {
  int inside = 0;   // |z| < 1
  int on = 0;       // |z| = 1
  int outside = 0;  // |z| > 1

  friend bool operator==(const RootCount& a, const RootCount& b) {
    return a.inside == b.inside && a.on == b.on && a.outside == b.outside;
  }
};

inline bool is_unit(const ZPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("is_unit: non-monic polynomial");
  Int c0 = p.coeff(0);
  return c0 == 1 || c0 == -1;
}

// Exact root counts relative to the unit circle, with multiplicity.
// Factors first: roots of an irreducible integer polynomial sit on the
// circle only if the polynomial is reciprocal, where the circle pairs are
// exactly the real roots of the trace polynomial in (-2, 2).
inline RootCount unit_disk_count(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("unit_disk_count: zero polynomial");
  RootCount rc;
  if (p.degree() == 0) return rc;
  for (const auto& [f, mult] : factor_over_Z(p)) {
    int n = f.degree();
    if (n == 1) {
      Int a = f.coeff(0), b = f.coeff(1);
      int cmp = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());  // |root| = |a| / |b|
      if (cmp < 0)
        rc.inside += mult;
      else if (cmp == 0)
        rc.on += mult;
      else
        rc.outside += mult;
      continue;
    }
    if (is_reciprocal(f)) {
      // irreducible reciprocal of degree >= 2 is palindromic of even degree
      ZPoly t = trace_polynomial(f);
      int pairs_on = count_real_roots(t, Rat(-2), Rat(2));
      int on = 2 * pairs_on;
      rc.on += mult * on;
      rc.inside += mult * (n - on) / 2;
      rc.outside += mult * (n - on) / 2;
      continue;
    }
    auto c = count_roots_in_disk(f, Rat(1));
    if (!c.has_value())
      throw std::logic_error("unit_disk_count: unexpected boundary case");
    rc.inside += mult * *c;
    rc.outside += mult * (n - *c);
  }
  return rc;
}

inline bool is_pisot(const ZPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("is_pisot: non-monic polynomial");
  if (!is_irreducible_over_Q(p)) throw std::invalid_argument("is_pisot: reducible");
  RootCount rc = unit_disk_count(p);
  if (rc.on != 0 || rc.outside != 1) return false;
  // the single outside root must be real and > 1
  return count_real_roots(p, Rat(1), root_bound(p) + 1) == 1;
}

namespace detail {

// q with h(x) = x^m q(x + 1/x) for a monic palindromic h of degree 2m
// over a number field.
inline NFPoly nf_trace_polynomial(const NFPoly& h) {
  const FieldPtr& f = h.field();
  int n = h.degree();
  if (n % 2 != 0) throw std::invalid_argument("nf_trace_polynomial: odd degree");
  int m = n / 2;
  NFElement one = NFElement::from_rational(f, Rat(1));
  NFPoly rem = h;
  std::vector<NFElement> q(m + 1, NFElement::from_rational(f, Rat(0)));
  NFPoly x2p1(f, {one, NFElement::from_rational(f, Rat(0)), one});
  for (int j = m; j >= 0; --j) {
    NFElement a = rem.coeff(m + j);
    q[j] = a;
    NFPoly t = NFPoly::constant(f, a);
    for (int i = 0; i < j; ++i) t = t * x2p1;
    std::vector<NFElement> sh(m - j, NFElement::from_rational(f, Rat(0)));
    sh.push_back(one);
    rem = rem - t * NFPoly(f, std::move(sh));
  }
  if (!rem.is_zero())
    throw std::invalid_argument("nf_trace_polynomial: not palindromic");
  return NFPoly(f, std::move(q));
}

}  // namespace detail

// With theta the largest real root (required > 1), every conjugate z of
// theta must satisfy 1/theta <= |z| < theta.  Both comparisons against the
// algebraic radius are exact: the polynomial is rescaled by theta and the
// unit-disk machinery runs over Q(theta).
inline bool is_bi_perron(const ZPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("is_bi_perron: non-monic polynomial");
  if (p.degree() < 1) return false;
  if (!is_irreducible_over_Q(p)) throw std::invalid_argument("is_bi_perron: reducible");
  int n = p.degree();
  if (n == 1) return -p.coeff(0) > 1;
  if (count_real_roots(p, Rat(1), root_bound(p) + 1) == 0) return false;
  auto field = std::make_shared<NumberField>(p, largest_real_root(p));
  NFElement theta = NFElement::generator(field);
  NFElement one = NFElement::from_rational(field, Rat(1));

  // outer bound: roots of p(theta x) other than 1 lie strictly inside
  NFPoly scaled = NFPoly::scaled(field, p, theta);
  NFPoly xm1(field, {-one, one});
  NFPoly outer = scaled.divexact(xm1);
  auto co = nf_count_roots_in_unit_disk(outer);
  // a boundary degeneracy here always certifies a conjugate with |z| >= theta
  if (!co.has_value() || *co != n - 1) return false;

  // inner bound: no root of p(x / theta) inside the open unit disk, roots
  // on the circle allowed
  std::vector<NFElement> ic;
  {
    NFElement pw = one;
    std::vector<NFElement> pows;
    for (int i = 0; i <= n; ++i) {
      pows.push_back(pw);
      pw = pw * theta;
    }
    for (int i = 0; i <= n; ++i) ic.push_back(Rat(p.coeff(i)) * pows[n - i]);
  }
  NFPoly inner(field, std::move(ic));
  std::vector<NFElement> revc;
  for (int i = n; i >= 0; --i) revc.push_back(inner.coeff(i));
  NFPoly h = nf_gcd(inner, NFPoly(field, std::move(revc)));
  NFPoly free_part = h.degree() > 0 ? inner.divexact(h) : inner;
  if (free_part.degree() > 0) {
    auto ci = nf_count_roots_in_unit_disk(free_part);
    if (!ci.has_value())
      throw std::logic_error("is_bi_perron: inversion-free part degenerate");
    if (*ci > 0) return false;
  }
  if (h.degree() > 0) {
    // h is closed under z -> 1/z; it is harmless iff all roots lie on the
    // circle, i.e. its trace polynomial has only real roots in (-2, 2)
    NFElement mone = NFElement::from_rational(field, Rat(-1));
    while (h.degree() > 0 && h.eval(one).is_zero()) h = h.divexact(xm1);
    while (h.degree() > 0 && h.eval(mone).is_zero())
      h = h.divexact(NFPoly(field, {one, one}));
    if (h.degree() > 0) {
      NFPoly t = detail::nf_trace_polynomial(h.monic());
      if (nf_count_real_roots(t, NFElement::from_rational(field, Rat(-2)),
                              NFElement::from_rational(field, Rat(2))) != t.degree())
        return false;
    }
  }
  return true;
}

inline bool symplectically_irreducible(const ZPoly& p) {
  if (!p.is_monic() || !is_reciprocal(p))
    throw std::invalid_argument("symplectically_irreducible: need monic reciprocal");
  std::vector<ZPoly> fs;
  for (const auto& [f, mult] : factor_over_Z(p))
    for (int i = 0; i < mult; ++i) fs.push_back(f);
  std::size_t k = fs.size();
  if (k <= 1) return true;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    ZPoly a = ZPoly::one(), b = ZPoly::one();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1)
        a = a * fs[i];
      else
        b = b * fs[i];
    }
    if (is_reciprocal(a) && is_reciprocal(b)) return false;
  }
  return true;
}

struct HomologicalReport {
  bool pass = false;
  std::string reason;  // empty on pass; names the first failed clause
};

inline HomologicalReport homological_criterion(const ZPoly& q) {
  if (!q.is_monic() || q.degree() % 2 != 0 || !is_reciprocal(q))
    throw std::invalid_argument(
        "homological_criterion: need monic reciprocal of even degree");
  if (!symplectically_irreducible(q)) return {false, "symplectically reducible"};
  if (has_cyclotomic_factor(q)) return {false, "cyclotomic factor"};
  if (power_substitution_index(q) != 1) return {false, "polynomial in x^k"};
  return {true, ""};
}

// The realization of a bi-Perron unit as the action on homology of some
// mapping class: p itself when reciprocal, else p times its reversal.
inline ZPoly realize_bi_perron(const ZPoly& p) {
  if (!p.is_monic() || !is_irreducible_over_Q(p) || !is_unit(p) || !is_bi_perron(p))
    throw std::invalid_argument("realize_bi_perron: need an irreducible bi-Perron unit");
  return is_reciprocal(p) ? p : p * reverse(p);
}

enum class BirmanCase {
  IRREDUCIBLE_SAF_NONZERO,
  SYMPL_IRRED_SAF_ZERO,
  SYMPL_REDUCIBLE_SMALL_TRACE_FIELD,
};

// Trichotomy for the degree-2g reciprocal characteristic polynomial of an
// orientable pseudo-Anosov map: irreducible (SAF nonzero), reducible but
// symplectically irreducible (SAF zero), or symplectically reducible
// (trace field of degree < g).
inline BirmanCase birman_trichotomy(const ZPoly& s, int g) {
  if (!s.is_monic() || s.degree() != 2 * g || !is_reciprocal(s))
    throw std::invalid_argument("birman_trichotomy: need monic reciprocal of degree 2g");
  if (is_irreducible_over_Q(s)) return BirmanCase::IRREDUCIBLE_SAF_NONZERO;
  if (symplectically_irreducible(s)) return BirmanCase::SYMPL_IRRED_SAF_ZERO;
  return BirmanCase::SYMPL_REDUCIBLE_SMALL_TRACE_FIELD;
}

}  // namespace safzero

// Exact factorization of integer polynomials.
//
// Strategy, sized for the degrees that occur here (<= ~24): squarefree
// decomposition (Yun), then factorization of each squarefree part modulo
// a single prime chosen larger than twice the Landau-Mignotte coefficient
// bound, followed by exhaustive subset recombination with exact trial
// division over Z.  With such a prime the modular factors already carry
// the integer factors' coefficients, so no Hensel stage is needed.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace safzero {
namespace detail {

// Dense polynomial over Z/pZ, coefficients normalized to [0, p).
struct PPoly {
  std::vector<Int> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

inline PPoly modp_from(const ZPoly& f, const Int& p) {
  PPoly r;
  r.c.resize(f.coeffs().size());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    mpz_mod(r.c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), p.get_mpz_t());
  r.trim();
  return r;
}

inline PPoly modp_mul(const PPoly& a, const PPoly& b, const Int& p) {
  if (a.is_zero() || b.is_zero()) return {};
  PPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  for (auto& v : r.c) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  r.trim();
  return r;
}

inline Int modp_inv(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::logic_error("modp_inv: not invertible");
  return r;
}

// Remainder of a by b mod p; b must be nonzero.
inline PPoly modp_rem(PPoly a, const PPoly& b, const Int& p) {
  Int binv = modp_inv(b.c.back(), p);
  while (a.degree() >= b.degree() && !a.is_zero()) {
    Int q = a.c.back() * binv % p;
    std::size_t shift = a.c.size() - b.c.size();
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      a.c[shift + i] -= q * b.c[i];
      mpz_mod(a.c[shift + i].get_mpz_t(), a.c[shift + i].get_mpz_t(), p.get_mpz_t());
    }
    a.trim();
  }
  return a;
}

inline PPoly modp_gcd(PPoly a, PPoly b, const Int& p) {
  while (!b.is_zero()) {
    PPoly r = modp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Int inv = modp_inv(a.c.back(), p);
    for (auto& v : a.c) v = v * inv % p;
  }
  return a;
}

inline PPoly modp_monic(PPoly a, const Int& p) {
  if (a.is_zero()) return a;
  Int inv = modp_inv(a.c.back(), p);
  for (auto& v : a.c) v = v * inv % p;
  return a;
}

inline PPoly modp_derivative(const PPoly& a, const Int& p) {
  PPoly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = Int(i) * a.c[i] % p;
  r.trim();
  return r;
}

// base^e mod (f, p), square-and-multiply over the quotient ring.
inline PPoly modp_powmod(PPoly base, Int e, const PPoly& f, const Int& p) {
  PPoly result;
  result.c = {Int(1)};
  base = modp_rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = modp_rem(modp_mul(result, base, p), f, p);
    base = modp_rem(modp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Cantor-Zassenhaus over a large odd prime.  Deterministically seeded so
// failures are reproducible.
class ModFactorizer {
 public:
  ModFactorizer(const Int& p, unsigned long seed) : p_(p) {
    gmp_randinit_mt(rng_);
    gmp_randseed_ui(rng_, seed);
  }
  ~ModFactorizer() { gmp_randclear(rng_); }

  // f must be monic squarefree mod p.  Returns monic irreducible factors.
  std::vector<PPoly> factor(const PPoly& f) {
    std::vector<PPoly> out;
    // distinct-degree stage
    PPoly rem = f;
    PPoly xpow;  // x^{p^d} mod f, tracked incrementally against the original f
    xpow.c = {Int(0), Int(1)};
    for (int d = 1; rem.degree() > 0; ++d) {
      if (rem.degree() < 2 * d) {  // remainder is itself irreducible
        out.push_back(modp_monic(rem, p_));
        break;
      }
      xpow = modp_powmod(std::move(xpow), p_, f, p_);
      PPoly xq_minus_x = xpow;
      sub_x(xq_minus_x);
      PPoly g = modp_gcd(rem, xq_minus_x, p_);
      if (g.degree() > 0) {
        equal_degree_split(g, d, out);
        rem = exact_div(rem, g);
      }
    }
    return out;
  }

 private:
  void sub_x(PPoly& a) const {
    if (a.c.size() < 2) a.c.resize(2, Int(0));
    a.c[1] = (a.c[1] - 1 + p_) % p_;
    a.trim();
  }

  PPoly exact_div(const PPoly& a, const PPoly& b) const {
    // both monic; standard synthetic division
    PPoly q, r = a;
    q.c.assign(a.c.size() - b.c.size() + 1, Int(0));
    while (r.degree() >= b.degree() && !r.is_zero()) {
      Int qc = r.c.back();
      std::size_t shift = r.c.size() - b.c.size();
      q.c[shift] = qc;
      for (std::size_t i = 0; i < b.c.size(); ++i) {
        r.c[shift + i] -= qc * b.c[i];
        mpz_mod(r.c[shift + i].get_mpz_t(), r.c[shift + i].get_mpz_t(), p_.get_mpz_t());
      }
      r.trim();
    }
    return q;
  }

  // g: product of irreducibles all of degree d; split recursively.
  void equal_degree_split(const PPoly& g, int d, std::vector<PPoly>& out) {
    if (g.degree() == d) {
      out.push_back(modp_monic(g, p_));
      return;
    }
    Int e = (pow_int(p_, d) - 1) / 2;
    while (true) {
      PPoly a = random_poly(g.degree());
      PPoly b = modp_powmod(std::move(a), e, g, p_);
      if (b.is_zero()) continue;
      b.c[0] = (b.c[0] - 1 + p_) % p_;  // a^e - 1
      b.trim();
      PPoly h = modp_gcd(g, b, p_);
      if (h.degree() > 0 && h.degree() < g.degree()) {
        equal_degree_split(h, d, out);
        equal_degree_split(exact_div(g, h), d, out);
        return;
      }
    }
  }

  static Int pow_int(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }

  PPoly random_poly(int deg_bound) {
    PPoly a;
    a.c.resize(deg_bound);
    for (auto& v : a.c) mpz_urandomm(v.get_mpz_t(), rng_, p_.get_mpz_t());
    a.trim();
    if (a.is_zero()) a.c = {Int(1)};
    return a;
  }

  Int p_;
  gmp_randstate_t rng_;
};

inline Int symmetric_lift(const Int& v, const Int& p) {
  return 2 * v > p ? Int(v - p) : v;
}

inline ZPoly lift_symmetric(const PPoly& f, const Int& p) {
  std::vector<Int> c(f.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = symmetric_lift(f.c[i], p);
  return ZPoly(std::move(c));
}

// Factor a primitive squarefree polynomial of degree >= 1 into irreducible
// primitive factors with positive leading coefficients.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (f.degree() == 1) {
    ZPoly g = f;
    if (g.lc() < 0) g = -g;
    return {g};
  }
  // Landau-Mignotte: any factor of f has |coeff| <= 2^n * ||f||_2; candidate
  // products are rescaled by lc(f), so budget for that too.
  Int norm2_sq = 0;
  for (const auto& v : f.coeffs()) norm2_sq += v * v;
  Int norm2 = sqrt(norm2_sq) + 1;
  Int bound = (Int(1) << (f.degree() + 1)) * norm2 * abs(f.lc());
  Int p = 2 * bound + 1;
  detail::PPoly fp;
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (f.lc() % p == 0) continue;
    fp = modp_monic(modp_from(f, p), p);
    detail::PPoly d = modp_derivative(fp, p);
    if (modp_gcd(fp, d, p).degree() == 0) break;  // squarefree mod p
  }

  ModFactorizer mf(p, 0xC0FFEEu);
  std::vector<PPoly> mod_factors = mf.factor(fp);
  if (mod_factors.size() == 1) {
    ZPoly g = f;
    if (g.lc() < 0) g = -g;
    return {g};
  }

  // Exhaustive recombination by increasing subset size.
  std::vector<ZPoly> out;
  ZPoly rem = f;
  std::vector<bool> used(mod_factors.size(), false);
  std::size_t live = mod_factors.size();
  for (std::size_t take = 1; take <= live; ++take) {
    bool restart = true;
    while (restart) {
      restart = false;
      // enumerate subsets of the unused factors of size `take`
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < mod_factors.size(); ++i)
        if (!used[i]) pool.push_back(i);
      if (pool.size() < take) break;
      std::vector<std::size_t> sel(take);
      for (std::size_t i = 0; i < take; ++i) sel[i] = i;
      while (true) {
        PPoly prod;
        prod.c = {Int(1)};
        for (std::size_t i : sel) prod = modp_mul(prod, mod_factors[pool[i]], p);
        // scale by lc(rem) and lift symmetrically
        for (auto& v : prod.c) v = v * rem.lc() % p;
        ZPoly cand = lift_symmetric(prod, p).primitive_part();
        if (!cand.is_zero() && rem.divisible_by(cand)) {
          out.push_back(cand);
          rem = rem.divexact(cand);
          for (std::size_t i : sel) used[pool[i]] = true;
          live -= take;
          restart = true;
          break;
        }
        // next combination
        std::size_t k = take;
        while (k > 0 && sel[k - 1] == pool.size() - take + (k - 1)) --k;
        if (k == 0) break;
        ++sel[k - 1];
        for (std::size_t i = k; i < take; ++i) sel[i] = sel[i - 1] + 1;
      }
    }
  }
  if (rem.degree() > 0) {
    ZPoly g = rem;
    if (g.lc() < 0) g = -g;
    out.push_back(g);
  }
  return out;
}

}  // namespace detail

// Irreducible primitive factors with positive leading coefficients and
// multiplicities, ordered by degree then lexicographically on coefficients.
// The content (including sign) is dropped; the product of the factors equals
// the input up to a rational constant.
inline std::vector<std::pair<ZPoly, int>> factor_over_Z(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_over_Z: zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly f = p.primitive_part();
  if (f.degree() < 1) return out;

  // Yun's squarefree decomposition.
  ZPoly d = f.derivative();
  ZPoly a = gcd_z(f, d);
  ZPoly b = f.divexact(a);          // product of distinct irreducible factors
  ZPoly c = d.divexact(a);
  int mult = 1;
  while (b.degree() >= 1) {
    ZPoly diff = c - b.derivative();
    ZPoly g = gcd_z(b, diff);       // factors of multiplicity exactly `mult`
    if (g.degree() >= 1)
      for (ZPoly& h : detail::factor_squarefree(g)) out.emplace_back(std::move(h), mult);
    b = b.divexact(g);
    c = diff.divexact(g);
    ++mult;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_irreducible_over_Q(const ZPoly& p) {
  if (p.degree() < 1) return false;
  auto fs = factor_over_Z(p);
  return fs.size() == 1 && fs[0].second == 1;
}

// True iff some cyclotomic polynomial divides p (p has a root of unity).
inline bool has_cyclotomic_factor(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("has_cyclotomic_factor: zero polynomial");
  int deg = p.degree();
  if (deg < 1) return false;
  // phi(n) >= sqrt(n/2), so phi(n) <= deg forces n <= 2 deg^2.
  for (int n = 1; n <= 2 * deg * deg; ++n) {
    ZPoly phi = cyclotomic(n);
    if (phi.degree() > deg) continue;
    if (p.divisible_by(phi)) return true;
  }
  return false;
}

}  // namespace safzero

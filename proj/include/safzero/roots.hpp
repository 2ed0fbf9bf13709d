// Certified real-root machinery: Sturm chains, isolation of real roots
// with rational endpoints, Cauchy indices, and exact counting of
// polynomial roots inside a disk (via the Moebius map to a half plane and
// a Routh-style Cauchy-index computation).  No floating point anywhere.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace safzero {

// f0 = f, f1 = f', then negated remainders down to the gcd.
inline std::vector<QPoly> sturm_chain(const QPoly& f, const QPoly& g) {
  std::vector<QPoly> chain;
  chain.push_back(f);
  chain.push_back(g);
  while (!chain.back().is_zero()) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = a.mod(b);
    chain.push_back(Rat(-1) * r);
  }
  chain.pop_back();
  return chain;
}

inline std::vector<QPoly> sturm_chain(const QPoly& f) {
  return sturm_chain(f, f.derivative());
}

inline int sign_of(const Rat& v) { return sgn(v); }

inline int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    int s = sgn(f.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// sign at +infinity (dir=+1) or -infinity (dir=-1)
inline int sign_at_infinity(const QPoly& f, int dir) {
  if (f.is_zero()) return 0;
  int s = sgn(f.lc());
  if (dir < 0 && f.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations_at_infinity(const std::vector<QPoly>& chain, int dir) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    int s = sign_at_infinity(f, dir);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Number of distinct real roots of f in (a, b]; f(a) and f(b) may be
// anything, multiplicities ignored.
inline int count_real_roots(const QPoly& f, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

inline int count_real_roots(const QPoly& f) {
  auto chain = sturm_chain(f);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

inline int count_real_roots(const ZPoly& f, const Rat& a, const Rat& b) {
  return count_real_roots(QPoly(f), a, b);
}

// Cauchy root bound: all complex roots have |z| <= 1 + max|c_i/c_n|.
inline Rat root_bound(const ZPoly& f) {
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rat v = abs(Rat(f.coeff(i), f.lc()));
    if (v > m) m = v;
  }
  return m + 1;
}

struct Interval {
  Rat lo, hi;
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

// Isolating intervals (lo, hi) for the distinct real roots of f, in
// increasing order, with f nonzero at every endpoint.
inline std::vector<Interval> isolate_real_roots(const ZPoly& f) {
  if (f.degree() < 1) return {};
  QPoly sf = QPoly(f);
  {
    QPoly g = gcd(sf, sf.derivative());
    if (g.degree() > 0) {
      QPoly q, r;
      sf.divmod(g, q, r);
      sf = q;  // squarefree part
    }
  }
  auto chain = sturm_chain(sf);
  Rat bound = root_bound(f);
  // nudge endpoints off roots
  auto safe_endpoint = [&](Rat x, int dir) {
    Rat step(1, 2);
    while (sgn(sf.eval(x)) == 0) {
      x += dir * step;
      step /= 2;
    }
    return x;
  };
  std::vector<Interval> out;
  struct Item {
    Rat lo, hi;
    int nroots;
  };
  Rat lo = safe_endpoint(-bound - 1, -1);
  Rat hi = safe_endpoint(bound + 1, +1);
  std::vector<Item> stack{{lo, hi, variations_at(chain, lo) - variations_at(chain, hi)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.nroots == 0) continue;
    if (it.nroots == 1) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    Rat m = (it.lo + it.hi) / 2;
    // move the cut off any root
    Rat step = (it.hi - it.lo) / 8;
    while (sgn(sf.eval(m)) == 0) {
      m += step;
      step /= 2;
    }
    int left = variations_at(chain, it.lo) - variations_at(chain, m);
    // push right first so output ends up sorted ascending
    stack.push_back({m, it.hi, it.nroots - left});
    stack.push_back({it.lo, m, left});
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

// One bisection step on an isolating interval of a squarefree polynomial;
// keeps exactly one root inside and endpoints off roots.
inline Interval refine_interval(const QPoly& sf, const std::vector<QPoly>& chain,
                                const Interval& iv) {
  Rat m = iv.mid();
  Rat step = iv.width() / 8;
  while (sgn(sf.eval(m)) == 0) {
    m += step;
    step /= 2;
  }
  int left = variations_at(chain, iv.lo) - variations_at(chain, m);
  return left == 1 ? Interval{iv.lo, m} : Interval{m, iv.hi};
}

inline Interval refine_to_width(const ZPoly& f, Interval iv, const Rat& width) {
  QPoly sf(f);
  {
    QPoly g = gcd(sf, sf.derivative());
    if (g.degree() > 0) {
      QPoly q, r;
      sf.divmod(g, q, r);
      sf = q;
    }
  }
  auto chain = sturm_chain(sf);
  while (iv.width() > width) iv = refine_interval(sf, chain, iv);
  return iv;
}

// Interval for the largest real root of f; throws if f has none.
inline Interval largest_real_root(const ZPoly& f) {
  auto ivs = isolate_real_roots(f);
  if (ivs.empty()) throw std::invalid_argument("largest_real_root: no real roots");
  return ivs.back();
}

// Cauchy index of num/den over the whole real line, by generalized Sturm
// chain; correct as long as num and den have no common real root.
inline int cauchy_index(const QPoly& den, const QPoly& num) {
  if (den.is_zero()) return 0;
  auto chain = sturm_chain(den, num);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

// Number of roots of p (with multiplicity) in the open left half plane.
// Precondition: no roots on the imaginary axis.
inline int left_half_plane_roots(const QPoly& p) {
  int n = p.degree();
  if (n <= 0) return 0;
  // p(iy) = U(y) + i V(y)
  std::vector<Rat> u(static_cast<std::size_t>(n) + 1, Rat(0));
  std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int k = 0; k <= n; ++k) {
    // i^k cycles 1, i, -1, -i
    switch (k % 4) {
      case 0: u[k] = p.coeff(k); break;
      case 1: v[k] = p.coeff(k); break;
      case 2: u[k] = -p.coeff(k); break;
      case 3: v[k] = -p.coeff(k); break;
    }
  }
  QPoly U{std::vector<Rat>(u)}, V{std::vector<Rat>(v)};
  int J = (n % 2 == 1) ? cauchy_index(V, U) : -cauchy_index(U, V);
  if ((n + J) % 2 != 0) throw std::logic_error("left_half_plane_roots: parity");
  return (n + J) / 2;
}

// Number of roots of p with |z| < r, counted with multiplicity, or nullopt
// if a root might lie on |z| = r (or at z = -r, which the Moebius map sends
// to infinity); callers perturb r and retry.
inline std::optional<int> count_roots_in_disk(const QPoly& p, const Rat& r) {
  int n = p.degree();
  if (n <= 0) return 0;
  // q(x) = p(r x): roots are roots of p scaled onto the unit-disk picture
  std::vector<Rat> qc(p.coeffs());
  Rat rp = 1;
  for (int i = 0; i <= n; ++i) {
    qc[i] *= rp;
    rp *= r;
  }
  QPoly q{std::move(qc)};
  if (sgn(q.eval(Rat(-1))) == 0 || sgn(q.eval(Rat(1))) == 0) return std::nullopt;
  // roots on |x| = 1 are shared with the coefficient-reversed polynomial
  std::vector<Rat> rev(q.coeffs().rbegin(), q.coeffs().rend());
  QPoly g = gcd(q, QPoly{std::move(rev)});
  if (g.degree() > 0) {
    // common roots need not be on the circle, but we do not try to decide
    return std::nullopt;
  }
  // P(w) = (1-w)^n q((1+w)/(1-w)); left half plane <-> inside of the disk
  QPoly P;
  QPoly one_plus{std::vector<Rat>{Rat(1), Rat(1)}};
  QPoly one_minus{std::vector<Rat>{Rat(1), Rat(-1)}};
  std::vector<QPoly> plus_pow(n + 1), minus_pow(n + 1);
  plus_pow[0] = QPoly{std::vector<Rat>{Rat(1)}};
  minus_pow[0] = plus_pow[0];
  for (int i = 1; i <= n; ++i) {
    plus_pow[i] = plus_pow[i - 1] * one_plus;
    minus_pow[i] = minus_pow[i - 1] * one_minus;
  }
  for (int j = 0; j <= n; ++j) {
    if (q.coeff(j) == 0) continue;
    P = P + q.coeff(j) * (plus_pow[j] * minus_pow[n - j]);
  }
  if (P.degree() != n) throw std::logic_error("count_roots_in_disk: degree drop");
  return left_half_plane_roots(P);
}

inline std::optional<int> count_roots_in_disk(const ZPoly& p, const Rat& r) {
  return count_roots_in_disk(QPoly(p), r);
}

}  // namespace safzero

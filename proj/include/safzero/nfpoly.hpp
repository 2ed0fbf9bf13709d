// Polynomials with coefficients in a real number field Q(theta), plus the
// root-location machinery (Sturm chains, Cauchy indices, unit-disk
// counting) over that field.  Mirrors the rational versions in roots.hpp;
// every sign decision goes through the certified nf_sign.

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "number_field.hpp"
#include "poly.hpp"

namespace safzero {

class NFPoly {
 public:
  NFPoly() = default;
  NFPoly(FieldPtr field, std::vector<NFElement> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }
  static NFPoly zero(const FieldPtr& f) { return NFPoly(f, {}); }
  static NFPoly constant(const FieldPtr& f, const NFElement& v) {
    return NFPoly(f, {v});
  }
  // p(s*x) for an integer polynomial p and a field element s
  static NFPoly scaled(const FieldPtr& f, const ZPoly& p, const NFElement& s) {
    std::vector<NFElement> c;
    NFElement pw = NFElement::from_rational(f, 1);
    for (int i = 0; i <= p.degree(); ++i) {
      c.push_back(Rat(p.coeff(i)) * pw);
      pw = pw * s;
    }
    return NFPoly(f, std::move(c));
  }

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const NFElement& lc() const {
    if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
  }
  NFElement coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : NFElement::from_rational(field_, 0);
  }

  friend NFPoly operator+(const NFPoly& a, const NFPoly& b) {
    std::vector<NFElement> c;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return NFPoly(a.field_, std::move(c));
  }
  friend NFPoly operator-(const NFPoly& a, const NFPoly& b) {
    std::vector<NFElement> c;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return NFPoly(a.field_, std::move(c));
  }
  friend NFPoly operator*(const NFPoly& a, const NFPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field_ ? a.field_ : b.field_);
    std::vector<NFElement> c(a.c_.size() + b.c_.size() - 1,
                             NFElement::from_rational(a.field_, 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return NFPoly(a.field_, std::move(c));
  }
  friend NFPoly operator*(const NFElement& s, const NFPoly& a) {
    std::vector<NFElement> c(a.c_);
    for (auto& v : c) v = s * v;
    return NFPoly(a.field_, std::move(c));
  }
  friend NFPoly operator*(const Rat& s, const NFPoly& a) {
    std::vector<NFElement> c(a.c_);
    for (auto& v : c) v = s * v;
    return NFPoly(a.field_, std::move(c));
  }

  NFElement eval(const NFElement& x) const {
    NFElement r = NFElement::from_rational(field_, 0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  NFPoly derivative() const {
    if (c_.size() <= 1) return zero(field_);
    std::vector<NFElement> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(Rat(i) * c_[i]);
    return NFPoly(field_, std::move(c));
  }

  NFPoly monic() const {
    if (is_zero()) return *this;
    return nf_inverse(lc()) * *this;
  }

  void divmod(const NFPoly& b, NFPoly& q, NFPoly& r) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<NFElement> rem(c_);
    auto trim_vec = [](std::vector<NFElement>& v) {
      while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim_vec(rem);
    int db = b.degree();
    std::vector<NFElement> quot;
    if (static_cast<int>(rem.size()) - 1 >= db)
      quot.assign(rem.size() - db, NFElement::from_rational(field_, 0));
    NFElement binv = nf_inverse(b.lc());
    while (static_cast<int>(rem.size()) - 1 >= db) {
      NFElement qc = rem.back() * binv;
      std::size_t shift = rem.size() - 1 - db;
      quot[shift] = qc;
      for (int i = 0; i <= db; ++i) rem[shift + i] = rem[shift + i] - qc * b.c_[i];
      rem.pop_back();  // leading term cancels exactly
      trim_vec(rem);
    }
    q = NFPoly(field_, std::move(quot));
    r = NFPoly(field_, std::move(rem));
  }
  NFPoly mod(const NFPoly& b) const {
    NFPoly q, r;
    divmod(b, q, r);
    return r;
  }
  // Exact division; throws if the remainder is nonzero.
  NFPoly divexact(const NFPoly& b) const {
    NFPoly q, r;
    divmod(b, q, r);
    if (!r.is_zero()) throw std::invalid_argument("NFPoly::divexact: not divisible");
    return q;
  }

  // x^n p(1/x), monic-normalized; p(0) must be nonzero.
  NFPoly reversed() const {
    if (is_zero() || c_.front().is_zero())
      throw std::invalid_argument("NFPoly::reversed: p(0) must be nonzero");
    std::vector<NFElement> c(c_.rbegin(), c_.rend());
    return NFPoly(field_, std::move(c)).monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  FieldPtr field_;
  std::vector<NFElement> c_;
};

inline NFPoly nf_gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly f = a, g = b;
  while (!g.is_zero()) {
    NFPoly r = f.mod(g);
    f = g;
    g = r;
  }
  return f.monic();
}

inline std::vector<NFPoly> nf_sturm_chain(const NFPoly& f, const NFPoly& g) {
  std::vector<NFPoly> chain{f, g};
  while (!chain.back().is_zero()) {
    const NFPoly& x = chain[chain.size() - 2];
    NFPoly r = x.mod(chain.back());
    chain.push_back(Rat(-1) * r);
  }
  chain.pop_back();
  return chain;
}

inline int nf_sign_at_infinity(const NFPoly& f, int dir) {
  if (f.is_zero()) return 0;
  int s = nf_sign(f.lc());
  if (dir < 0 && f.degree() % 2 == 1) s = -s;
  return s;
}

inline int nf_variations_at_infinity(const std::vector<NFPoly>& chain, int dir) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    int s = nf_sign_at_infinity(f, dir);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

inline int nf_variations_at(const std::vector<NFPoly>& chain, const NFElement& x) {
  int var = 0, last = 0;
  for (const auto& f : chain) {
    int s = nf_sign(f.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Distinct real roots of f in (a, b).  f must not vanish at a or b.
inline int nf_count_real_roots(const NFPoly& f, const NFElement& a, const NFElement& b) {
  if (nf_sign(f.eval(a)) == 0 || nf_sign(f.eval(b)) == 0)
    throw std::invalid_argument("nf_count_real_roots: root at endpoint");
  NFPoly sf = f;
  NFPoly g = nf_gcd(f, f.derivative());
  if (g.degree() > 0) sf = f.divexact(g);
  auto chain = nf_sturm_chain(sf, sf.derivative());
  return nf_variations_at(chain, a) - nf_variations_at(chain, b);
}

inline int nf_cauchy_index(const NFPoly& den, const NFPoly& num) {
  if (den.is_zero()) return 0;
  auto chain = nf_sturm_chain(den, num);
  return nf_variations_at_infinity(chain, -1) - nf_variations_at_infinity(chain, +1);
}

// Roots in the open left half plane; no roots may lie on the imaginary
// axis.
inline int nf_left_half_plane_roots(const NFPoly& p) {
  int n = p.degree();
  if (n <= 0) return 0;
  const FieldPtr& f = p.field();
  std::vector<NFElement> u(n + 1, NFElement::from_rational(f, 0));
  std::vector<NFElement> v(n + 1, NFElement::from_rational(f, 0));
  for (int k = 0; k <= n; ++k) {
    switch (k % 4) {
      case 0: u[k] = p.coeff(k); break;
      case 1: v[k] = p.coeff(k); break;
      case 2: u[k] = -p.coeff(k); break;
      case 3: v[k] = -p.coeff(k); break;
    }
  }
  NFPoly U(f, std::move(u)), V(f, std::move(v));
  int J = (n % 2 == 1) ? nf_cauchy_index(V, U) : -nf_cauchy_index(U, V);
  if ((n + J) % 2 != 0) throw std::logic_error("nf_left_half_plane_roots: parity");
  return (n + J) / 2;
}

// Roots of p with |z| < 1, with multiplicity; nullopt if p vanishes at
// +-1 or shares a root with its reversal (which covers every possibility
// of a root on the unit circle).
inline std::optional<int> nf_count_roots_in_unit_disk(const NFPoly& p) {
  int n = p.degree();
  if (n <= 0) return 0;
  const FieldPtr& f = p.field();
  NFElement one = NFElement::from_rational(f, 1);
  NFElement mone = NFElement::from_rational(f, -1);
  if (nf_sign(p.eval(one)) == 0 || nf_sign(p.eval(mone)) == 0) return std::nullopt;
  std::vector<NFElement> rev;
  for (int i = n; i >= 0; --i) rev.push_back(p.coeff(i));
  if (nf_gcd(p, NFPoly(f, std::move(rev))).degree() > 0) return std::nullopt;
  // Moebius x = (1+w)/(1-w): P(w) = (1-w)^n p((1+w)/(1-w))
  NFPoly one_plus(f, {one, one});
  NFPoly one_minus(f, {one, mone});
  std::vector<NFPoly> pp(n + 1), mp(n + 1);
  pp[0] = NFPoly::constant(f, one);
  mp[0] = pp[0];
  for (int i = 1; i <= n; ++i) {
    pp[i] = pp[i - 1] * one_plus;
    mp[i] = mp[i - 1] * one_minus;
  }
  NFPoly P = NFPoly::zero(f);
  for (int j = 0; j <= n; ++j) {
    if (p.coeff(j).is_zero()) continue;
    P = P + p.coeff(j) * (pp[j] * mp[n - j]);
  }
  if (P.degree() != n)
    throw std::logic_error("nf_count_roots_in_unit_disk: degree drop");
  return nf_left_half_plane_roots(P);
}

}  // namespace safzero

// Exact integer and rational polynomial arithmetic.
//
// ZPoly stores arbitrary-precision integer coefficients, constant term
// first, with no trailing zeros (the zero polynomial has an empty
// coefficient vector).  QPoly is the rational analogue used wherever
// field division is needed (gcd, Sturm chains, number-field reduction).

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace safzero {

using Int = mpz_class;
using Rat = mpq_class;

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  ZPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static ZPoly zero() { return ZPoly{}; }
  static ZPoly one() { return ZPoly{1}; }
  // x^n with coefficient a.
  static ZPoly monomial(std::size_t n, Int a = 1) {
    std::vector<Int> c(n + 1, Int(0));
    c[n] = std::move(a);
    return ZPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& lc() const {
    if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
  }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
  // Lexicographic by (degree, coefficient sequence); used for the
  // deterministic factor ordering.
  friend bool operator<(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ZPoly(std::move(c));
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ZPoly(std::move(c));
  }
  friend ZPoly operator-(const ZPoly& a) {
    std::vector<Int> c(a.c_);
    for (auto& v : c) v = -v;
    return ZPoly(std::move(c));
  }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly{};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(c));
  }
  friend ZPoly operator*(const Int& s, const ZPoly& a) {
    if (s == 0) return ZPoly{};
    std::vector<Int> c(a.c_);
    for (auto& v : c) v *= s;
    return ZPoly(std::move(c));
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  ZPoly derivative() const {
    if (c_.size() <= 1) return ZPoly{};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
    return ZPoly(std::move(c));
  }

  // gcd of |coefficients|; content of the zero polynomial is 0.
  Int content() const {
    Int g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }
  ZPoly primitive_part() const {
    if (is_zero()) return ZPoly{};
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> c(c_);
    for (auto& v : c) v /= g;
    return ZPoly(std::move(c));
  }

  // Exact division; throws if b does not divide *this over Z.
  ZPoly divexact(const ZPoly& b) const {
    ZPoly q, r;
    if (!try_divide(b, q, r) || !r.is_zero())
      throw std::invalid_argument("divexact: not divisible");
    return q;
  }
  // True iff b divides *this in Z[x].
  bool divisible_by(const ZPoly& b) const {
    ZPoly q, r;
    return try_divide(b, q, r) && r.is_zero();
  }

  // Attempts integer long division *this = q*b + r with deg r < deg b.
  // Fails (returns false) when a leading-coefficient division is inexact.
  bool try_divide(const ZPoly& b, ZPoly& q, ZPoly& r) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Int> rem(c_);
    std::vector<Int> quot;
    int db = b.degree();
    if (degree() >= db) quot.assign(degree() - db + 1, Int(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (static_cast<int>(rem.size()) - 1 < db) break;
      Int qc, rr;
      mpz_tdiv_qr(qc.get_mpz_t(), rr.get_mpz_t(), rem.back().get_mpz_t(),
                  b.lc().get_mpz_t());
      if (rr != 0) return false;
      std::size_t shift = rem.size() - 1 - db;
      quot[shift] = qc;
      for (int i = 0; i <= db; ++i) rem[shift + i] -= qc * b.c_[i];
    }
    q = ZPoly(std::move(quot));
    r = ZPoly(std::move(rem));
    return true;
  }

  std::string str() const;  // human-readable, e.g. "x^3-6x^2+5x-1"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

inline std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Int a = coeff(i);
    if (a == 0) continue;
    bool neg = a < 0;
    Int abs_a = neg ? Int(-a) : a;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    bool show_coeff = (abs_a != 1) || i == 0;
    if (show_coeff) s += abs_a.get_str();
    if (i > 0) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit QPoly(const ZPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lc() const {
    if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
  }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return QPoly(std::move(c));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return QPoly(std::move(c));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
  }
  friend QPoly operator*(const Rat& s, const QPoly& a) {
    if (s == 0) return QPoly{};
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v *= s;
    return QPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return QPoly{};
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(i) * c_[i];
    return QPoly(std::move(c));
  }

  QPoly monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / lc();
    return inv * *this;
  }

  void divmod(const QPoly& b, QPoly& q, QPoly& r) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(c_);
    std::vector<Rat> quot;
    int db = b.degree();
    if (degree() >= db) quot.assign(degree() - db + 1, Rat(0));
    while (true) {
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (static_cast<int>(rem.size()) - 1 < db) break;
      Rat qc = rem.back() / b.lc();
      std::size_t shift = rem.size() - 1 - db;
      quot[shift] = qc;
      for (int i = 0; i <= db; ++i) rem[shift + i] -= qc * b.c_[i];
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
  }
  QPoly mod(const QPoly& b) const {
    QPoly q, r;
    divmod(b, q, r);
    return r;
  }

  // Clears denominators and the content: primitive integer polynomial
  // with positive leading coefficient (a rational multiple of *this).
  ZPoly primitive_z() const {
    if (is_zero()) return ZPoly{};
    Int den = 1;
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Rat s = c_[i] * den;
      c[i] = s.get_num();  // denominator is 1 after scaling
    }
    return ZPoly(std::move(c)).primitive_part();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly f = a, g = b;
  while (!g.is_zero()) {
    QPoly r = f.mod(g);
    f = g;
    g = r;
  }
  return f.monic();
}

// gcd in Z[x] of the primitive parts, returned primitive with positive
// leading coefficient.
inline ZPoly gcd_z(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  return gcd(QPoly(a), QPoly(b)).primitive_z();
}

// True iff the coefficient sequence is palindromic, c_i = c_{n-i}.
//
// Note: the usual typeset definition of "reciprocal" sometimes appears
// with indices shifted by one; the palindromic condition is the one every
// worked example here satisfies, and is what we use throughout.
inline bool is_reciprocal(const ZPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_reciprocal: zero polynomial");
  int n = p.degree();
  for (int i = 0; 2 * i <= n; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

// x^n p(1/x), normalized to positive leading coefficient.  The roots are
// exactly the inverses of the roots of p, so p(0) must be nonzero.
inline ZPoly reverse(const ZPoly& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw std::invalid_argument("reverse: p(0) must be nonzero");
  ZPoly r{std::vector<Int>(p.coeffs().rbegin(), p.coeffs().rend())};
  if (r.lc() < 0) r = -r;
  return r;
}

// Largest k such that p(x) = f(x^k) for some integer polynomial f;
// the gcd of all exponents carrying a nonzero coefficient, exponent 0
// excluded.
inline int power_substitution_index(const ZPoly& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("power_substitution_index: constant polynomial");
  int k = 0;
  for (int i = 1; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) k = std::gcd(k, i);
  return k;
}

// f(x^k): the inverse direction of the power substitution.
inline ZPoly substitute_power(const ZPoly& f, int k) {
  std::vector<Int> c(static_cast<std::size_t>(f.degree()) * k + 1, Int(0));
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i) * k] = f.coeff(i);
  return ZPoly(std::move(c));
}

// n-th cyclotomic polynomial, by exact division of x^n - 1.
inline ZPoly cyclotomic(int n) {
  static std::map<int, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly num = ZPoly::monomial(n) - ZPoly::one();
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = num.divexact(cyclotomic(d));
  }
  cache[n] = num;
  return num;
}

// Minimal polynomial trick for reciprocal polynomials: a palindromic p of
// even degree 2m can be written x^m q(x + 1/x); returns q (degree m).
inline ZPoly trace_polynomial(const ZPoly& p) {
  int n = p.degree();
  if (n % 2 != 0 || !is_reciprocal(p))
    throw std::invalid_argument("trace_polynomial: need reciprocal, even degree");
  int m = n / 2;
  // Reduce against w_j(x) = x^j (x + 1/x)^j ... classic descending scheme:
  // peel the leading coefficient times (x+1/x)^m, etc.
  QPoly rem(p);
  std::vector<Rat> q(m + 1, Rat(0));
  for (int j = m; j >= 0; --j) {
    // coefficient of x^{m+j} in rem is the coefficient of w^j in q
    Rat a = rem.coeff(m + j);
    q[j] = a;
    // subtract a * x^{m-j} (x^2+1)^j  (= a x^m (x+1/x)^j)
    ZPoly t = ZPoly::one();
    ZPoly x2p1{1, 0, 1};
    for (int i = 0; i < j; ++i) t = t * x2p1;
    t = ZPoly::monomial(m - j) * t;
    rem = rem - a * QPoly(t);
  }
  if (!rem.is_zero()) throw std::logic_error("trace_polynomial: reduction failed");
  std::vector<Int> zc(m + 1);
  for (int i = 0; i <= m; ++i) {
    if (q[i].get_den() != 1) throw std::logic_error("trace_polynomial: non-integer");
    zc[i] = q[i].get_num();
  }
  return ZPoly(std::move(zc));
}

}  // namespace safzero

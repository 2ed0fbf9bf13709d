// Number fields Q(theta) presented as Q[x] modulo a monic irreducible
// polynomial, together with a rational interval isolating the designated
// real root theta.  Elements are coordinate vectors in the power basis.
// Sign determination refines the isolating interval until interval
// evaluation of the coordinate polynomial has constant sign; this
// terminates because a nonzero reduced element cannot vanish at theta.

#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "roots.hpp"

namespace safzero {

class NumberField {
 public:
  NumberField(ZPoly modulus, Interval root_interval)
      : modulus_(std::move(modulus)), iv_(std::move(root_interval)) {
    if (!modulus_.is_monic())
      throw std::invalid_argument("NumberField: modulus must be monic");
    int slo = sgn(modulus_.eval(iv_.lo)), shi = sgn(modulus_.eval(iv_.hi));
    if (slo == 0 || shi == 0 || slo == shi)
      throw std::invalid_argument("NumberField: interval must bracket a root");
    if (count_real_roots(modulus_, iv_.lo, iv_.hi) != 1)
      throw std::invalid_argument("NumberField: interval must isolate one root");
  }

  int degree() const { return modulus_.degree(); }
  const ZPoly& modulus() const { return modulus_; }
  const Interval& root_interval() const { return iv_; }

  // A sub-interval of the original isolating interval, bisected until its
  // width is at most `width`.
  Interval refined_interval(Rat width) const {
    Interval iv = iv_;
    QPoly m(modulus_);
    while (iv.width() > width) {
      Rat mid = iv.mid();
      int sm = sgn(m.eval(mid));
      if (sm == 0) {  // rational root: degenerate degree-1 case
        Rat eps = iv.width() / 4;
        iv = {mid - eps, mid + eps};
        break;
      }
      if (sm == sgn(m.eval(iv.lo)))
        iv.lo = mid;
      else
        iv.hi = mid;
    }
    return iv;
  }

 private:
  ZPoly modulus_;
  Interval iv_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr field, std::vector<Rat> coords)
      : field_(std::move(field)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != field_->degree())
      throw std::invalid_argument("NFElement: coordinate count");
  }

  static NFElement from_rational(const FieldPtr& field, const Rat& v) {
    std::vector<Rat> c(field->degree(), Rat(0));
    if (!c.empty()) c[0] = v;
    return NFElement(field, std::move(c));
  }
  // The generator theta itself.
  static NFElement generator(const FieldPtr& field) {
    if (field->degree() < 2)
      return from_rational(field, Rat(-field->modulus().coeff(0)));
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return NFElement(field, std::move(c));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const NFElement& a, const NFElement& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

  friend NFElement operator+(const NFElement& a, const NFElement& b) {
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return NFElement(a.field_, std::move(c));
  }
  friend NFElement operator-(const NFElement& a, const NFElement& b) {
    std::vector<Rat> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return NFElement(a.field_, std::move(c));
  }
  friend NFElement operator-(const NFElement& a) {
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v = -v;
    return NFElement(a.field_, std::move(c));
  }
  friend NFElement operator*(const Rat& s, const NFElement& a) {
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v *= s;
    return NFElement(a.field_, std::move(c));
  }
  friend NFElement operator*(const NFElement& a, const NFElement& b) {
    const int n = a.field_->degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // reduce modulo the (monic) modulus
    const ZPoly& m = a.field_->modulus();
    for (int k = 2 * n - 2; k >= n; --k) {
      Rat lead = prod[k];
      if (lead == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < n; ++i) prod[k - n + i] -= lead * m.coeff(i);
    }
    prod.resize(n);
    return NFElement(a.field_, std::move(prod));
  }

  QPoly as_poly() const { return QPoly{std::vector<Rat>(c_)}; }

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

// Extended Euclid in Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
inline void extended_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly r0 = a, r1 = b;
  QPoly u0{std::vector<Rat>{Rat(1)}}, u1;
  QPoly v0, v1{std::vector<Rat>{Rat(1)}};
  while (!r1.is_zero()) {
    QPoly q, r;
    r0.divmod(r1, q, r);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  Rat inv = 1 / r0.lc();
  g = inv * r0;
  u = inv * u0;
  v = inv * v0;
}

inline NFElement nf_inverse(const NFElement& a) {
  if (a.is_zero()) throw std::domain_error("nf_inverse: division by zero");
  QPoly g, u, v;
  extended_gcd(a.as_poly(), QPoly(a.field()->modulus()), g, u, v);
  if (g.degree() != 0) throw std::logic_error("nf_inverse: modulus not irreducible?");
  // u * a == 1 (mod modulus); u may still need reduction
  QPoly red = u.mod(QPoly(a.field()->modulus()));
  std::vector<Rat> c(a.field()->degree(), Rat(0));
  for (int i = 0; i <= red.degree(); ++i) c[i] = red.coeff(i);
  return NFElement(a.field(), std::move(c));
}

// Exact sign of the real number a(theta).
inline int nf_sign(const NFElement& a) {
  if (a.is_zero()) return 0;
  QPoly g = a.as_poly();
  Interval iv = a.field()->root_interval();
  QPoly m(a.field()->modulus());
  int slo = sgn(m.eval(iv.lo));
  while (true) {
    // interval Horner: [lo,hi] enclosure of g over iv
    Rat lo = 0, hi = 0;
    for (int i = g.degree(); i >= 0; --i) {
      // multiply [lo,hi] by [iv.lo, iv.hi]
      Rat p1 = lo * iv.lo, p2 = lo * iv.hi, p3 = hi * iv.lo, p4 = hi * iv.hi;
      Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
      Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
      lo = nlo + g.coeff(i);
      hi = nhi + g.coeff(i);
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    // refine the isolating interval and retry
    Rat mid = iv.mid();
    int sm = sgn(m.eval(mid));
    if (sm == 0) throw std::logic_error("nf_sign: rational root of irreducible modulus");
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

inline bool nf_positive(const NFElement& a) { return nf_sign(a) > 0; }
inline int nf_compare(const NFElement& a, const NFElement& b) { return nf_sign(a - b); }

// Basis of the right nullspace of a matrix of NFElements (all sharing one
// field), by Gaussian elimination.  May be empty.
inline std::vector<std::vector<NFElement>> nf_nullspace(
    std::vector<std::vector<NFElement>> m, const FieldPtr& field) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][col].is_zero()) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    NFElement inv = nf_inverse(m[r][col]);
    for (std::size_t j = col; j < cols; ++j) m[r][j] = inv * m[r][j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      NFElement f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    is_pivot[col] = true;
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<std::vector<NFElement>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<NFElement> v(cols, NFElement::from_rational(field, Rat(0)));
    v[free_col] = NFElement::from_rational(field, Rat(1));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[pivot_col_of_row[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Minimal polynomial of alpha + 1/alpha, alpha any root of the irreducible
// polynomial p with p(0) != 0.  Returned primitive with positive leading
// coefficient (monic in all the unit cases that occur here).
inline ZPoly trace_min_poly(const ZPoly& p) {
  if (p.degree() < 1 || p.coeff(0) == 0)
    throw std::invalid_argument("trace_min_poly: need p irreducible, p(0) != 0");
  const int n = p.degree();
  QPoly mod(p);
  mod = mod.monic();
  // x^{-1} mod p
  QPoly g, u, v;
  QPoly x{std::vector<Rat>{Rat(0), Rat(1)}};
  extended_gcd(x, mod, g, u, v);
  if (g.degree() != 0) throw std::invalid_argument("trace_min_poly: p(0) == 0");
  QPoly xinv = u.mod(mod);
  QPoly beta = (x + xinv).mod(mod);
  // powers of beta in the power basis; stop at the first linear dependency
  std::vector<std::vector<Rat>> rows;  // rows[k] = coords of beta^k
  QPoly pw{std::vector<Rat>{Rat(1)}};
  for (int k = 0; k <= n; ++k) {
    std::vector<Rat> row(n, Rat(0));
    for (int i = 0; i <= pw.degree(); ++i) row[i] = pw.coeff(i);
    // try to express row as a combination of previous rows (elimination)
    std::vector<std::vector<Rat>> m = rows;
    m.push_back(row);
    // solve: is the new row in the span?  Reduce a copy of the stack.
    std::vector<std::vector<Rat>> basis = rows;
    std::vector<Rat> coeffs(rows.size(), Rat(0));
    std::vector<Rat> work = row;
    // reduce `work` against the (already triangular-ized) basis
    // simpler: full Gaussian solve of basis^T * a = work
    {
      const std::size_t kk = basis.size();
      // build augmented matrix (n x (kk+1))
      std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(kk + 1, Rat(0)));
      for (std::size_t jc = 0; jc < kk; ++jc)
        for (int i = 0; i < n; ++i) aug[i][jc] = basis[jc][i];
      for (int i = 0; i < n; ++i) aug[i][kk] = work[i];
      std::size_t rr = 0;
      std::vector<int> pivots;
      for (std::size_t col = 0; col < kk && rr < static_cast<std::size_t>(n); ++col) {
        std::size_t sel = n;
        for (std::size_t i = rr; i < static_cast<std::size_t>(n); ++i)
          if (aug[i][col] != 0) { sel = i; break; }
        if (sel == static_cast<std::size_t>(n)) continue;
        std::swap(aug[sel], aug[rr]);
        Rat inv = 1 / aug[rr][col];
        for (std::size_t j = col; j <= kk; ++j) aug[rr][j] *= inv;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
          if (i == rr || aug[i][col] == 0) continue;
          Rat f = aug[i][col];
          for (std::size_t j = col; j <= kk; ++j) aug[i][j] -= f * aug[rr][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++rr;
      }
      bool consistent = true;
      for (std::size_t i = rr; i < static_cast<std::size_t>(n); ++i)
        if (aug[i][kk] != 0) { consistent = false; break; }
      if (consistent && kk > 0) {
        // beta^k = sum coeffs[j] beta^j -> min poly found
        std::vector<Rat> a(kk, Rat(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) a[pivots[i]] = aug[i][kk];
        std::vector<Rat> mp(kk + 1, Rat(0));
        mp[kk] = 1;
        for (std::size_t j = 0; j < kk; ++j) mp[j] = -a[j];
        return QPoly{std::move(mp)}.primitive_z();
      }
    }
    rows.push_back(row);
    pw = (pw * beta).mod(mod);
  }
  throw std::logic_error("trace_min_poly: no dependency found");
}

}  // namespace safzero

// Exact integer matrices: products, determinants, characteristic
// polynomials (Faddeev-LeVerrier, all divisions exact), primitivity by
// boolean powers up to the Wielandt bound, and extraction of the
// irreducible factor of the characteristic polynomial vanishing on a
// given real interval.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "factor.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace safzero {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  bool nonnegative() const {
    for (const auto& v : a_)
      if (v < 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Monic characteristic polynomial det(xI - M), exact (Faddeev-LeVerrier;
// the division by k at each step is exact over Z).
inline ZPoly char_poly_exact(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("char_poly_exact: non-square");
  std::size_t n = M.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix Mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mk = M * Mk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += Mk(i, i);
    Int ck, rr;
    mpz_tdiv_qr(ck.get_mpz_t(), rr.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
    if (rr != 0) throw std::logic_error("char_poly_exact: inexact division");
    ck = -ck;
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) Mk(i, i) += ck;
  }
  return ZPoly(std::move(c));
}

inline Int det(const IntMatrix& M) {
  ZPoly cp = char_poly_exact(M);
  Int d = cp.coeff(0);
  return M.rows() % 2 == 0 ? d : Int(-d);
}

// Primitivity of a nonnegative matrix: some power is entrywise positive.
// By Wielandt's bound it suffices to look at the power (n-1)^2 + 1.
inline bool is_primitive(const IntMatrix& V) {
  if (V.rows() != V.cols()) throw std::invalid_argument("is_primitive: non-square");
  if (!V.nonnegative()) throw std::invalid_argument("is_primitive: negative entry");
  std::size_t n = V.rows();
  if (n == 1) return V(0, 0) > 0;
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = V(i, j) > 0;
  auto bool_mul = [n](const std::vector<std::vector<bool>>& x,
                      const std::vector<std::vector<bool>>& y) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (y[k][j]) r[i][j] = true;
    return r;
  };
  std::size_t e = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<bool>> acc(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = true;
  auto base = b;
  while (e > 0) {
    if (e & 1) acc = bool_mul(acc, base);
    base = bool_mul(base, base);
    e >>= 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!acc[i][j]) return false;
  return true;
}

// The irreducible factor of char_poly_exact(M) whose real root lies in the
// given interval.  The interval must single out exactly one factor.
inline ZPoly eigen_min_poly(const IntMatrix& M, const Interval& iv) {
  ZPoly cp = char_poly_exact(M);
  auto factors = factor_over_Z(cp);
  const ZPoly* hit = nullptr;
  for (const auto& [f, mult] : factors) {
    if (count_real_roots(f, iv.lo, iv.hi) > 0) {
      if (hit != nullptr)
        throw std::runtime_error("eigen_min_poly: isolation failure (several factors)");
      hit = &f;
    }
  }
  if (hit == nullptr)
    throw std::runtime_error("eigen_min_poly: isolation failure (no factor)");
  return *hit;
}

}  // namespace safzero

// The SAF invariant of an interval exchange, represented exactly.
//
// For lengths in a number field of degree n, the wedge sum over Q
//   sum_j lambda_j /\ t_j
// is expanded in the power basis 1, theta, ..., theta^{n-1}.  Because the
// basis elements are Q-linearly independent real numbers, the wedge
// vanishes iff the antisymmetric coordinate matrix does.

#pragma once

#include <stdexcept>
#include <vector>

#include "factor.hpp"
#include "iet.hpp"

namespace safzero {

struct SafTensor {
  FieldPtr field;
  std::vector<std::vector<Rat>> m;  // n x n, antisymmetric

  bool is_zero() const {
    for (const auto& row : m)
      for (const auto& v : row)
        if (v != 0) return false;
    return true;
  }
};

inline SafTensor saf_tensor(const LabeledPermutation& perm,
                            const std::vector<NFElement>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("saf_tensor: no lengths");
  const FieldPtr& field = lengths[0].field();
  int n = field->degree();
  auto t = translations(perm, lengths);
  SafTensor s{field, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0)))};
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    const auto& l = lengths[j].coords();
    const auto& tr = t[j].coords();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Rat v = l[a] * tr[b] - l[b] * tr[a];
        s.m[a][b] += v;
        s.m[b][a] -= v;
      }
  }
  return s;
}

// Theorem-level classifier: an orientable pseudo-Anosov map has vanishing
// SAF invariant iff the minimal polynomial of its dilatation is not
// reciprocal.
inline bool saf_zero_by_theorem1(const ZPoly& min_poly) {
  if (!is_irreducible_over_Q(min_poly))
    throw std::invalid_argument("saf_zero_by_theorem1: reducible input");
  return !is_reciprocal(min_poly);
}

// Q(alpha) = Q(alpha + 1/alpha) iff the trace minimal polynomial has full
// degree, which happens exactly when p is not reciprocal.
inline bool fields_equal_trace(const ZPoly& p) {
  return trace_min_poly(p).degree() == p.degree();
}

}  // namespace safzero

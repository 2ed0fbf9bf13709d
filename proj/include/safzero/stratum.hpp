// Stratum of the translation surfaces suspended over a permutation.
//
// The suspension polygon has top corners T_0..T_d and bottom corners
// B_0..B_d.  Gluing the top copy of each letter to its bottom copy
// identifies corner pairs; the two extreme corner pairs are identified as
// well.  Each resulting class is a cone point whose angle is 2*pi times
// the number of interior bottom corners it absorbs; order m means angle
// 2*pi*(m+1).

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permutation.hpp"

namespace safzero {

struct StratumProfile {
  std::vector<int> multiplicities;  // zero orders, sorted descending
  int genus = 0;
  int sigma = 0;

  friend bool operator==(const StratumProfile& a, const StratumProfile& b) {
    return a.multiplicities == b.multiplicities && a.genus == b.genus &&
           a.sigma == b.sigma;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  void unite(int a, int b) { p_[find(a)] = find(b); }

 private:
  std::vector<int> p_;
};

}  // namespace detail

inline StratumProfile stratum_of(const LabeledPermutation& perm) {
  if (!perm.is_irreducible())
    throw std::invalid_argument("stratum_of: reducible permutation");
  int d = perm.degree();
  // nodes: T_p = p, B_p = d + 1 + p, for p = 0..d
  auto T = [](int p) { return p; };
  auto B = [d](int p) { return d + 1 + p; };
  detail::UnionFind uf(2 * (d + 1));
  uf.unite(T(0), B(0));
  uf.unite(T(d), B(d));
  for (int a = 1; a <= d; ++a) {
    int p = perm.position_of(a);
    uf.unite(T(a - 1), B(p - 1));
    uf.unite(T(a), B(p));
  }
  // one zero per class; its order counts the interior bottom corners
  std::vector<int> count(2 * (d + 1), 0);
  for (int p = 1; p < d; ++p) ++count[uf.find(B(p))];
  StratumProfile s;
  std::vector<bool> seen(2 * (d + 1), false);
  for (int x = 0; x < 2 * (d + 1); ++x) {
    int r = uf.find(x);
    if (seen[r]) continue;
    seen[r] = true;
    s.multiplicities.push_back(count[r] - 1);
  }
  std::sort(s.multiplicities.rbegin(), s.multiplicities.rend());
  s.sigma = static_cast<int>(s.multiplicities.size());
  int total = 0;
  for (int m : s.multiplicities) total += m;
  s.genus = (total + 2) / 2;
  if (total % 2 != 0 || d != 2 * s.genus + s.sigma - 1)
    throw std::logic_error("stratum_of: inconsistent gluing data");
  return s;
}

}  // namespace safzero

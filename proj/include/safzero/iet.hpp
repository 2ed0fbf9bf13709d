// Interval exchange transformations with exact algebraic lengths, one
// step of Rauzy-Veech induction, and pointwise application.
//
// Induction type: 0 when the last top interval is strictly longer than the
// last bottom interval, 1 in the opposite case; equality leaves the
// induction undefined (the length datum violates the Keane condition).

#pragma once

#include <stdexcept>
#include <vector>

#include "number_field.hpp"
#include "permutation.hpp"

namespace safzero {

struct KeaneViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct IETState {
  LabeledPermutation perm;
  std::vector<NFElement> lengths;  // indexed by letter - 1

  void validate() const {
    if (static_cast<int>(lengths.size()) != perm.degree())
      throw std::invalid_argument("IETState: length count");
    for (const auto& l : lengths)
      if (nf_sign(l) <= 0) throw std::invalid_argument("IETState: nonpositive length");
  }
};

struct StepResult {
  IETState state;
  int type;
  int winner;  // letter, in the labels of the input permutation
};

inline StepResult dynamic_step(const IETState& T) {
  int d = T.perm.degree();
  const NFElement& top_last = T.lengths[d - 1];              // letter d
  const NFElement& bot_last = T.lengths[T.perm.bottom()[d - 1] - 1];
  int cmp = nf_compare(top_last, bot_last);
  if (cmp == 0) throw KeaneViolation("dynamic_step: equal last-interval lengths");
  int type = cmp > 0 ? 0 : 1;
  int w = T.perm.winner(type);
  std::vector<NFElement> nl(T.lengths);
  if (type == 0) {
    // letter labels unchanged; the winner d sheds the loser's length
    nl[d - 1] = nl[d - 1] - bot_last;
  } else {
    // relabel to the reduced form of the target vertex
    auto relabel = [&](int x) { return x <= w ? x : (x == d ? w + 1 : x + 1); };
    for (int x = 1; x <= d; ++x) nl[relabel(x) - 1] = T.lengths[x - 1];
    nl[w - 1] = nl[w - 1] - top_last;  // w is fixed by the relabeling
  }
  return {IETState{T.perm.rauzy(type), std::move(nl)}, type, w};
}

// Translation of each subinterval: interval j moves by the total bottom
// length preceding it minus the total top length preceding it.
inline std::vector<NFElement> translations(const LabeledPermutation& perm,
                                           const std::vector<NFElement>& lengths) {
  int d = perm.degree();
  const auto& b = perm.bottom();
  std::vector<int> pos(d + 1);  // bottom position of each letter
  for (int i = 0; i < d; ++i) pos[b[i]] = i + 1;
  std::vector<NFElement> t;
  t.reserve(d);
  for (int j = 1; j <= d; ++j) {
    NFElement acc = NFElement::from_rational(lengths[0].field(), Rat(0));
    for (int k = 1; k <= d; ++k) {
      if (pos[k] < pos[j]) acc = acc + lengths[k - 1];
      if (k < j) acc = acc - lengths[k - 1];
    }
    t.push_back(std::move(acc));
  }
  return t;
}

// Exact application of the IET at a non-discontinuity point.
inline NFElement iet_apply(const IETState& T, const NFElement& x) {
  int d = T.perm.degree();
  if (nf_sign(x) < 0) throw std::invalid_argument("iet_apply: point below range");
  auto trans = translations(T.perm, T.lengths);
  NFElement left = NFElement::from_rational(x.field(), Rat(0));
  for (int j = 1; j <= d; ++j) {
    NFElement right = left + T.lengths[j - 1];
    int cl = nf_compare(x, left), cr = nf_compare(x, right);
    if (j > 1 && cl == 0)
      throw std::invalid_argument("iet_apply: discontinuity point");
    if (cl >= 0 && cr < 0) return x + trans[j - 1];
    left = std::move(right);
  }
  throw std::invalid_argument("iet_apply: point beyond range");
}

}  // namespace safzero

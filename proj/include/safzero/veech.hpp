// Veech's construction as a certification pipeline: a primitive closed
// loop in a Rauzy diagram determines a pseudo-Anosov homeomorphism whose
// dilatation is the Perron root of the loop's transition matrix.  This
// header computes the exact Perron data over the trace field, validates
// the suspension datum, and assembles certificates; it also enumerates
// loops of bounded length.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "matrix.hpp"
#include "number_field.hpp"
#include "permutation.hpp"
#include "roots.hpp"
#include "saf.hpp"
#include "stratum.hpp"

namespace safzero {

struct NotPrimitive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PerronData {
  FieldPtr field;                  // modulus = minimal polynomial of theta
  NFElement theta;                 // the dilatation
  std::vector<NFElement> lengths;  // theta-eigenvector, positive, sum 1
  std::vector<NFElement> heights;  // theta^{-1}-eigenvector, first coordinate +1
};

inline PerronData perron_data(const IntMatrix& V, const LabeledPermutation& perm) {
  std::size_t d = V.rows();
  if (V.cols() != d || static_cast<int>(d) != perm.degree())
    throw std::invalid_argument("perron_data: dimension mismatch");
  if (!is_primitive(V)) throw NotPrimitive("perron_data: matrix not primitive");
  Int dt = det(V);
  if (dt != 1 && dt != -1)
    throw std::invalid_argument("perron_data: matrix not unimodular");

  Interval iv = largest_real_root(char_poly_exact(V));
  ZPoly mp = eigen_min_poly(V, iv);
  auto field = std::make_shared<NumberField>(mp, iv);
  NFElement theta = NFElement::generator(field);
  NFElement theta_inv = nf_inverse(theta);

  auto eigenvector = [&](const NFElement& ev) {
    std::vector<std::vector<NFElement>> m(
        d, std::vector<NFElement>(d, NFElement::from_rational(field, Rat(0))));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        m[i][j] = NFElement::from_rational(field, Rat(V(i, j)));
        if (i == j) m[i][j] = m[i][j] - ev;
      }
    auto basis = nf_nullspace(m, field);
    if (basis.size() != 1)
      throw DegenerateSpectrum("perron_data: eigenspace dimension != 1");
    return basis[0];
  };

  std::vector<NFElement> lengths = eigenvector(theta);
  NFElement sum = NFElement::from_rational(field, Rat(0));
  for (const auto& l : lengths) sum = sum + l;
  if (sum.is_zero()) throw DegenerateSpectrum("perron_data: zero-sum eigenvector");
  NFElement sinv = nf_inverse(sum);
  for (auto& l : lengths) l = sinv * l;
  for (const auto& l : lengths)
    if (nf_sign(l) <= 0)
      throw DegenerateSpectrum("perron_data: Perron eigenvector not positive");

  std::vector<NFElement> heights = eigenvector(theta_inv);
  if (heights[0].is_zero())
    throw DegenerateSpectrum("perron_data: vanishing designated height");
  NFElement hinv = nf_inverse(heights[0]);
  for (auto& h : heights) h = hinv * h;

  // exact eigen-identities as a self-check
  for (std::size_t i = 0; i < d; ++i) {
    NFElement accl = NFElement::from_rational(field, Rat(0));
    NFElement acch = accl;
    for (std::size_t j = 0; j < d; ++j) {
      accl = accl + Rat(V(i, j)) * lengths[j];
      acch = acch + Rat(V(i, j)) * heights[j];
    }
    if (!(accl - theta * lengths[i]).is_zero() ||
        !(acch - theta_inv * heights[i]).is_zero())
      throw std::logic_error("perron_data: eigen-identity failed");
  }
  return PerronData{field, theta, std::move(lengths), std::move(heights)};
}

// Suspension conditions on the imaginary parts: every proper top partial
// sum positive, every proper bottom partial sum negative.
inline bool check_suspension(const LabeledPermutation& perm,
                             const std::vector<NFElement>& lengths,
                             const std::vector<NFElement>& heights) {
  int d = perm.degree();
  if (static_cast<int>(lengths.size()) != d || static_cast<int>(heights.size()) != d)
    throw std::invalid_argument("check_suspension: dimension mismatch");
  const FieldPtr& f = heights[0].field();
  NFElement top = NFElement::from_rational(f, Rat(0));
  NFElement bot = top;
  for (int k = 1; k < d; ++k) {
    top = top + heights[k - 1];
    bot = bot + heights[perm.bottom()[k - 1] - 1];
    if (nf_sign(top) <= 0 || nf_sign(bot) >= 0) return false;
  }
  return true;
}

struct PseudoAnosovCertificate {
  LoopWord loop;
  IntMatrix matrix;
  ZPoly char_poly;
  ZPoly min_poly;
  PerronData dilatation;
  StratumProfile stratum;
  bool hyperelliptic = false;
  bool saf_zero_thm1 = false;
  std::optional<bool> saf_tensor_zero;
  bool suspension_ok = false;
};

// The loop inducing the inverse pseudo-Anosov map: same edges in the
// transposed diagram, so the base transposes and every type flips.  The
// transition matrix is conjugate-transposed, leaving the characteristic
// polynomial (hence the dilatation) unchanged.
inline LoopWord dual_loop(const LoopWord& loop) {
  std::vector<int> sw(loop.types);
  for (int& t : sw) t = 1 - t;
  return LoopWord{loop.base.transposed(), std::move(sw)};
}

inline bool in_hyperelliptic_class(const LabeledPermutation& perm) {
  RauzyDiagram d(LabeledPermutation::symmetric(perm.degree()));
  return d.index_of(perm).has_value();
}

inline PseudoAnosovCertificate certify(const LoopWord& loop,
                                       bool compute_saf_tensor = false) {
  if (!is_loop(loop)) throw NotClosed("certify: word does not close up");
  PseudoAnosovCertificate c;
  c.loop = loop;
  c.matrix = transition_matrix(loop);
  if (!is_primitive(c.matrix)) throw NotPrimitive("certify: matrix not primitive");
  c.char_poly = char_poly_exact(c.matrix);
  c.dilatation = perron_data(c.matrix, loop.base);
  c.min_poly = c.dilatation.field->modulus();
  c.stratum = stratum_of(loop.base);
  c.hyperelliptic = in_hyperelliptic_class(loop.base);
  c.saf_zero_thm1 = saf_zero_by_theorem1(c.min_poly);
  c.suspension_ok =
      check_suspension(loop.base, c.dilatation.lengths, c.dilatation.heights);
  if (compute_saf_tensor)
    c.saf_tensor_zero = saf_tensor(loop.base, c.dilatation.lengths).is_zero();
  return c;
}

namespace detail {

// Closed walks based at the smallest-index vertex they visit, emitted in
// canonical rotation only (lexicographically smallest word among the
// rotations based at that vertex).
inline std::vector<LoopWord> enumerate_loops(const RauzyDiagram& dia, int max_len) {
  std::vector<LoopWord> out;
  int n = dia.size();
  for (int base = 0; base < n; ++base) {
    std::vector<int> dist(n, -1);
    {  // reverse BFS to the base
      std::vector<std::vector<int>> pred(n);
      for (int v = 0; v < n; ++v)
        for (int t = 0; t < 2; ++t) pred[dia.successor(v, t)].push_back(v);
      std::vector<int> q{base};
      dist[base] = 0;
      for (std::size_t h = 0; h < q.size(); ++h)
        for (int p : pred[q[h]])
          if (dist[p] < 0) {
            dist[p] = dist[q[h]] + 1;
            q.push_back(p);
          }
    }
    std::vector<int> word, verts{base};
    auto canonical_here = [&]() {
      // rotations of `word` starting at other visits of `base`
      std::size_t len = word.size();
      for (std::size_t r = 1; r < len; ++r) {
        if (verts[r] != base) continue;
        for (std::size_t k = 0; k < len; ++k) {
          int a = word[(r + k) % len], b = word[k];
          if (a != b) {
            if (a < b) return false;  // a strictly smaller rotation exists
            break;
          }
        }
      }
      return true;
    };
    std::function<void(int)> dfs = [&](int v) {
      if (v == base && !word.empty() && canonical_here())
        out.push_back(LoopWord{dia.vertex(base), word});
      if (static_cast<int>(word.size()) >= max_len) return;
      for (int t = 0; t < 2; ++t) {
        int s = dia.successor(v, t);
        if (s < base) continue;  // smaller-index vertices belong to other bases
        if (dist[s] < 0 ||
            static_cast<int>(word.size()) + 1 + dist[s] > max_len)
          continue;
        word.push_back(t);
        verts.push_back(s);
        dfs(s);
        verts.pop_back();
        word.pop_back();
      }
    };
    dfs(base);
  }
  std::sort(out.begin(), out.end(), [](const LoopWord& a, const LoopWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.types != b.types) return a.types < b.types;
    return a.base.bottom() < b.base.bottom();
  });
  return out;
}

}  // namespace detail

// All primitive closed loops of length <= max_len anywhere in the diagram,
// one certificate per rotation class, in (length, word) order.  Loops with
// imprimitive transition matrices are skipped.
inline std::vector<PseudoAnosovCertificate> search_loops(
    const RauzyDiagram& diagram, const LabeledPermutation& start, int max_len,
    const std::function<bool(const PseudoAnosovCertificate&)>& filter = nullptr,
    int jobs = 1, bool compute_saf_tensor = false) {
  if (!diagram.index_of(start).has_value())
    throw std::invalid_argument("search_loops: start not in diagram");
  if (max_len < 1) throw std::invalid_argument("search_loops: max_len < 1");
  auto loops = detail::enumerate_loops(diagram, max_len);
  std::vector<std::optional<PseudoAnosovCertificate>> slots(loops.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        PseudoAnosovCertificate c = certify(loops[i], compute_saf_tensor);
        if (!filter || filter(c)) slots[i] = std::move(c);
      } catch (const NotPrimitive&) {
      }
    }
  };
  if (jobs <= 1 || loops.size() < 2) {
    work(0, loops.size());
  } else {
    std::size_t k = std::min<std::size_t>(jobs, loops.size());
    std::vector<std::thread> threads;
    std::size_t chunk = (loops.size() + k - 1) / k;
    for (std::size_t t = 0; t < k; ++t)
      threads.emplace_back(work, t * chunk,
                           std::min(loops.size(), (t + 1) * chunk));
    for (auto& th : threads) th.join();
  }
  std::vector<PseudoAnosovCertificate> out;
  for (auto& s : slots)
    if (s.has_value()) out.push_back(std::move(*s));
  return out;
}

}  // namespace safzero

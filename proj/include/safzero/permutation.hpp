// Labeled permutations in reduced form (top row is the identity), the two
// Rauzy moves, Rauzy diagrams as explicit graphs, and transition matrices
// of loops in a diagram.
//
// A vertex stores only the bottom row b[0..d-1] (letters 1..d).  A move of
// type 0 reinserts the last bottom letter after the letter d inside the
// bottom row; a move of type 1 reinserts the letter d after the winner in
// the top row and then relabels so the top row is the identity again.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace safzero {

class LabeledPermutation {
 public:
  LabeledPermutation() = default;
  explicit LabeledPermutation(std::vector<int> bottom) : b_(std::move(bottom)) {
    std::vector<bool> seen(b_.size() + 1, false);
    for (int v : b_) {
      if (v < 1 || v > static_cast<int>(b_.size()) || seen[v])
        throw std::invalid_argument("LabeledPermutation: not a permutation");
      seen[v] = true;
    }
    if (b_.empty()) throw std::invalid_argument("LabeledPermutation: empty");
  }

  // The symmetric permutation (d, d-1, ..., 1).
  static LabeledPermutation symmetric(int d) {
    std::vector<int> b(d);
    for (int i = 0; i < d; ++i) b[i] = d - i;
    return LabeledPermutation(std::move(b));
  }

  int degree() const { return static_cast<int>(b_.size()); }
  const std::vector<int>& bottom() const { return b_; }
  // bottom position (1-based) of a letter
  int position_of(int letter) const {
    for (int i = 0; i < degree(); ++i)
      if (b_[i] == letter) return i + 1;
    throw std::invalid_argument("position_of: no such letter");
  }

  friend bool operator==(const LabeledPermutation& x, const LabeledPermutation& y) {
    return x.b_ == y.b_;
  }
  friend bool operator!=(const LabeledPermutation& x, const LabeledPermutation& y) {
    return !(x == y);
  }
  friend bool operator<(const LabeledPermutation& x, const LabeledPermutation& y) {
    return x.b_ < y.b_;
  }

  // Reducible means some prefix {1..k}, k < d, is invariant; the induction
  // is only defined on irreducible permutations.
  bool is_irreducible() const {
    int d = degree();
    int mx = 0;
    for (int i = 0; i < d - 1; ++i) {
      mx = std::max(mx, b_[i]);
      if (mx == i + 1) return false;
    }
    return true;
  }

  LabeledPermutation rauzy(int type) const {
    int d = degree();
    if (d < 2) throw std::invalid_argument("rauzy: degree too small");
    if (b_[d - 1] == d)
      throw std::invalid_argument("rauzy: degenerate (last letters equal)");
    std::vector<int> nb;
    nb.reserve(d);
    if (type == 0) {
      // move the last bottom letter to just after the letter d
      int k = position_of(d);
      for (int i = 0; i < k; ++i) nb.push_back(b_[i]);
      nb.push_back(b_[d - 1]);
      for (int i = k; i < d - 1; ++i) nb.push_back(b_[i]);
    } else if (type == 1) {
      // move letter d after the winner w in the top row, then relabel:
      // x <= w fixed, d -> w+1, w < x < d -> x+1
      int w = b_[d - 1];
      for (int i = 0; i < d; ++i) {
        int x = b_[i];
        nb.push_back(x <= w ? x : (x == d ? w + 1 : x + 1));
      }
    } else {
      throw std::invalid_argument("rauzy: type must be 0 or 1");
    }
    return LabeledPermutation(std::move(nb));
  }

  // winner/loser letters of a move from this vertex, in the labels of this
  // vertex
  // reduced form of the inverse monodromy; exchanges the roles of the two
  // rows (and hence the two move types)
  LabeledPermutation transposed() const {
    std::vector<int> inv(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) inv[b_[i] - 1] = static_cast<int>(i) + 1;
    return LabeledPermutation(std::move(inv));
  }

  int winner(int type) const { return type == 0 ? degree() : b_[degree() - 1]; }
  int loser(int type) const { return type == 0 ? b_[degree() - 1] : degree(); }

  std::string str() const {
    std::string s;
    bool wide = degree() > 9;
    for (int i = 0; i < degree(); ++i) {
      if (wide && i > 0) s += ",";
      s += std::to_string(b_[i]);
    }
    return s;
  }

 private:
  std::vector<int> b_;
};

// Parse "7354621" or "7,3,5,4,6,2,1".
inline LabeledPermutation parse_permutation(const std::string& s) {
  std::vector<int> b;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) b.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("parse_permutation: bad digit");
      b.push_back(c - '0');
    }
  }
  return LabeledPermutation(std::move(b));
}

// Single-step length transition matrix of a move from `v`, expressed from
// the labels of `v` (rows) to the labels of the target vertex (columns):
// old lengths = M * new lengths.
inline IntMatrix step_matrix(const LabeledPermutation& v, int type) {
  int d = v.degree();
  IntMatrix m(d, d);
  if (type == 0) {
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    m(d - 1, v.bottom()[d - 1] - 1) += 1;  // lambda_d absorbs the loser
  } else {
    int w = v.bottom()[d - 1];
    auto relabel = [&](int x) { return x <= w ? x : (x == d ? w + 1 : x + 1); };
    for (int i = 1; i <= d; ++i) m(i - 1, relabel(i) - 1) = 1;
    m(w - 1, w) += 1;  // column w+1 = relabel(d): lambda_w absorbs lambda_d
  }
  return m;
}

// A loop in a Rauzy diagram: a base vertex plus a word of move types.
struct LoopWord {
  LabeledPermutation base;
  std::vector<int> types;

  int length() const { return static_cast<int>(types.size()); }
  std::string word_str() const {
    std::string s;
    for (int t : types) s += char('0' + t);
    return s;
  }
};

// Parse a move word: plain binary, with optional run groups "(d^n)", e.g.
// "10101(0^3)10".
inline std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '0' || c == '1') {
      w.push_back(c - '0');
      ++i;
    } else if (c == '(') {
      std::size_t caret = s.find('^', i);
      std::size_t close = s.find(')', i);
      if (caret == std::string::npos || close == std::string::npos || caret > close)
        throw std::invalid_argument("parse_word: malformed group");
      std::string digits = s.substr(i + 1, caret - i - 1);
      int count = std::stoi(s.substr(caret + 1, close - caret - 1));
      if (count < 0) throw std::invalid_argument("parse_word: negative repeat");
      for (int k = 0; k < count; ++k)
        for (char dc : digits) {
          if (dc != '0' && dc != '1') throw std::invalid_argument("parse_word: bad digit");
          w.push_back(dc - '0');
        }
      i = close + 1;
    } else {
      throw std::invalid_argument("parse_word: bad character");
    }
  }
  return w;
}

// Endpoint of a path; throws if a move hits a degenerate vertex.
inline LabeledPermutation walk(const LabeledPermutation& start, const std::vector<int>& types) {
  LabeledPermutation v = start;
  for (int t : types) v = v.rauzy(t);
  return v;
}

inline bool is_loop(const LoopWord& l) { return walk(l.base, l.types) == l.base; }

// Product of the step matrices along a path, first step leftmost, so that
// for a loop the start-vertex lengths satisfy lambda = M * lambda with M
// the returned matrix (a nonnegative integer matrix).
inline IntMatrix transition_matrix(const LabeledPermutation& start,
                                   const std::vector<int>& types) {
  IntMatrix m = IntMatrix::identity(start.degree());
  LabeledPermutation v = start;
  for (int t : types) {
    m = m * step_matrix(v, t);
    v = v.rauzy(t);
  }
  return m;
}

inline IntMatrix transition_matrix(const LoopWord& l) {
  return transition_matrix(l.base, l.types);
}

// Rauzy diagram: closure of a start vertex under both moves.  Vertices are
// indexed in BFS discovery order, start vertex first.
class RauzyDiagram {
 public:
  explicit RauzyDiagram(const LabeledPermutation& start) {
    if (!start.is_irreducible())
      throw std::invalid_argument("RauzyDiagram: start vertex is reducible");
    index_[start] = 0;
    verts_.push_back(start);
    succ_.push_back({-1, -1});
    for (std::size_t head = 0; head < verts_.size(); ++head) {
      for (int t = 0; t < 2; ++t) {
        LabeledPermutation nxt = verts_[head].rauzy(t);
        auto [it, inserted] = index_.emplace(nxt, static_cast<int>(verts_.size()));
        if (inserted) {
          verts_.push_back(nxt);
          succ_.push_back({-1, -1});
        }
        succ_[head][t] = it->second;
      }
    }
  }

  int size() const { return static_cast<int>(verts_.size()); }
  const LabeledPermutation& vertex(int i) const { return verts_[i]; }
  int successor(int i, int type) const { return succ_[i][type]; }
  std::optional<int> index_of(const LabeledPermutation& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Graphviz output; type 0 edges solid, type 1 edges dotted.
  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    for (int i = 0; i < size(); ++i)
      os << "  v" << i << " [label=\"" << verts_[i].str() << "\"];\n";
    for (int i = 0; i < size(); ++i) {
      os << "  v" << i << " -> v" << succ_[i][0] << " [style=solid];\n";
      os << "  v" << i << " -> v" << succ_[i][1] << " [style=dotted];\n";
    }
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<LabeledPermutation> verts_;
  std::vector<std::array<int, 2>> succ_;
  std::map<LabeledPermutation, int> index_;
};

}  // namespace safzero

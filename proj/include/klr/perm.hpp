#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace klr {

/// Permutations of {0..n-1}, stored as image vectors: p[i] = image of i.
/// Simple transpositions s_k swap k and k+1 (0-based; the algebra layer's
/// tau_k with 1-based k corresponds to s_{k-1} here).
struct Perm {
  std::vector<int> p;

  Perm() = default;
  explicit Perm(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  explicit Perm(std::vector<int> v) : p(std::move(v)) {}

  int size() const { return static_cast<int>(p.size()); }
  int operator()(int i) const { return p[i]; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (p[i] != i) return false;
    return true;
  }

  static Perm transposition(int n, int k) { // s_k
    Perm s(n);
    std::swap(s.p[k], s.p[k + 1]);
    return s;
  }

  /// Composition (this after other): (a*b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    assert(a.size() == b.size());
    Perm c(a.size());
    for (int i = 0; i < a.size(); ++i) c.p[i] = a.p[b.p[i]];
    return c;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.p == b.p; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.p != b.p; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.p < b.p; }

  Perm inverse() const {
    Perm c(size());
    for (int i = 0; i < size(); ++i) c.p[p[i]] = i;
    return c;
  }

  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (p[i] > p[j]) ++inv;
    return inv;
  }

  /// Left multiplication by s_k shortens iff k+1 appears before k in the
  /// one-line notation, i.e. w^{-1}(k) > w^{-1}(k+1).
  bool left_descent(int k) const {
    int a = -1, b = -1;
    for (int i = 0; i < size(); ++i) {
      if (p[i] == k) a = i;
      if (p[i] == k + 1) b = i;
    }
    return a > b;
  }
  bool right_descent(int k) const { return p[k] > p[k + 1]; }

  /// Place permutation on words: (w.v)[w(i)] = v[i].
  template <class T>
  std::vector<T> act(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == size());
    std::vector<T> r(v.size());
    for (int i = 0; i < size(); ++i) r[p[i]] = v[i];
    return r;
  }
};

inline Perm perm_of_word(int n, const std::vector<int>& word) {
  Perm w(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = Perm::transposition(n, *it) * w;
  return w;
}

inline bool word_is_reduced(int n, const std::vector<int>& word) {
  return perm_of_word(n, word).length() == static_cast<int>(word.size());
}

/// Lexicographically smallest reduced word. Built on the identity
/// lex(w) = [c] + lex(s_c w) with c the smallest left descent.
inline std::vector<int> lex_word(Perm w) {
  std::vector<int> out;
  int n = w.size();
  int len = w.length();
  out.reserve(len);
  while (len > 0) {
    int c = -1;
    for (int k = 0; k + 1 < n; ++k)
      if (w.left_descent(k)) { c = k; break; }
    assert(c >= 0);
    out.push_back(c);
    w = Perm::transposition(n, c) * w;
    --len;
  }
  return out;
}

/// One elementary move on a reduced word.
struct WordMove {
  int pos;    // position of the leftmost letter involved
  bool braid; // braid move (3 letters) vs commutation (2 letters)
};

namespace detail {

/// Transform reduced word u so that it starts with letter c (which must be a
/// left descent of perm(u)), recording the elementary moves used. Uses the
/// parabolic-prefix property: a word with two left descents a, c carries the
/// corresponding rank-2 longest element as a prefix, so the recursion below
/// never gets stuck.
inline void make_first(std::vector<int>& u, int c, int offset, std::vector<WordMove>& moves) {
  assert(!u.empty());
  if (u[0] == c) return;
  int a = u[0];
  std::vector<int> rest(u.begin() + 1, u.end());
  make_first(rest, c, offset + 1, moves);
  if (std::abs(a - c) >= 2) {
    // [a, c, ...] -> [c, a, ...]
    moves.push_back({offset, false});
    u.clear();
    u.push_back(c);
    u.push_back(a);
    u.insert(u.end(), rest.begin() + 1, rest.end());
  } else {
    // adjacent: force [a, c, a, ...] then braid to [c, a, c, ...]
    std::vector<int> rest2(rest.begin() + 1, rest.end());
    make_first(rest2, a, offset + 2, moves);
    moves.push_back({offset, true});
    u.clear();
    u.push_back(c);
    u.push_back(a);
    u.push_back(c);
    u.insert(u.end(), rest2.begin() + 1, rest2.end());
  }
}

} // namespace detail

/// Elementary-move path from reduced word u to reduced word v (same element).
inline std::vector<WordMove> word_path(std::vector<int> u, const std::vector<int>& v) {
  assert(u.size() == v.size());
  std::vector<WordMove> moves;
  int off = 0;
  std::vector<int> cur = std::move(u);
  for (size_t r = 0; r < v.size(); ++r) {
    detail::make_first(cur, v[r], off, moves);
    cur.erase(cur.begin());
    ++off;
  }
  return moves;
}

inline void apply_move(std::vector<int>& w, const WordMove& m) {
  if (m.braid) {
    std::swap(w[m.pos], w[m.pos + 1]);
    w[m.pos + 2] = w[m.pos];
  } else {
    std::swap(w[m.pos], w[m.pos + 1]);
  }
}

/// Minimal-length representatives of S_{m+n} / (S_m x S_n): permutations
/// increasing on both blocks. Enumerated by the image set of the first block.
inline std::vector<Perm> shuffles(int m, int n) {
  std::vector<Perm> out;
  std::vector<int> comb(m);
  std::iota(comb.begin(), comb.end(), 0);
  auto emit = [&]() {
    Perm w(m + n);
    std::vector<bool> used(m + n, false);
    for (int i = 0; i < m; ++i) {
      w.p[i] = comb[i];
      used[comb[i]] = true;
    }
    int pos = 0;
    for (int j = 0; j < m + n; ++j)
      if (!used[j]) w.p[m + pos++] = j;
    out.push_back(w);
  };
  if (m == 0 || n == 0) {
    out.push_back(Perm(m + n));
    return out;
  }
  while (true) {
    emit();
    int i = m - 1;
    while (i >= 0 && comb[i] == m + n - m + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

/// Unique factorization w = sigma * (u x u') with sigma an (m,n)-shuffle and
/// lengths additive.
struct CosetSplit {
  Perm shuffle;
  Perm left;  // in S_m
  Perm right; // in S_n
};

inline CosetSplit coset_split(const Perm& w, int m, int n) {
  assert(w.size() == m + n);
  CosetSplit s{Perm(m + n), Perm(m), Perm(n)};
  // shuffle sends block starts to the sorted images of each block
  std::vector<int> li(m), ri(n);
  for (int i = 0; i < m; ++i) li[i] = w(i);
  for (int i = 0; i < n; ++i) ri[i] = w(m + i);
  std::vector<int> ls = li, rs = ri;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  for (int i = 0; i < m; ++i) s.shuffle.p[i] = ls[i];
  for (int i = 0; i < n; ++i) s.shuffle.p[m + i] = rs[i];
  for (int i = 0; i < m; ++i)
    s.left.p[i] = static_cast<int>(std::lower_bound(ls.begin(), ls.end(), li[i]) - ls.begin());
  for (int i = 0; i < n; ++i)
    s.right.p[i] = static_cast<int>(std::lower_bound(rs.begin(), rs.end(), ri[i]) - rs.begin());
  return s;
}

/// Block-exchange permutation: w[m,n] maps 1..m up by n and m+1..m+n down
/// by m (0-based here).
inline Perm block_swap(int m, int n) {
  Perm w(m + n);
  for (int k = 0; k < m; ++k) w.p[k] = k + n;
  for (int k = 0; k < n; ++k) w.p[m + k] = k;
  return w;
}

} // namespace klr

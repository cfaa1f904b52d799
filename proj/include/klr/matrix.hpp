#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "klr/field.hpp"

namespace klr {

/// Dense matrix over an exact field. All linear algebra in the library runs
/// through plain Gaussian elimination with exact arithmetic; sizes stay at
/// desk scale (a few hundred rows), so no fraction-free tricks are needed.
template <class F>
class Matrix {
public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, FieldTraits<F>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldTraits<F>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (auto& x : a_)
      if (!klr::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.r_ == y.r_ && x.c_ == y.c_);
    Matrix z(x.r_, x.c_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.r_ == y.r_ && x.c_ == y.c_);
    Matrix z(x.r_, x.c_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
    return z;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.c_ == y.r_);
    Matrix z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const F& v = x(i, k);
        if (klr::is_zero(v)) continue;
        for (int j = 0; j < y.c_; ++j) {
          if (!klr::is_zero(y(k, j))) z(i, j) += v * y(k, j);
        }
      }
    return z;
  }
  friend Matrix operator*(const F& s, const Matrix& y) {
    Matrix z(y.r_, y.c_);
    for (size_t i = 0; i < y.a_.size(); ++i) z.a_[i] = s * y.a_[i];
    return z;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    assert(static_cast<int>(v.size()) == c_);
    std::vector<F> w(r_, FieldTraits<F>::zero());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!klr::is_zero((*this)(i, j)) && !klr::is_zero(v[j])) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  Matrix transposed() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  F trace() const {
    assert(r_ == c_);
    F t = FieldTraits<F>::zero();
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

private:
  int r_, c_;
  std::vector<F> a_;
};

/// Row echelon form data: the reduced matrix plus pivot columns.
template <class F>
struct Echelon {
  Matrix<F> m;
  std::vector<int> pivots; // pivot column per pivot row
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> e{Matrix<F>(0, 0), {}};
  int rows = m.rows(), cols = m.cols();
  int pr = 0;
  for (int pc = 0; pc < cols && pr < rows; ++pc) {
    int sel = -1;
    for (int i = pr; i < rows; ++i)
      if (!is_zero(m(i, pc))) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
    F inv = FieldTraits<F>::one() / m(pr, pc);
    for (int j = pc; j < cols; ++j) m(pr, j) = inv * m(pr, j);
    for (int i = 0; i < rows; ++i) {
      if (i == pr || is_zero(m(i, pc))) continue;
      F f = m(i, pc);
      for (int j = pc; j < cols; ++j) m(i, j) -= f * m(pr, j);
    }
    e.pivots.push_back(pc);
    ++pr;
  }
  e.m = std::move(m);
  return e;
}

template <class F>
int rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis of the right null space {v : m v = 0}, as columns.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  Echelon<F> e = rref(m);
  int cols = m.cols();
  std::vector<bool> ispiv(cols, false);
  for (int p : e.pivots) ispiv[p] = true;
  std::vector<std::vector<F>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (ispiv[fc]) continue;
    std::vector<F> v(cols, FieldTraits<F>::zero());
    v[fc] = FieldTraits<F>::one();
    for (size_t pr = 0; pr < e.pivots.size(); ++pr) v[e.pivots[pr]] = -e.m(static_cast<int>(pr), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve m x = b; returns one solution if consistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  int rows = m.rows(), cols = m.cols();
  Matrix<F> aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  Echelon<F> e = rref(aug);
  for (int p : e.pivots)
    if (p == cols) return std::nullopt;
  std::vector<F> x(cols, FieldTraits<F>::zero());
  for (size_t pr = 0; pr < e.pivots.size(); ++pr) x[e.pivots[pr]] = e.m(static_cast<int>(pr), cols);
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldTraits<F>::one();
  }
  Echelon<F> e = rref(aug);
  if (e.rank() != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (e.pivots[i] != i) return std::nullopt;
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

/// Span utilities: maintain an echelonized spanning set of row vectors.
template <class F>
class RowSpan {
public:
  explicit RowSpan(int width) : width_(width) {}

  int width() const { return width_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Reduce v against the span; returns the residue.
  std::vector<F> reduce(std::vector<F> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const F& x = v[pivots_[i]];
      if (is_zero(x)) continue;
      F f = x; // rows are monic at pivot
      for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  /// Insert v; returns true if it enlarged the span.
  bool insert(std::vector<F> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < width_; ++j)
      if (!is_zero(v[j])) { p = j; break; }
    if (p < 0) return false;
    F inv = FieldTraits<F>::one() / v[p];
    for (int j = 0; j < width_; ++j) v[j] = inv * v[j];
    // back-substitute into existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
      F f = rows_[i][p];
      if (is_zero(f)) continue;
      for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
    }
    // keep rows ordered by pivot
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(const std::vector<F>& v) const {
    auto r = reduce(v);
    for (auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

private:
  int width_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

} // namespace klr

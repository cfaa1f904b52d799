#pragma once

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/grading.hpp"

namespace klr {

struct NotGCM : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSymmetrizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssociatorInconsistent : std::logic_error {
  using std::logic_error::logic_error;
};

/// Element of the root lattice, as integer coordinates over the index set.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(int rank) : c(rank, 0) {}
  static Root simple(int rank, int j) {
    Root r(rank);
    r.c[j] = 1;
    return r;
  }

  int rank() const { return static_cast<int>(c.size()); }
  int height() const {
    int h = 0;
    for (int x : c) h += std::abs(x);
    return h;
  }
  friend Root operator+(const Root& a, const Root& b) {
    assert(a.rank() == b.rank());
    Root r(a.rank());
    for (int i = 0; i < a.rank(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Root operator-(const Root& a, const Root& b) {
    assert(a.rank() == b.rank());
    Root r(a.rank());
    for (int i = 0; i < a.rank(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  Root operator-() const {
    Root r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
  friend bool operator!=(const Root& a, const Root& b) { return a.c != b.c; }
  friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }
};

/// Symmetrizable generalized Cartan matrix with a fixed symmetrizer and the
/// induced bilinear form (alpha_j, alpha_k) = d_j c_{jk} on the root lattice.
/// Index labels are opaque strings; extended indices get "+"/"-" suffixes.
class CartanDatum {
public:
  CartanDatum(std::vector<std::string> labels, std::vector<std::vector<int>> gcm,
              std::vector<int> sym)
      : labels_(std::move(labels)), gcm_(std::move(gcm)), d_(std::move(sym)) {
    validate();
  }

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int j) const { return labels_[j]; }
  int index_of(const std::string& lab) const {
    for (int j = 0; j < rank(); ++j)
      if (labels_[j] == lab) return j;
    throw std::out_of_range("unknown index label: " + lab);
  }
  int c(int j, int k) const { return gcm_[j][k]; }
  int d(int j) const { return d_[j]; }
  const std::vector<std::vector<int>>& gcm() const { return gcm_; }
  const std::vector<int>& symmetrizers() const { return d_; }

  /// (alpha_j, alpha_k)
  int form(int j, int k) const { return d_[j] * gcm_[j][k]; }
  int form(const Root& b, const Root& g) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) {
      if (b.c[j] == 0) continue;
      for (int k = 0; k < rank(); ++k)
        if (g.c[k] != 0) s += b.c[j] * g.c[k] * form(j, k);
    }
    return s;
  }

  Root alpha(int j) const { return Root::simple(rank(), j); }

  bool operator==(const CartanDatum& o) const {
    return labels_ == o.labels_ && gcm_ == o.gcm_ && d_ == o.d_;
  }

private:
  void validate() const {
    int n = rank();
    if (static_cast<int>(gcm_.size()) != n) throw NotGCM("matrix not square over the index set");
    for (auto& row : gcm_)
      if (static_cast<int>(row.size()) != n) throw NotGCM("matrix not square over the index set");
    if (static_cast<int>(d_.size()) != n) throw NotSymmetrizable("wrong number of symmetrizers");
    for (int j = 0; j < n; ++j) {
      if (d_[j] <= 0) throw NotSymmetrizable("symmetrizers must be positive");
      if (gcm_[j][j] != 2) throw NotGCM("diagonal entries must equal 2");
      for (int k = 0; k < n; ++k) {
        if (j == k) continue;
        if (gcm_[j][k] > 0) throw NotGCM("positive off-diagonal entry");
        if ((gcm_[j][k] == 0) != (gcm_[k][j] == 0)) throw NotGCM("zero pattern not symmetric");
        if (d_[j] * gcm_[j][k] != d_[k] * gcm_[k][j])
          throw NotSymmetrizable("d_j c_jk != d_k c_kj");
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> gcm_;
  std::vector<int> d_;
};

inline CartanDatum build_cartan(std::vector<std::vector<int>> gcm, std::vector<int> sym,
                                std::vector<std::string> labels = {}) {
  if (labels.empty())
    for (size_t j = 0; j < gcm.size(); ++j) labels.push_back(std::to_string(j + 1));
  return CartanDatum(std::move(labels), std::move(gcm), std::move(sym));
}

enum class Sign { plus, minus };
inline const char* sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }

/// Adjoin a new index adjacent only to i. The new simple root pairs with
/// alpha_i to -(alpha_i,alpha_i)/2 and has the same square length as alpha_i.
inline CartanDatum extend_cartan(const CartanDatum& base, int i, Sign sign) {
  if (i < 0 || i >= base.rank()) throw std::out_of_range("extend_cartan: bad index");
  int n = base.rank();
  std::vector<std::string> labels = base.labels();
  labels.push_back(base.label(i) + sign_str(sign));
  std::vector<std::vector<int>> gcm(n + 1, std::vector<int>(n + 1, 0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) gcm[j][k] = base.c(j, k);
  gcm[n][n] = 2;
  gcm[i][n] = gcm[n][i] = -1;
  std::vector<int> d = base.symmetrizers();
  d.push_back(base.d(i));
  return CartanDatum(std::move(labels), std::move(gcm), std::move(d));
}

/// An integer bilinear form lambda with lambda(a,b) + lambda(b,a) = -2(a,b),
/// controlling the degrees of the intertwining generators. The derived skew
/// form c(b,g) = lambda(b,g) + (b,g) drives the regrading equivalence.
class GradeAssociator {
public:
  GradeAssociator(const CartanDatum& datum, std::vector<std::vector<int>> lam)
      : lam_(std::move(lam)) {
    int n = datum.rank();
    if (static_cast<int>(lam_.size()) != n) throw AssociatorInconsistent("wrong size");
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(lam_[j].size()) != n) throw AssociatorInconsistent("wrong size");
      for (int k = 0; k < n; ++k)
        if (lam_[j][k] + lam_[k][j] != -2 * datum.form(j, k))
          throw AssociatorInconsistent("lambda(a,b)+lambda(b,a) != -2(a,b) at (" +
                                       datum.label(j) + "," + datum.label(k) + ")");
    }
    skew_.assign(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) skew_[j][k] = lam_[j][k] + datum.form(j, k);
  }

  int rank() const { return static_cast<int>(lam_.size()); }
  int lambda(int j, int k) const { return lam_[j][k]; }
  int lambda(const Root& b, const Root& g) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j)
      if (b.c[j] != 0)
        for (int k = 0; k < rank(); ++k)
          if (g.c[k] != 0) s += b.c[j] * g.c[k] * lam_[j][k];
    return s;
  }
  /// skew form c = lambda + ( , )
  int skew(int j, int k) const { return skew_[j][k]; }
  int skew(const Root& b, const Root& g) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j)
      if (b.c[j] != 0)
        for (int k = 0; k < rank(); ++k)
          if (g.c[k] != 0) s += b.c[j] * g.c[k] * skew_[j][k];
    return s;
  }

  bool operator==(const GradeAssociator& o) const { return lam_ == o.lam_; }

private:
  std::vector<std::vector<int>> lam_;
  std::vector<std::vector<int>> skew_;
};

/// The standard grading: lambda_can = -( , ), with identically zero skew form.
inline GradeAssociator canonical_associator(const CartanDatum& datum) {
  int n = datum.rank();
  std::vector<std::vector<int>> lam(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) lam[j][k] = -datum.form(j, k);
  return GradeAssociator(datum, lam);
}

/// The modified grading on an extended datum: restricts to -( , ) on the base,
/// pairs the new index against the base in the asymmetric pattern that makes
/// the distinguished one-dimensional module braid with degree zero.
inline GradeAssociator lambda_pm(const CartanDatum& ext, int i, Sign sign) {
  int n = ext.rank();     // extended rank
  int e = n - 1;          // the adjoined index sits last
  std::vector<std::vector<int>> lam(n, std::vector<int>(n, 0));
  for (int j = 0; j < e; ++j)
    for (int k = 0; k < e; ++k) lam[j][k] = -ext.form(j, k);
  lam[e][e] = -ext.form(i, i);
  if (sign == Sign::plus) {
    // lambda_+(alpha_i, alpha_{i+}) = 0, lambda_+(alpha_{i+}, alpha_j) = (alpha_i, alpha_j)
    for (int j = 0; j < e; ++j) lam[e][j] = ext.form(i, j);
    for (int j = 0; j < e; ++j)
      if (j != i) lam[j][e] = -ext.form(i, j);
    lam[i][e] = 0;
    lam[e][i] = ext.form(i, i);
  } else {
    // lambda_-(alpha_{i-}, alpha_i) = 0, lambda_-(alpha_j, alpha_{i-}) = (alpha_i, alpha_j)
    for (int j = 0; j < e; ++j) lam[j][e] = ext.form(i, j);
    for (int j = 0; j < e; ++j)
      if (j != i) lam[e][j] = -ext.form(i, j);
    lam[e][i] = 0;
    lam[i][e] = ext.form(i, i);
  }
  return GradeAssociator(ext, lam); // constructor re-checks the defining identity
}

/// Presets used throughout the test and verification suites.
inline CartanDatum preset_cartan(const std::string& name) {
  if (name == "A1") return build_cartan({{2}}, {1});
  if (name == "A2") return build_cartan({{2, -1}, {-1, 2}}, {1, 1});
  if (name == "A3")
    return build_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
  if (name == "B2") return build_cartan({{2, -1}, {-2, 2}}, {2, 1});
  if (name == "C2") return build_cartan({{2, -2}, {-1, 2}}, {1, 2});
  throw std::invalid_argument("unknown Cartan preset: " + name);
}

} // namespace klr

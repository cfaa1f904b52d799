#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/field.hpp"

namespace klr {

/// Multivariate polynomial over F in named indeterminates. Exponent vectors
/// are indexed by a per-polynomial variable list; arithmetic aligns variable
/// lists on the fly. Degrees are plain total degrees unless a caller supplies
/// per-variable weights (the doubled grading uses deg x = (alpha,alpha)).
template <class F>
class SymPoly {
public:
  SymPoly() = default;

  static SymPoly zero() { return SymPoly(); }
  static SymPoly constant(const F& c) {
    SymPoly p;
    if (!is_zero(c)) p.terms_[{}] = c;
    return p;
  }
  static SymPoly variable(const std::string& name, int power = 1) {
    SymPoly p;
    p.vars_.push_back(name);
    p.terms_[{power}] = FieldTraits<F>::one();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  bool is_zero_poly() const { return terms_.empty(); }

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    auto [x, y] = aligned(a, b);
    for (auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    auto [x, y] = aligned(a, b);
    for (auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
  }
  SymPoly operator-() const {
    SymPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    auto [x, y] = aligned(a, b);
    SymPoly r;
    r.vars_ = x.vars_;
    for (auto& [e1, c1] : x.terms_)
      for (auto& [e2, c2] : y.terms_) {
        std::vector<int> e = e1;
        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  friend SymPoly operator*(const F& s, const SymPoly& a) {
    SymPoly r;
    if (is_zero(s)) return r;
    r.vars_ = a.vars_;
    for (auto& [e, c] : a.terms_) r.terms_[e] = s * c;
    return r;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return (a - b).is_zero_poly(); }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  /// Substitute variable -> polynomial.
  SymPoly substituted(const std::string& name, const SymPoly& value) const {
    int vi = find_var(name);
    if (vi < 0) return *this;
    SymPoly r;
    for (auto& [e, c] : terms_) {
      SymPoly t = SymPoly::constant(c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        SymPoly base = (static_cast<int>(i) == vi) ? value : variable(vars_[i]);
        for (int k = 0; k < e[i]; ++k) t = t * base;
      }
      r = r + t;
    }
    return r;
  }

  SymPoly renamed(const std::string& from, const std::string& to) const {
    SymPoly p = *this;
    int vi = p.find_var(from);
    if (vi >= 0) p.vars_[vi] = to;
    return p.normalized();
  }

  /// Exact quotient by (a - b); throws if not divisible.
  static SymPoly divide_by_difference(const SymPoly& p, const std::string& a,
                                      const std::string& b) {
    // q = (p - p|_{a=b}) / (a - b), computed monomial by monomial via
    // x^m - y^m = (x - y) sum x^s y^{m-1-s}; requires p|_{a=b} == 0.
    SymPoly at = p.substituted(a, variable(b));
    if (!at.is_zero_poly()) throw std::domain_error("polynomial not divisible by (" + a + "-" + b + ")");
    SymPoly q;
    SymPoly va = variable(a), vb = variable(b);
    // p = sum over monomials c * a^m * rest; pair them up via (a^m - b^m) split:
    // write p = sum_m a^m * f_m(b,...). Then p = sum_m (a^m - b^m) f_m since p|_{a=b}=0,
    // and (a^m - b^m)/(a-b) = sum_{s<m} a^s b^{m-1-s}.
    int ai = p.find_var(a);
    if (ai < 0) return q; // p == 0 (else p|_{a=b} = p != 0)
    for (auto& [e, c] : p.terms_) {
      int m = e[ai];
      std::vector<int> rest = e;
      rest[ai] = 0;
      SymPoly restp;
      restp.vars_ = p.vars_;
      restp.terms_[rest] = c;
      restp = restp.normalized();
      for (int s = 0; s < m; ++s) {
        SymPoly term = restp;
        for (int k = 0; k < s; ++k) term = term * va;
        for (int k = 0; k < m - 1 - s; ++k) term = term * vb;
        q = q + term;
      }
    }
    return q.normalized();
  }

  /// Total degree with per-variable weights (by variable name; default 1).
  int weighted_degree(const std::map<std::string, int>& weights = {}) const {
    if (terms_.empty()) return 0;
    int best = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
      int d = 0;
      for (size_t i = 0; i < e.size(); ++i) {
        auto it = weights.find(vars_[i]);
        d += e[i] * (it == weights.end() ? 1 : it->second);
      }
      if (first || d > best) best = d;
      first = false;
    }
    return best;
  }

  bool is_homogeneous(const std::map<std::string, int>& weights = {}) const {
    int d = -1;
    for (auto& [e, c] : terms_) {
      int t = 0;
      for (size_t i = 0; i < e.size(); ++i) {
        auto it = weights.find(vars_[i]);
        t += e[i] * (it == weights.end() ? 1 : it->second);
      }
      if (d == -1) d = t;
      else if (t != d) return false;
    }
    return true;
  }

  /// Normalize the coefficient of the lexicographically first monomial to 1.
  SymPoly scalar_normalized() const {
    if (terms_.empty()) return *this;
    SymPoly p = normalized();
    F lead = p.terms_.begin()->second;
    return (FieldTraits<F>::one() / lead) * p;
  }

  const std::map<std::vector<int>, F>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
      std::string cs = FieldTraits<F>::str(c);
      if (!first) os << " + ";
      bool has_var = false;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) has_var = true;
      if (cs != "1" || !has_var) os << cs;
      bool star = (cs != "1" || !has_var);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (star) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        star = true;
      }
      first = false;
    }
    return os.str();
  }

  SymPoly normalized() const {
    // drop unused variables and sort names for stable comparison
    std::vector<std::string> used;
    std::vector<int> keep;
    for (size_t i = 0; i < vars_.size(); ++i) {
      bool u = false;
      for (auto& [e, c] : terms_)
        if (e[i] != 0) u = true;
      if (u) {
        used.push_back(vars_[i]);
        keep.push_back(static_cast<int>(i));
      }
    }
    std::vector<size_t> order(used.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return used[x] < used[y]; });
    SymPoly r;
    for (size_t i : order) r.vars_.push_back(used[i]);
    for (auto& [e, c] : terms_) {
      std::vector<int> ne(order.size());
      for (size_t i = 0; i < order.size(); ++i) ne[i] = e[keep[order[i]]];
      r.add_term(ne, c);
    }
    return r;
  }

private:
  int find_var(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }
  void add_term(const std::vector<int>& e, const F& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.emplace(e, c);
    else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  static std::pair<SymPoly, SymPoly> aligned(const SymPoly& a, const SymPoly& b) {
    std::vector<std::string> vars = a.vars_;
    for (auto& v : b.vars_)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    auto remap = [&](const SymPoly& p) {
      SymPoly r;
      r.vars_ = vars;
      std::vector<int> pos(p.vars_.size());
      for (size_t i = 0; i < p.vars_.size(); ++i)
        pos[i] = static_cast<int>(std::find(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
      for (auto& [e, c] : p.terms_) {
        std::vector<int> ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
      }
      return r;
    };
    return {remap(a), remap(b)};
  }

  std::vector<std::string> vars_;
  std::map<std::vector<int>, F> terms_;
};

} // namespace klr

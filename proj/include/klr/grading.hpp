#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace klr {

/// A half-integer grade, stored as twice its value. All internal gradings are
/// multiples of 1/2 so the self-dual normalizations q^{1/2(...)} stay exact;
/// integrality is asserted at the call sites that require it.
struct Half {
  int t = 0; // value = t/2

  Half() = default;
  static Half of_int(int n) { return Half{2 * n}; }
  static Half of_twice(int t) { return Half{t}; }

  bool is_int() const { return t % 2 == 0; }
  int as_int() const {
    if (!is_int()) throw std::logic_error("grade not an integer: " + str());
    return t / 2;
  }
  double approx() const { return t / 2.0; }

  friend Half operator+(Half a, Half b) { return Half{a.t + b.t}; }
  friend Half operator-(Half a, Half b) { return Half{a.t - b.t}; }
  Half operator-() const { return Half{-t}; }
  friend Half operator*(int n, Half a) { return Half{n * a.t}; }
  Half& operator+=(Half o) { t += o.t; return *this; }
  Half& operator-=(Half o) { t -= o.t; return *this; }
  friend bool operator==(Half a, Half b) { return a.t == b.t; }
  friend bool operator!=(Half a, Half b) { return a.t != b.t; }
  friend bool operator<(Half a, Half b) { return a.t < b.t; }
  friend bool operator<=(Half a, Half b) { return a.t <= b.t; }
  friend bool operator>(Half a, Half b) { return a.t > b.t; }
  friend bool operator>=(Half a, Half b) { return a.t >= b.t; }

  /// Exact halving of an integer grade quantity (n must stay representable).
  static Half half_of_int(int n) { return Half{n}; }

  std::string str() const {
    if (t % 2 == 0) return std::to_string(t / 2);
    return std::to_string(t) + "/2";
  }
};

/// Laurent polynomial in q^{1/2} with integer coefficients; the key is twice
/// the q-exponent. Used for graded dimensions and Grothendieck-group classes.
struct QLaurent {
  std::map<int, long long> c; // twice-exponent -> coefficient

  static QLaurent zero() { return {}; }
  static QLaurent one() { return monomial(Half{0}); }
  static QLaurent monomial(Half d, long long k = 1) {
    QLaurent p;
    if (k != 0) p.c[d.t] = k;
    return p;
  }

  bool is_zero() const { return c.empty(); }
  long long coeff(Half d) const {
    auto it = c.find(d.t);
    return it == c.end() ? 0 : it->second;
  }
  void add(Half d, long long k) {
    if (k == 0) return;
    auto it = c.find(d.t);
    if (it == c.end()) c.emplace(d.t, k);
    else {
      it->second += k;
      if (it->second == 0) c.erase(it);
    }
  }
  long long eval_at_one() const {
    long long s = 0;
    for (auto& [_, k] : c) s += k;
    return s;
  }

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [t, k] : b.c) r.add(Half{t}, k);
    return r;
  }
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [t, k] : b.c) r.add(Half{t}, -k);
    return r;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (auto& [t1, k1] : a.c)
      for (auto& [t2, k2] : b.c) r.add(Half{t1 + t2}, k1 * k2);
    return r;
  }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.c == b.c; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  /// q^{d} * this
  QLaurent shifted(Half d) const {
    QLaurent r;
    for (auto& [t, k] : c) r.c[t + d.t] = k;
    return r;
  }
  /// q -> q^{-1}
  QLaurent bar() const {
    QLaurent r;
    for (auto& [t, k] : c) r.c[-t] = k;
    return r;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, k] : c) {
      if (!first) os << (k >= 0 ? " + " : " - ");
      else if (k < 0) os << "-";
      long long a = k >= 0 ? k : -k;
      Half d{t};
      if (d == Half{0}) os << a;
      else {
        if (a != 1) os << a << "*";
        if (d.t % 2 == 0) os << "q" << (d.t == 2 ? "" : "^" + std::to_string(d.t / 2));
        else os << "q^(" << d.t << "/2)";
      }
      first = false;
    }
    return os.str();
  }
};

} // namespace klr

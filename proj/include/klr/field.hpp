#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace klr {

/// Exact rational numbers. Thin alias over GMP's canonicalizing rational type;
/// everything in the library that needs division assumes a field with exact
/// equality, which mpq_class provides.
using Rat = mpq_class;

inline Rat rat_of_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Prime field F_p with a process-wide modulus (set once from the CLI before
/// any element is created). Elements are stored reduced to [0, p).
class Fp {
public:
  Fp() : v_(0) {}
  Fp(long x) { v_ = norm(x % modulus()); }
  Fp(int x) : Fp(static_cast<long>(x)) {}

  static void set_modulus(long p) {
    if (p <= 2) throw std::invalid_argument("Fp modulus must be an odd prime > 2");
    modulus_ref() = p;
  }
  static long modulus() { return modulus_ref(); }

  friend Fp operator+(Fp a, Fp b) { return Fp::raw(norm(a.v_ + b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return Fp::raw(norm(a.v_ - b.v_)); }
  friend Fp operator*(Fp a, Fp b) { return Fp::raw(norm(a.v_ * b.v_)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const { return Fp::raw(norm(-v_)); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero in Fp");
    // extended Euclid
    long a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b) {
      long q = a / b;
      long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0);
  }

  long value() const { return v_; }

private:
  static Fp raw(long v) { Fp f; f.v_ = v; return f; }
  static long norm(long x) {
    long p = modulus();
    x %= p;
    return x < 0 ? x + p : x;
  }
  static long& modulus_ref() {
    static long p = 5;
    return p;
  }
  long v_;
};

inline std::string to_string(const Fp& f) { return std::to_string(f.value()); }

template <class F> struct FieldTraits;

template <> struct FieldTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long n) { return Rat(static_cast<long int>(n)); }
  static Rat parse(const std::string& s) { return rat_of_string(s); }
  static std::string str(const Rat& x) { return x.get_str(); }
  static constexpr bool char_zero = true;
};

template <> struct FieldTraits<Fp> {
  static Fp zero() { return Fp(0L); }
  static Fp one() { return Fp(1L); }
  static Fp from_long(long n) { return Fp(n); }
  static Fp parse(const std::string& s) {
    // accept "a" or "a/b"
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fp(std::stol(s));
    return Fp(std::stol(s.substr(0, slash))) / Fp(std::stol(s.substr(slash + 1)));
  }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
  static constexpr bool char_zero = false;
};

template <class F> bool is_zero(const F& x) { return x == FieldTraits<F>::zero(); }

} // namespace klr

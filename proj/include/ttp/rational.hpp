#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ttp/errors.hpp"

namespace ttp {

// Exact rational arithmetic on 64-bit numerator/denominator. All distance
// and bound computations run on this type so that certificate comparisons
// (cost <= bound, ratio <= 5) never depend on floating-point rounding.
// Intermediates are widened to 128 bits; results that do not fit back into
// 64 bits after reduction throw.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rat(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 lhs = i128(a.num_) * b.den_;
    __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "7" for integers, "7/3" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Fixed-point decimal with `digits` fractional digits, rounded half away
  // from zero. Deterministic, used for CSV emission.
  std::string decimal(int digits) const;

  // Accepts "12", "-3.25" and "7/3".
  static Rat parse(const std::string& token);

 private:
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static Rat from_i128(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw Error("rational overflow: value exceeds 64-bit range");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void assign(long long num, long long den) {
    *this = from_i128(i128(num), i128(den));
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace ttp

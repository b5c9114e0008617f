#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace phi4 {

// Exact rational arithmetic for the symbolic layer.  Coefficients in the
// constraint systems stay tiny (products of small integers), so a reduced
// int64 fraction with __int128 intermediates is ample; overflow asserts.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    assert(b.num_ != 0);
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // gcd of |a| and |b| as rationals: gcd(num)/lcm(den).
  static Rational gcd(const Rational& a, const Rational& b) {
    long long n = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.num_ < 0 ? -b.num_ : b.num_);
    long long l = a.den_ / std::gcd(a.den_, b.den_) * b.den_;
    return Rational(n, l);
  }

 private:
  using i128 = __int128;

  static Rational from128(i128 n, i128 d) {
    assert(d != 0);
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    assert(den_ != 0);
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

}  // namespace phi4

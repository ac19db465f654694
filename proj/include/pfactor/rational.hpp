#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "pfactor/error.hpp"

namespace pfactor {

/// Exact rational with 128-bit numerator and denominator, always reduced and
/// with a positive denominator. Values in the audit stay far below 2^100.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) detail::fail(ErrorCode::InvalidArgument, "zero denominator");
    normalize();
  }

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer <= value.
  Int floor() const noexcept {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return whole(a.num_ + b.num_);
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return whole(a.num_ - b.num_);
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return whole(a.num_ * b.num_);
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) detail::fail(ErrorCode::InvalidArgument, "division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int l = a.num_ * b.den_;
    const Int r = b.num_ * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string str() const {
    return den_ == 1 ? int_str(num_) : int_str(num_) + "/" + int_str(den_);
  }

  static std::string int_str(Int v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string out;
    while (v != 0) {
      const int digit = static_cast<int>(v % 10);
      out.insert(out.begin(), static_cast<char>('0' + (digit < 0 ? -digit : digit)));
      v /= 10;
    }
    return neg ? "-" + out : out;
  }

 private:
  static Rational whole(Int v) {
    Rational r;
    r.num_ = v;
    return r;
  }

  static Int abs(Int v) { return v < 0 ? -v : v; }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int a = abs(num_);
    Int b = den_;
    while (b != 0) {
      const Int t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num_ /= a;
      den_ /= a;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace pfactor

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "sl2calc/error.hpp"

namespace sl2calc {

/// Exact rational arithmetic on 64-bit words. All decay bounds are small
/// fractions, so no wide arithmetic is needed; operations normalize
/// eagerly and keep the denominator positive.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const { return Rational(num_ * o.den_, den_ * o.num_); }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  std::strong_ordering operator<=>(const Rational& o) const {
    // Denominators are positive, so cross multiplication preserves order.
    return num_ * o.den_ <=> o.num_ * den_;
  }
  bool operator==(const Rational&) const = default;

  bool is_integer() const { return den_ == 1; }

  /// "5", "1/2", "-3/4".
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ == 0) fail(Errc::internal, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "a", "a/b" (optional sign). Throws Errc::parse_error.
Rational parse_rational(const std::string& text);

}  // namespace sl2calc

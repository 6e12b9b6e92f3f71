#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ldcell/error.hpp"

namespace ldcell {

// Exact rational sum rate in bit levels, always kept in lowest terms with a
// positive denominator.
class Rate {
 public:
  constexpr Rate() = default;
  constexpr Rate(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Rate(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ParameterError("rate with zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  // Largest integer not above the value.
  constexpr std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  constexpr Rate operator-() const { return Rate(-num_, den_); }

  friend constexpr Rate operator+(const Rate& a, const Rate& b) {
    return Rate(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rate operator-(const Rate& a, const Rate& b) { return a + (-b); }
  friend constexpr Rate operator*(const Rate& a, const Rate& b) {
    return Rate(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rate operator/(const Rate& a, const Rate& b) {
    if (b.num_ == 0) throw ParameterError("division of a rate by zero");
    return Rate(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rate& operator+=(const Rate& o) { return *this = *this + o; }
  Rate& operator-=(const Rate& o) { return *this = *this - o; }

  friend constexpr bool operator==(const Rate& a, const Rate& b) = default;
  friend constexpr std::strong_ordering operator<=>(const Rate& a, const Rate& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  // "num/den", e.g. "27/2" or "14/1".
  std::string fraction() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  // Shortest exact decimal for denominators built from 2 and 5, otherwise six
  // digits after the point.
  std::string decimal() const;

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rate abs(const Rate& r) { return r.num() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rate& r) { return os << r.fraction(); }

}  // namespace ldcell

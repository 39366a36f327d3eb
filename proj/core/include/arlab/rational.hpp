#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace arlab {

/// Exact rational with 64-bit numerator and positive 64-bit denominator,
/// always kept in lowest terms. Arithmetic goes through 128-bit
/// intermediates and throws std::overflow_error if a reduced result does
/// not fit; magnitudes in this library stay tiny (0/1 features, small grids,
/// probabilities over small supports).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Parses "p", "p/q", or a finite decimal such as "0.125". Throws
  /// std::invalid_argument on anything else.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const noexcept { return num_ == 0; }
  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace arlab

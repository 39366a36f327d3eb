#include "arlab/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace arlab {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// Whole-string integer parse; std::stoll would accept trailing junk.
std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) throw std::invalid_argument("not a rational: " + whole);
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return {parse_int(text.substr(0, slash), text), den};
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return {parse_int(text, text)};
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.size() > 18) throw std::invalid_argument("too many decimal places: " + text);
  if (frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("not a rational: " + text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const bool negative = !whole.empty() && whole[0] == '-';
  const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole, text);
  const std::int64_t f = frac.empty() ? 0 : parse_int(frac, text);
  const Rational magnitude = Rational(negative ? -w : w) + Rational(f, scale);
  return negative ? -magnitude : magnitude;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace arlab

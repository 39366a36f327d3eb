#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arlab {

enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit to_bit(bool value) noexcept { return value ? Bit::one : Bit::zero; }
constexpr int to_int(Bit b) noexcept { return static_cast<int>(b); }
constexpr Bit flip(Bit b) noexcept { return b == Bit::one ? Bit::zero : Bit::one; }
constexpr char to_char(Bit b) noexcept { return b == Bit::one ? '1' : '0'; }

/// Read-only window over a run of bits.
using BitView = std::span<const Bit>;

/// True iff `prefix` is a (not necessarily proper) prefix of `s`.
bool is_prefix(BitView prefix, BitView s) noexcept;

/// A finite string over {0,1}. One byte per bit; strings in this library are
/// short (tens of symbols) and are copied and compared far more often than
/// stored.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {}
  BitString(std::initializer_list<Bit> bits) : bits_(bits) {}
  explicit BitString(BitView view) : bits_(view.begin(), view.end()) {}

  /// Parses ASCII '0'/'1'. Throws std::invalid_argument on any other byte.
  static BitString parse(std::string_view text);
  static BitString repeat(Bit b, std::size_t count);
  static BitString zeros(std::size_t count) { return repeat(Bit::zero, count); }
  /// Low `width` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const noexcept { return bits_[i]; }
  Bit back() const noexcept { return bits_.back(); }
  BitView view() const noexcept { return {bits_.data(), bits_.size()}; }
  operator BitView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  void push_back(Bit b) { bits_.push_back(b); }
  void pop_back() { bits_.pop_back(); }
  void reserve(std::size_t n) { bits_.reserve(n); }
  BitString& append(BitView tail);

  BitString prefix(std::size_t n) const;
  BitString suffix_from(std::size_t pos) const;
  bool starts_with(BitView p) const noexcept { return is_prefix(p, view()); }
  bool is_prefix_of(BitView s) const noexcept { return is_prefix(view(), s); }
  bool all_zero() const noexcept;
  /// Interprets the string as a big-endian integer. Requires size() <= 64.
  std::uint64_t to_uint() const noexcept;

  std::string to_string() const;

  auto operator<=>(const BitString&) const = default;
  bool operator==(const BitString&) const = default;

  friend BitString operator+(BitString lhs, BitView rhs) {
    lhs.append(rhs);
    return lhs;
  }

 private:
  std::vector<Bit> bits_;
};

/// Shorthand for literals in tests and examples: "0101"_bits.
inline namespace literals {
inline BitString operator""_bits(const char* text, std::size_t n) {
  return BitString::parse(std::string_view(text, n));
}
}  // namespace literals

}  // namespace arlab

template <>
struct std::hash<arlab::BitString> {
  std::size_t operator()(const arlab::BitString& s) const noexcept;
};

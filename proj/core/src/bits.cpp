#include "arlab/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace arlab {

bool is_prefix(BitView prefix, BitView s) noexcept {
  return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(Bit::zero);
    } else if (c == '1') {
      bits.push_back(Bit::one);
    } else {
      throw std::invalid_argument("bit string may only contain '0' and '1': \"" + std::string(text) +
                                  "\"");
    }
  }
  return BitString(std::move(bits));
}

BitString BitString::repeat(Bit b, std::size_t count) {
  return BitString(std::vector<Bit>(count, b));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  std::vector<Bit> bits(width, Bit::zero);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = to_bit(((value >> i) & 1U) != 0);
  }
  return BitString(std::move(bits));
}

BitString& BitString::append(BitView tail) {
  bits_.insert(bits_.end(), tail.begin(), tail.end());
  return *this;
}

BitString BitString::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BitString(std::vector<Bit>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

BitString BitString::suffix_from(std::size_t pos) const {
  pos = std::min(pos, bits_.size());
  return BitString(std::vector<Bit>(bits_.begin() + static_cast<std::ptrdiff_t>(pos), bits_.end()));
}

bool BitString::all_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](Bit b) { return b == Bit::zero; });
}

std::uint64_t BitString::to_uint() const noexcept {
  std::uint64_t v = 0;
  for (Bit b : bits_) v = (v << 1U) | static_cast<std::uint64_t>(to_int(b));
  return v;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (Bit b : bits_) out.push_back(to_char(b));
  return out;
}

}  // namespace arlab

std::size_t std::hash<arlab::BitString>::operator()(const arlab::BitString& s) const noexcept {
  // FNV-1a over the bits plus the length.
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h ^= static_cast<std::size_t>(arlab::to_int(s[i])) + 1;
    h *= 1099511628211ULL;
  }
  return h ^ s.size();
}

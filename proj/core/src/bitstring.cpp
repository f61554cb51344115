#include "algstat/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace algstat {

Bitstring Bitstring::parse(std::string_view text) {
  if (text == "-") return {};
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("not a bitstring: '" + std::string(text) + "'");
    }
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::from_uint(std::uint64_t value, std::size_t width) {
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::numeral(std::uint64_t value) {
  if (value == 0) return parse("0");
  std::size_t width = 0;
  for (std::uint64_t v = value; v != 0; v >>= 1) ++width;
  return from_uint(value, width);
}

std::vector<Bitstring> Bitstring::all_of_length(std::size_t n) {
  std::vector<Bitstring> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) out.push_back(from_uint(v, n));
  return out;
}

std::vector<Bitstring> Bitstring::all_up_to(std::size_t n) {
  std::vector<Bitstring> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = all_of_length(len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Bitstring Bitstring::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return Bitstring(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Bitstring Bitstring::drop_back(std::size_t k) const {
  return prefix(k >= bits_.size() ? 0 : bits_.size() - k);
}

Bitstring Bitstring::flipped() const {
  std::vector<std::uint8_t> bits(bits_);
  for (auto& b : bits) b ^= 1U;
  return Bitstring(std::move(bits));
}

bool Bitstring::starts_with(const Bitstring& head) const noexcept {
  return head.size() <= size() && std::equal(head.bits_.begin(), head.bits_.end(), bits_.begin());
}

std::uint64_t Bitstring::to_uint() const noexcept {
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string Bitstring::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string Bitstring::token() const { return empty() ? std::string("-") : str(); }

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.bits_.begin(), a.bits_.end(), b.bits_.begin(), b.bits_.end());
}

Bitstring operator+(Bitstring a, const Bitstring& b) {
  a.append(b);
  return a;
}

std::size_t BitstringHash::operator()(const Bitstring& s) const noexcept {
  // FNV-1a over the bits, with the length folded in.
  std::uint64_t h = 1469598103934665603ULL ^ s.size();
  std::uint64_t word = 0;
  int filled = 0;
  for (auto b : s.raw()) {
    word = (word << 1) | b;
    if (++filled == 8) {
      h = (h ^ word) * 1099511628211ULL;
      word = 0;
      filled = 0;
    }
  }
  h = (h ^ (word | (std::uint64_t{1} << filled))) * 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

}  // namespace algstat

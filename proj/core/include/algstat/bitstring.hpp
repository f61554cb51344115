#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace algstat {

/// Finite binary string. Ordering is (length, lexicographic), which is the
/// tie-break order used throughout the library.
class Bitstring {
 public:
  Bitstring() = default;

  /// Parses "0101"; the empty view and the literal "-" both denote the empty
  /// string. Throws std::invalid_argument on any other character.
  static Bitstring parse(std::string_view text);

  /// The `width` low bits of `value`, most significant first.
  static Bitstring from_uint(std::uint64_t value, std::size_t width);

  /// Binary numeral without leading zeros; 0 is rendered as "0".
  static Bitstring numeral(std::uint64_t value);

  static Bitstring zeros(std::size_t n) { return Bitstring(std::vector<std::uint8_t>(n, 0)); }

  /// All strings of length exactly n, in lexicographic order.
  static std::vector<Bitstring> all_of_length(std::size_t n);

  /// All strings of length at most n, in (length, lex) order.
  static std::vector<Bitstring> all_up_to(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const Bitstring& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  Bitstring prefix(std::size_t n) const;
  /// Removes the last k bits (everything when k >= size()).
  Bitstring drop_back(std::size_t k) const;
  Bitstring flipped() const;
  bool starts_with(const Bitstring& head) const noexcept;

  /// Value of the string read as an unsigned binary numeral (MSB first).
  /// Only meaningful for strings of at most 64 bits.
  std::uint64_t to_uint() const noexcept;

  /// "0101"; the empty string renders as "".
  std::string str() const;
  /// Like str(), but the empty string renders as "-" so it survives
  /// whitespace-separated text formats.
  std::string token() const;

  const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) noexcept;

 private:
  explicit Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::vector<std::uint8_t> bits_;
};

Bitstring operator+(Bitstring a, const Bitstring& b);

/// Writes token(), so the empty string appears as "-".
inline std::ostream& operator<<(std::ostream& os, const Bitstring& s) { return os << s.token(); }

struct BitstringHash {
  std::size_t operator()(const Bitstring& s) const noexcept;
};

}  // namespace algstat

template <>
struct std::hash<algstat::Bitstring> {
  std::size_t operator()(const algstat::Bitstring& s) const noexcept { return algstat::BitstringHash{}(s); }
};

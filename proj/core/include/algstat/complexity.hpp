#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace algstat {

/// A program length or the distinguished +infinity marker ("no program of
/// length <= L does it"). Infinity compares greater than every finite value
/// and absorbs addition.
class Complexity {
 public:
  constexpr Complexity() = default;
  constexpr explicit Complexity(int bits) : value_(bits) {}

  static constexpr Complexity infinite() { return Complexity(kInf); }

  constexpr bool finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }
  /// Only meaningful when finite().
  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(Complexity, Complexity) = default;

  friend constexpr Complexity operator+(Complexity a, Complexity b) {
    return (a.finite() && b.finite()) ? Complexity(a.value_ + b.value_) : infinite();
  }

  std::string str() const { return finite() ? std::to_string(value_) : std::string("inf"); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int value_ = kInf;
};

inline std::ostream& operator<<(std::ostream& os, Complexity c) { return os << c.str(); }

}  // namespace algstat

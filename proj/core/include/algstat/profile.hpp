#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "algstat/complexity.hpp"

namespace algstat {

struct ProfilePoint {
  int complexity = 0;  ///< m
  int log_card = 0;    ///< l

  friend auto operator<=>(const ProfilePoint&, const ProfilePoint&) = default;
};

/// ceil(log2(n)) for n >= 1; the integer grid coordinate of a set of size n.
int ceil_log2(std::uint64_t n);

/// An upward-closed subset of N^2 stored as its Pareto frontier: points with
/// strictly increasing complexity and strictly decreasing log-cardinality.
/// (m, l) belongs to the profile iff some frontier point is <= it in both
/// coordinates.
class Profile {
 public:
  Profile() = default;

  /// Upward closure of arbitrary points.
  static Profile from_points(std::vector<ProfilePoint> points);

  /// {(m, l) : m >= k or m + l >= n}, the shape of an antistochastic string.
  static Profile l_shape(int k, int n);

  const std::vector<ProfilePoint>& frontier() const { return frontier_; }
  bool empty() const { return frontier_.empty(); }

  bool contains(int m, int l) const;
  bool contains(ProfilePoint p) const { return contains(p.complexity, p.log_card); }
  bool subset_of(const Profile& other) const;

  /// Smallest l with (m, l) in the profile.
  std::optional<int> min_log_card(int m) const;

  /// Translation by (dm, dl); negative coordinates are clamped to 0.
  Profile shifted(int dm, int dl) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<ProfilePoint> frontier_;
};

/// Smallest d such that every point of `from` lies in the l-infinity
/// d-dilation of `to` (frontier points suffice by upward closure). Infinite
/// when `to` is empty and `from` is not.
Complexity dilation_distance(const Profile& from, const Profile& to);

/// Two profiles are e-close iff each lies in the e-dilation of the other;
/// this is the least such e.
Complexity closeness(const Profile& a, const Profile& b);

}  // namespace algstat

#include "algstat/profile.hpp"

#include <algorithm>
#include <limits>

namespace algstat {

int ceil_log2(std::uint64_t n) {
  int l = 0;
  while (l < 64 && (std::uint64_t{1} << l) < n) ++l;
  return l;
}

Profile Profile::from_points(std::vector<ProfilePoint> points) {
  std::sort(points.begin(), points.end());
  Profile p;
  for (const auto& pt : points) {
    if (p.frontier_.empty() || pt.log_card < p.frontier_.back().log_card) {
      if (!p.frontier_.empty() && p.frontier_.back().complexity == pt.complexity) continue;
      p.frontier_.push_back(pt);
    }
  }
  return p;
}

Profile Profile::l_shape(int k, int n) {
  std::vector<ProfilePoint> pts;
  for (int m = 0; m < k; ++m) pts.push_back({m, std::max(0, n - m)});
  pts.push_back({k, 0});
  return from_points(std::move(pts));
}

bool Profile::contains(int m, int l) const {
  for (const auto& f : frontier_) {
    if (f.complexity > m) break;
    if (f.log_card <= l) return true;
  }
  return false;
}

bool Profile::subset_of(const Profile& other) const {
  return std::all_of(frontier_.begin(), frontier_.end(), [&](const ProfilePoint& p) { return other.contains(p); });
}

std::optional<int> Profile::min_log_card(int m) const {
  std::optional<int> best;
  for (const auto& f : frontier_) {
    if (f.complexity > m) break;
    best = f.log_card;
  }
  return best;
}

Profile Profile::shifted(int dm, int dl) const {
  std::vector<ProfilePoint> pts;
  pts.reserve(frontier_.size());
  for (const auto& f : frontier_) pts.push_back({std::max(0, f.complexity + dm), std::max(0, f.log_card + dl)});
  return from_points(std::move(pts));
}

Complexity dilation_distance(const Profile& from, const Profile& to) {
  if (from.empty()) return Complexity(0);
  if (to.empty()) return Complexity::infinite();
  int worst = 0;
  for (const auto& a : from.frontier()) {
    int best = std::numeric_limits<int>::max();
    for (const auto& b : to.frontier()) {
      best = std::min(best, std::max({b.complexity - a.complexity, b.log_card - a.log_card, 0}));
    }
    worst = std::max(worst, best);
  }
  return Complexity(worst);
}

Complexity closeness(const Profile& a, const Profile& b) {
  return std::max(dilation_distance(a, b), dilation_distance(b, a));
}

}  // namespace algstat

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "algstat/set_codec.hpp"

namespace algstat {

/// An enumerable class of finite sets, represented by a deterministic
/// enumerator of its finite fragment (members whose strings have length <=
/// max_len) and a membership test.
class ModelFamily {
 public:
  using Enumerator = std::function<std::vector<StringSet>(int max_len)>;
  using Membership = std::function<bool(const StringSet&)>;

  ModelFamily(std::string name, Enumerator enumerate, Membership contains)
      : name_(std::move(name)), enumerate_(std::move(enumerate)), contains_(std::move(contains)) {}

  const std::string& name() const { return name_; }
  std::vector<StringSet> enumerate(int max_len) const { return enumerate_(max_len); }
  bool contains(const StringSet& set) const { return contains_(set); }

 private:
  std::string name_;
  Enumerator enumerate_;
  Membership contains_;
};

/// All sets {u v : l(v) = m}: prefix cylinders inside one cube.
ModelFamily cylinder_family();
/// All singletons {u}.
ModelFamily singleton_family();
/// All nonempty subsets of {0,1}^n; the enumerated fragment stops at n = 3.
ModelFamily all_sets_family();

struct AcceptabilityReport {
  bool accepted = false;
  int failed_property = 0;  ///< 0 on success, else 1, 2 or 3
  bool budget_exhausted = false;
  std::string detail;
};

/// Checks the three acceptability properties on the fragment of strings of
/// length <= n_hi: (1) the enumerator is reproducible and duplicate-free,
/// (2) {0,1}^n is a member for n in [n_lo, n_hi], (3) for every member A, n
/// in range and 1 <= c < |A|, the n-bit strings of A are covered by at most
/// p(n)|A|/c members of size <= c, where p has coefficients `p_bound` (lowest
/// degree first). Property (3) uses a greedy cover; `search_budget` caps the
/// number of candidate evaluations.
AcceptabilityReport is_acceptable(const ModelFamily& family, int n_lo, int n_hi, const std::vector<double>& p_bound,
                                  std::uint64_t search_budget = 2'000'000'000ULL);

}  // namespace algstat

#include "algstat/family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "algstat/errors.hpp"

namespace algstat {

namespace {

bool uniform_length(const StringSet& s) {
  return std::all_of(s.begin(), s.end(), [&](const Bitstring& e) { return e.size() == s.front().size(); });
}

bool is_sorted_set(const StringSet& s) { return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end(); }

double poly(const std::vector<double>& coeffs, int n) {
  double v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * n + coeffs[i];
  return v;
}

}  // namespace

ModelFamily cylinder_family() {
  auto enumerate = [](int max_len) {
    std::vector<StringSet> out;
    for (int len = 0; len <= max_len; ++len) {
      for (int free = len; free >= 0; --free) {
        for (auto& u : Bitstring::all_of_length(static_cast<std::size_t>(len - free))) {
          StringSet s;
          for (auto& v : Bitstring::all_of_length(static_cast<std::size_t>(free))) s.push_back(u + v);
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  };
  auto contains = [](const StringSet& s) {
    if (s.empty() || !is_sorted_set(s) || !uniform_length(s)) return false;
    if (!std::has_single_bit(s.size())) return false;
    const std::size_t free = static_cast<std::size_t>(std::countr_zero(s.size()));
    const std::size_t len = s.front().size();
    if (free > len) return false;
    const Bitstring head = s.front().prefix(len - free);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != head + Bitstring::from_uint(i, free)) return false;
    }
    return true;
  };
  return ModelFamily("cylinders", enumerate, contains);
}

ModelFamily singleton_family() {
  auto enumerate = [](int max_len) {
    std::vector<StringSet> out;
    for (auto& u : Bitstring::all_up_to(static_cast<std::size_t>(max_len))) out.push_back({u});
    return out;
  };
  return ModelFamily("singletons", enumerate, [](const StringSet& s) { return s.size() == 1; });
}

ModelFamily all_sets_family() {
  auto enumerate = [](int max_len) {
    std::vector<StringSet> out;
    for (int n = 0; n <= std::min(max_len, 3); ++n) {
      auto cube = Bitstring::all_of_length(static_cast<std::size_t>(n));
      const std::uint64_t subsets = std::uint64_t{1} << cube.size();
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        StringSet s;
        for (std::size_t i = 0; i < cube.size(); ++i) {
          if ((mask >> i) & 1U) s.push_back(cube[i]);
        }
        out.push_back(std::move(s));
      }
    }
    return out;
  };
  auto contains = [](const StringSet& s) { return !s.empty() && is_sorted_set(s) && uniform_length(s); };
  return ModelFamily("all-sets", enumerate, contains);
}

AcceptabilityReport is_acceptable(const ModelFamily& family, int n_lo, int n_hi, const std::vector<double>& p_bound,
                                  std::uint64_t search_budget) {
  if (n_lo < 0 || n_hi < n_lo || n_hi > 16) throw PreconditionError("is_acceptable: need 0 <= n_lo <= n_hi <= 16");
  AcceptabilityReport report;
  auto fail = [&](int property, std::string detail) {
    report.failed_property = property;
    report.detail = std::move(detail);
    return report;
  };

  // (1) reproducible, duplicate-free, members are canonical sets.
  const auto members = family.enumerate(n_hi);
  if (members != family.enumerate(n_hi)) return fail(1, "enumerator is not reproducible");
  {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail(1, "enumerator repeats a member");
    for (auto& m : members) {
      if (m.empty() || !is_sorted_set(m)) return fail(1, "enumerator produced a non-canonical set");
    }
  }

  // (2) cubes.
  for (int n = n_lo; n <= n_hi; ++n) {
    auto cube = Bitstring::all_of_length(static_cast<std::size_t>(n));
    if (!family.contains(cube) || std::find(members.begin(), members.end(), cube) == members.end()) {
      return fail(2, "{0,1}^" + std::to_string(n) + " is not a member");
    }
  }

  // (3) covering. Members are encoded as bitmasks over {0,1}^n.
  std::uint64_t spent = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const std::size_t words = ((std::size_t{1} << n) + 63) / 64;
    struct Mask {
      std::vector<std::uint64_t> bits;
      std::size_t size;
    };
    auto to_mask = [&](const StringSet& s) {
      Mask m{std::vector<std::uint64_t>(words, 0), s.size()};
      for (auto& e : s) {
        if (e.size() != static_cast<std::size_t>(n)) continue;
        const auto v = e.to_uint();
        m.bits[v / 64] |= std::uint64_t{1} << (v % 64);
      }
      return m;
    };
    std::vector<Mask> cands;
    for (auto& m : members) {
      auto mask = to_mask(m);
      if (std::any_of(mask.bits.begin(), mask.bits.end(), [](std::uint64_t w) { return w != 0; })) {
        cands.push_back(std::move(mask));
      }
    }
    const double pn = poly(p_bound, n);
    for (std::size_t ai = 0; ai < members.size(); ++ai) {
      const auto& a = members[ai];
      const Mask slice = to_mask(a);
      if (std::all_of(slice.bits.begin(), slice.bits.end(), [](std::uint64_t w) { return w == 0; })) continue;
      for (std::size_t c = 1; c < a.size(); ++c) {
        auto uncovered = slice.bits;
        std::size_t used = 0;
        for (;;) {
          std::size_t best = 0, best_gain = 0;
          for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cands[i].size > c) continue;
            std::size_t gain = 0;
            for (std::size_t w = 0; w < words; ++w) gain += static_cast<std::size_t>(std::popcount(cands[i].bits[w] & uncovered[w]));
            if (gain > best_gain) {
              best_gain = gain;
              best = i;
            }
          }
          spent += cands.size();
          if (spent > search_budget) {
            report.budget_exhausted = true;
            report.detail = "search budget exhausted at n=" + std::to_string(n);
            return report;
          }
          if (best_gain == 0) break;
          ++used;
          for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~cands[best].bits[w];
        }
        const bool covered = std::all_of(uncovered.begin(), uncovered.end(), [](std::uint64_t w) { return w == 0; });
        const double bound = pn * static_cast<double>(a.size()) / static_cast<double>(c);
        if (!covered || static_cast<double>(used) > bound) {
          std::string what = covered ? "needs " + std::to_string(used) + " sets, bound " + std::to_string(bound)
                                     : "cannot be covered";
          return fail(3, "slice n=" + std::to_string(n) + " of member #" + std::to_string(ai) + " with c=" +
                             std::to_string(c) + " " + what);
        }
      }
    }
  }
  report.accepted = true;
  return report;
}

}  // namespace algstat

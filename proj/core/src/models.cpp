#include "algstat/models.hpp"

#include <algorithm>
#include <cmath>

#include "algstat/errors.hpp"

namespace algstat {

namespace {

void check_m_max(const ModelCatalog& catalog, int m_max) {
  if (m_max < 0 || m_max > catalog.m_max()) throw PreconditionError("m_max exceeds the model catalog");
}

}  // namespace

Profile profile(const ModelCatalog& catalog, const Bitstring& x, int m_max) {
  check_m_max(catalog, m_max);
  std::vector<ProfilePoint> pts;
  for (auto i : catalog.containing(x)) {
    const auto& m = catalog.models()[i];
    if (m.complexity.value() <= m_max) pts.push_back({m.complexity.value(), m.log_card()});
  }
  return Profile::from_points(std::move(pts));
}

Profile profile(const HaltingTable& table, const Bitstring& x, int m_max) {
  return profile(ModelCatalog(table, m_max), x, m_max);
}

std::vector<StrongModel> strong_models(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x,
                                       Complexity eps, int m_max) {
  check_m_max(catalog, m_max);
  std::vector<StrongModel> out;
  for (auto i : catalog.containing(x)) {
    const auto& m = catalog.models()[i];
    if (m.complexity.value() > m_max) continue;
    const Complexity strength = table.total_cond_complexity(m.code, x);
    if (eps.finite() && strength > eps) continue;
    out.push_back({&m, strength});
  }
  return out;
}

Profile strong_profile(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, Complexity eps,
                       int m_max) {
  if (eps.is_infinite()) return profile(catalog, x, m_max);
  std::vector<ProfilePoint> pts;
  for (auto& s : strong_models(table, catalog, x, eps, m_max)) {
    pts.push_back({s.model->complexity.value(), s.model->log_card()});
  }
  return Profile::from_points(std::move(pts));
}

Profile restricted_profile(const HaltingTable& table, const Bitstring& x, const ModelFamily& family, int m_max) {
  std::vector<ProfilePoint> pts;
  for (auto& members : family.enumerate(static_cast<int>(x.size()))) {
    if (!std::binary_search(members.begin(), members.end(), x)) continue;
    const Complexity c = table.complexity(encode_set(members));
    if (c.finite() && c.value() <= m_max) pts.push_back({c.value(), ceil_log2(members.size())});
  }
  return Profile::from_points(std::move(pts));
}

MssVerdict is_mss(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, const ModelSet& model,
                  int delta, double eps, double D, int m_max) {
  check_m_max(catalog, m_max);
  MssVerdict v;
  v.sufficiency = is_sufficient(table, x, model, eps);
  if (!v.sufficiency.sufficient) return v;
  const int cx = table.complexity(x).value();
  const double threshold = eps + (cx > 1 ? D * std::log2(static_cast<double>(cx)) : 0.0);
  for (auto i : catalog.containing(x)) {
    const auto& b = catalog.models()[i];
    if (b.complexity.value() > m_max) continue;
    if (b.complexity.value() >= model.complexity.value() - delta) continue;
    if (b.complexity.value() + b.log2_card() - cx < threshold) {
      v.counterexample = b;
      return v;
    }
  }
  v.is_mss = true;
  return v;
}

NormalityGap normality_gap(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, Complexity eps,
                           int m_max) {
  NormalityGap g;
  g.full = profile(catalog, x, m_max);
  g.strong = strong_profile(table, catalog, x, eps, m_max);
  g.gap = dilation_distance(g.full, g.strong);
  return g;
}

ProfileLawSlack profile_law_slack(const HaltingTable& table, const Profile& p, const Bitstring& x) {
  ProfileLawSlack s;
  const Complexity cx = table.complexity(x);
  for (const auto& f : p.frontier()) {
    if (cx.finite()) s.two_part = std::max(s.two_part, cx.value() - f.complexity - f.log_card);
    for (int c = 0; c <= f.log_card; ++c) {
      const int b = f.log_card - c;
      // Least m with (m, c) in the profile.
      std::optional<int> least;
      for (const auto& g : p.frontier()) {
        if (g.log_card <= c) {
          least = g.complexity;
          break;
        }
      }
      if (!least) {
        ++s.unresolved;
        continue;
      }
      s.slice = std::max(s.slice, *least - f.complexity - b);
    }
  }
  return s;
}

}  // namespace algstat

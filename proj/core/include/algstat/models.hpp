#pragma once

#include <optional>

#include "algstat/family.hpp"
#include "algstat/model_catalog.hpp"
#include "algstat/profile.hpp"

namespace algstat {

/// P_x restricted to models of complexity <= m_max. m_max must not exceed
/// catalog.m_max().
Profile profile(const ModelCatalog& catalog, const Bitstring& x, int m_max);
Profile profile(const HaltingTable& table, const Bitstring& x, int m_max);

/// P_x^eps: only models with CT([A]|x) <= eps. An infinite eps disables the
/// filter. Requires x recorded and totality known unless eps is infinite.
Profile strong_profile(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, Complexity eps,
                       int m_max);

/// P_x over the members of `family` that contain x and have C([A]) <= m_max.
Profile restricted_profile(const HaltingTable& table, const Bitstring& x, const ModelFamily& family, int m_max);

/// Models containing x admitted by the strong filter, in (complexity, code)
/// order, together with their strength CT([A]|x).
struct StrongModel {
  const ModelSet* model;
  Complexity strength;
};
std::vector<StrongModel> strong_models(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x,
                                       Complexity eps, int m_max);

struct MssVerdict {
  bool is_mss = false;
  SufficiencyVerdict sufficiency;
  std::optional<ModelSet> counterexample;  ///< first offending B in (complexity, code) order
};

/// A is a delta,eps,D-MSS for x: eps-sufficient, and no model B for x with
/// C(B) <= m_max has C(B) < C(A) - delta and
/// C(B) + log2|B| - C(x) < eps + D log2 C(x). The log term is 0 when C(x) <= 1.
MssVerdict is_mss(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, const ModelSet& model,
                  int delta, double eps, double D, int m_max);

struct NormalityGap {
  Complexity gap;  ///< directed l-infinity distance from P_x to P_x^eps
  Profile full;
  Profile strong;
};

NormalityGap normality_gap(const HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x, Complexity eps,
                           int m_max);

/// Measured slack of the two profile laws for general strings:
///  slice: for a frontier point (a, b + c), the least m with (m, c) in P_x
///         exceeds a + b by at most `slice`;
///  two_part: every frontier point has a + b >= C(x) - two_part.
/// Points whose target lies beyond m_max are counted as unresolved.
struct ProfileLawSlack {
  int slice = 0;
  int two_part = 0;
  int unresolved = 0;
};
ProfileLawSlack profile_law_slack(const HaltingTable& table, const Profile& p, const Bitstring& x);

}  // namespace algstat

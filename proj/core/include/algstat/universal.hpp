#pragma once

#include <cstdint>
#include <vector>

#include "algstat/model_set.hpp"
#include "algstat/omega.hpp"

namespace algstat {

/// Exponents of the set bits of omega, descending.
std::vector<int> omega_decomposition(std::uint64_t omega);

/// One block S_{m,s}: `count` = 2^s consecutive entries of L_m starting at
/// position `first` of the enumeration order of L_m.
struct Group {
  int m = 0;
  int s = 0;
  std::uint64_t first = 0;
  std::uint64_t count = 0;
  friend bool operator==(const Group&, const Group&) = default;
};

struct GroupDecomposition {
  int m = 0;
  std::vector<int> s_values;
  std::vector<Group> groups;
};

GroupDecomposition universal_groups(const OmegaLedger& ledger, int m);
/// Members of a group as a canonical set.
StringSet group_members(const OmegaLedger& ledger, const Group& group);
ModelSet group_model(const HaltingTable& table, const OmegaLedger& ledger, const Group& group);

struct Located {
  Group group;
  ModelSet model;
};

/// The group of L_m containing x. Throws PreconditionError when C(x) > m.
Located locate(const HaltingTable& table, const OmegaLedger& ledger, const Bitstring& x, int m);

/// Every group S_{m,s} with m <= ledger.m_max() that contains x, with
/// deficiency and the comparison against a model A. Conditions [A] and the
/// n-bit slice of A are recorded in the table as needed.
struct GroupComparison {
  Group group;
  ModelSet model;
  double deficiency = 0;
  Complexity c_given_a;        ///< C([S] | [A])
  Complexity c_given_a_slice;  ///< C([S] | [A']), A' = {y in A : l(y) = l(x)}
};

struct Theorem4Witness {
  bool exists_for_all_m = false;  ///< some group contains x at every m in [C(x), m_max]
  std::vector<GroupComparison> groups;
  /// Index into `groups` of the first group (in (m, s) order) with least
  /// deficiency among those of finite complexity; -1 when none.
  int best = -1;
  double deficiency_a = 0;
  double deficiency_a_slice = 0;
  double delta_gap = 0;        ///< deficiency(best) - deficiency(A)
  double delta_gap_slice = 0;  ///< deficiency(best) - deficiency(A')
};

Theorem4Witness verify_theorem4(HaltingTable& table, const OmegaLedger& ledger, const Bitstring& x,
                                const ModelSet& model);

/// Quantities around Omega: C(Omega_a | Omega_b), C(Omega_{m-s} | S_{m,s}),
/// C(S_{m,s} | Omega_{m-s}) and C(Omega_a) - a. Omega values are binary
/// numerals; conditions are recorded as needed.
struct Lemma1Report {
  Complexity omega_a_given_b;
  Complexity omega_given_group;
  Complexity group_given_omega;
  Complexity c_omega_a;
  int a = 0;
};

Lemma1Report lemma1_report(HaltingTable& table, const OmegaLedger& ledger, int a, int b, int m, int s);

/// max over a, b <= ledger.m_max() of C(Omega_a | Omega_b) - |a - b| over
/// finite values.
int lemma8_slack(HaltingTable& table, const OmegaLedger& ledger);

}  // namespace algstat

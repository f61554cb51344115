#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algstat/constructions.hpp"
#include "algstat/improvement.hpp"

namespace algstat {

struct HereditaryPoint {
  ProfilePoint point;        ///< (a, b) on the frontier of P_{[A_1]}
  std::string failed_stage;  ///< empty when every stage completed
  std::optional<ModelSet> witness;  ///< eps-strong model for x near (a, b + log|A_1|)
  int witness_slack = 0;            ///< l-infinity distance of the witness from the lifted point
  std::optional<ImprovementTrace> trace;
  std::optional<ModelSet> m;
  std::optional<PartitionResult> m1;
  std::uint64_t a1_cap_m1 = 0;  ///< |A_1 cap M_1|
  std::uint64_t h_size = 0;     ///< |H|
  double h_bound = 0;           ///< |M_1| / (2 |A_1 cap M_1|)
  bool h_bound_holds = false;
  double h_bound_floor = 0;     ///< |M_1| / 2^floor(log2 |A_1 cap M_1|)
  bool h_bound_floor_holds = false;
  std::optional<ModelSet> b;    ///< {[A'] : A' in H}, a model for [A_1]
  Complexity ct_b_given_a1;
  std::optional<ModelSet> d;    ///< image of B under the total map [A_1] -> [A]
  bool a_in_d = false;
  bool log_d_le_log_b = false;
  Complexity ct_d_given_a;
};

struct HereditaryReport {
  bool mss = false;
  bool strong = false;
  Complexity normality_gap_x;
  Bitstring program;  ///< shortest total program mapping x to [A]
  std::optional<PartitionResult> step1;
  Bitstring back_program;  ///< shortest total program mapping [A_1] to [A], if any
  bool has_back_program = false;
  std::vector<HereditaryPoint> points;
  Profile strong_points_for_a;  ///< (C(D), ceil log2|D|) over finite C(D)
  NormalityGap gap_a1;
  NormalityGap gap_a;
};

/// Runs the whole hereditary pipeline at desk scale. Preconditions are
/// evaluated and reported rather than enforced; a stage that cannot proceed
/// is named in the point's failed_stage.
HereditaryReport hereditary_check(HaltingTable& table, const OmegaLedger& ledger, const ModelCatalog& catalog,
                                  const Bitstring& x, const ModelSet& model, Complexity eps, int delta, double D,
                                  int alpha, int theta, int cap);

}  // namespace algstat

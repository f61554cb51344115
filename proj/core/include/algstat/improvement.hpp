#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algstat/models.hpp"
#include "algstat/omega.hpp"

namespace algstat {

struct TraceStep {
  char kind = 'A';  ///< 'A' for A_i, 'B' for B_i
  int index = 1;
  ModelSet model;
  double deficiency = 0;
  Complexity strength;  ///< CT([model] | x)
};

enum class StopReason { small_step, iteration_cap, g_failure };
std::string to_string(StopReason r);

struct ImprovementTrace {
  std::vector<TraceStep> steps;  ///< A_1, B_1, A_2, B_2, ...
  StopReason stop = StopReason::small_step;
  int big_steps = 0;
  std::optional<ModelSet> h;  ///< the last A_i, absent only on g-failure before any stop
  Complexity c_h_given_omega;  ///< C([H] | Omega_{C(H)})
  bool f_identity = false;     ///< f found no group and returned its argument
};

/// A_1 = A, B_i = f(A_i), A_{i+1} = g(B_i); stops when C(A_i) - C(B_i) <= theta
/// (H = A_i), when g returns nothing, or after `cap` big steps.
using ModelStep = std::function<std::optional<ModelSet>(const ModelSet&)>;
ImprovementTrace improve_loop(const HaltingTable& table, const Bitstring& x, const ModelSet& a, const ModelStep& f,
                              const ModelStep& g, int theta, int cap);

/// f picks the least-deficiency group S_{m,s} of finite complexity containing
/// x (first in (m, s) order); g picks, among eps-strong models B' in the
/// catalog with C(B') <= C(B) + alpha and log2|B'| <= log2|B| + alpha, the one
/// of least complexity, then cardinality, then code. Records x and the
/// Omega numerals.
ImprovementTrace improve_sequence(HaltingTable& table, const OmegaLedger& ledger, const ModelCatalog& catalog,
                                  const Bitstring& x, const ModelSet& a, Complexity eps, int alpha, int theta, int cap);

/// ceil(C(A_1) / (theta - alpha)); requires theta > alpha.
int improvement_iteration_bound(const ModelSet& a1, int theta, int alpha);

/// Default theta = ceil(sqrt(n)) and alpha = ceil(sqrt(n)/2) - 1.
int default_theta(int n);
int default_alpha(int n);

}  // namespace algstat

#pragma once

#include <optional>
#include <vector>

#include "algstat/models.hpp"
#include "algstat/universal.hpp"

namespace algstat {

/// First n-bit string, in lexicographic order, outside every model A with
/// C(A) < k and |A| <= 2^(n-k). Requires k <= n and k - 1 <= catalog.m_max().
Bitstring antistochastic(const ModelCatalog& catalog, int n, int k);

struct Witness {
  ModelSet model;
  Complexity strength;  ///< CT([A_i] | x)
};

/// A_i = {x' of length n agreeing with x on the first i bits} for i < k, and
/// A_k = {x}. Records x as a condition.
std::vector<Witness> antistochastic_witnesses(HaltingTable& table, const Bitstring& x, int k);

/// A group S_{m,s} examined for the construction report.
struct GroupProbe {
  Group group;
  ModelSet model;
  Complexity strength;  ///< CT([S] | x)
  double deficiency = 0;
};

struct Theorem3Bundle {
  int k = 0;
  Bitstring y, z, x;
  Complexity c_z_given_y;
  ModelSet model;        ///< {y z' : l(z') = 2k}
  Complexity strength;   ///< CT([A] | x)
  MssVerdict mss;
  int delta = 0;
  double eps = 0;
  double D = 1;
  /// Groups of complexity <= C(A) + delta that are eps-strong and
  /// eps-sufficient for x. The report is for the single enumerator used here.
  std::vector<GroupProbe> groups;
};

/// y = antistochastic(2k, k), z = argmax C(z|y) over 2k-bit strings, x = yz.
/// Throws ScaleError when 2k > N (y and every z must be recordable in the
/// universe) or when C(A) + delta exceeds the ledger.
Theorem3Bundle theorem3_string(HaltingTable& table, const ModelCatalog& catalog, const OmegaLedger& ledger, int k,
                               int delta, double eps, double D);

struct PartitionResult {
  ModelSet a1;
  std::vector<StringSet> partition;  ///< classes in order of first member
  Complexity ct_a_given_a1;          ///< CT([A] | [A_1])
  Complexity ct_a1_given_a;          ///< CT([A_1] | [A])
  Complexity strength_a1;            ///< CT([A_1] | x)
};

/// For a program p total on {0,1}^n with p(x) = [A]: the class of x' is
/// B' = {x'' in B : p(x'') = [B], l(x'') = n} with B decoded from p(x').
/// A_1 = A', and the partition is the set of distinct nonempty classes.
/// Throws PreconditionError when p is not total on {0,1}^n or p(x) != [A].
PartitionResult strongify_partition(HaltingTable& table, const ModelSet& model, const Bitstring& x,
                                    const Bitstring& program, int n);

/// C(Omega_{C(A)} | [A]). Requires C(A) <= ledger.m_max().
Complexity mss_omega_report(HaltingTable& table, const OmegaLedger& ledger, const ModelSet& model);

struct TranslationReport {
  bool strong = false;
  bool sufficient = false;
  Profile px;
  Profile pa;           ///< P_{[A]}
  Profile pa_shifted;   ///< P_{[A]} raised by ceil(log2|A|)
  Complexity closeness; ///< within the region b >= ceil(log2|A|)
  int below_slack = 0;  ///< max C(x) - a - b over frontier points of P_x below the region
};

/// Compares P_x with P_{[A]} raised by log|A|. Records x and [A].
TranslationReport profile_translation_check(HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x,
                                            const ModelSet& model, double eps);

/// Points of p with l raised to at least `floor`.
Profile clip_below(const Profile& p, int floor);

}  // namespace algstat

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algstat/calibration.hpp"
#include "algstat/model_catalog.hpp"
#include "algstat/omega.hpp"

namespace algstat {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  ///< first few failures, capped
  std::size_t failure_count = 0;

  bool passed() const { return failure_count == 0; }
  void fail(std::string what);
};

/// decode(encode(A)) = A for sets of up to three strings of length <= max_len,
/// and encode(decode(c)) = c for valid codes of length <= code_len.
SuiteResult verify_codec(int max_len, int code_len);
/// Omega monotone, L_m nested and L_m = {x : C(x) <= m}.
SuiteResult verify_ledger(const HaltingTable& table, const OmegaLedger& ledger);
/// Groups partition L_m with sizes from the binary decomposition; locate
/// agrees with a linear scan.
SuiteResult verify_groups(const HaltingTable& table, const OmegaLedger& ledger);
/// Frontier shape, singleton and cube points, slice and two-part laws with
/// the calibrated constants, for every x with l(x) <= n.
SuiteResult verify_theorem1(const HaltingTable& table, const ModelCatalog& catalog, const Calibration& cal, int n);
/// restricted(cylinders) <= strong(eps_cyl) <= full, for every x with l(x) <= n.
SuiteResult verify_containment(const HaltingTable& table, const ModelCatalog& catalog, const Calibration& cal, int n);
/// C(y|x) <= CT(y|x) for all x, y with length <= n.
SuiteResult verify_ct(const HaltingTable& table, int n);

}  // namespace algstat

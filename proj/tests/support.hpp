#pragma once

#include "doctest.h"

#include "algstat/calibration.hpp"
#include "algstat/halting_table.hpp"
#include "algstat/model_catalog.hpp"
#include "algstat/omega.hpp"

namespace doctest {
template <>
struct StringMaker<algstat::Bitstring> {
  static String convert(const algstat::Bitstring& b) { return ("\"" + b.token() + "\"").c_str(); }
};
template <>
struct StringMaker<algstat::Complexity> {
  static String convert(algstat::Complexity c) { return c.str().c_str(); }
};
}  // namespace doctest

namespace support {

using algstat::Bitstring;

inline Bitstring bits(const char* s) { return Bitstring::parse(s); }

/// The default-configuration table over the full condition universe, built
/// once per test binary.
inline algstat::HaltingTable& table() {
  static algstat::HaltingTable t = [] {
    const algstat::MachineConfig cfg;
    return algstat::build_table(cfg, algstat::universe_conditions(cfg));
  }();
  return t;
}

inline const algstat::OmegaLedger& ledger() {
  static const algstat::OmegaLedger l = algstat::omega_ledger(table(), table().config().max_prog_len);
  return l;
}

inline const algstat::ModelCatalog& catalog() {
  static const algstat::ModelCatalog c(table(), table().config().max_prog_len);
  return c;
}

inline const algstat::Calibration& calibration() {
  static const algstat::Calibration c = algstat::Calibration::load(ALGSTAT_CALIBRATION_FILE);
  return c;
}

/// A small configuration for brute-force oracles.
inline algstat::MachineConfig small_config(int L = 8, int T = 64, int N = 2) {
  algstat::MachineConfig cfg;
  cfg.max_prog_len = L;
  cfg.step_budget = T;
  cfg.cond_universe = N;
  return cfg;
}

}  // namespace support

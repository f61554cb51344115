#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "algstat/halting_table.hpp"

namespace algstat {

struct LedgerEntry {
  Bitstring string;
  int complexity = 0;  ///< C(string), always <= m_max
  int stage = 0;       ///< dovetailing stage at which it was first seen

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// L_m and Omega_m = |L_m| for every m <= m_max. The enumeration order of
/// every L_m is the global dovetailing order on the empty condition, so
/// members(m) is a subsequence of members(m + 1).
class OmegaLedger {
 public:
  OmegaLedger() = default;
  OmegaLedger(int m_max, std::vector<LedgerEntry> order);

  int m_max() const { return m_max_; }
  std::uint64_t omega(int m) const { return omega_.at(static_cast<std::size_t>(m)); }
  const std::vector<std::uint64_t>& omegas() const { return omega_; }

  /// L_m in enumeration order.
  std::vector<Bitstring> members(int m) const;
  /// Position of x within L_m, or -1 when C(x) > m.
  std::int64_t position(const Bitstring& x, int m) const;

  /// Every string of complexity <= m_max, in enumeration order.
  const std::vector<LedgerEntry>& order() const { return order_; }

  friend bool operator==(const OmegaLedger& a, const OmegaLedger& b) {
    return a.m_max_ == b.m_max_ && a.order_ == b.order_;
  }

 private:
  int m_max_ = -1;
  std::vector<LedgerEntry> order_;
  std::vector<std::uint64_t> omega_;
  std::unordered_map<Bitstring, std::size_t> index_;
  // below_[m][i]: entries among the first i of order_ with complexity <= m.
  std::vector<std::vector<std::uint32_t>> below_;
};

/// Requires the empty condition recorded and m_max <= L.
OmegaLedger omega_ledger(const HaltingTable& table, int m_max);

/// Omega_m as a binary numeral, the form in which it is used as a condition.
inline Bitstring omega_numeral(const OmegaLedger& ledger, int m) { return Bitstring::numeral(ledger.omega(m)); }

/// Quantities around C(x) + C(y|x) ~ C(y) + C(x|y) ~ C(x,y). Nothing is
/// asserted; gaps are infinite when any term is.
struct SymmetryReport {
  Complexity c_x, c_y, c_y_given_x, c_x_given_y, c_pair;
  Complexity gap_x_side;  ///< |C(x) + C(y|x) - C(x,y)|
  Complexity gap_y_side;  ///< |C(y) + C(x|y) - C(x,y)|
};

/// Pair code <x,y>: every bit of x doubled, the terminator 01, then y.
Bitstring pair_code(const Bitstring& x, const Bitstring& y);

/// Requires x, y and the empty condition recorded.
SymmetryReport symmetry_report(const HaltingTable& table, const Bitstring& x, const Bitstring& y);

}  // namespace algstat

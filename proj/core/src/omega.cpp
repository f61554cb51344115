#include "algstat/omega.hpp"

#include "algstat/errors.hpp"

namespace algstat {

OmegaLedger::OmegaLedger(int m_max, std::vector<LedgerEntry> order)
    : m_max_(m_max), order_(std::move(order)), omega_(static_cast<std::size_t>(m_max + 1), 0) {
  below_.assign(static_cast<std::size_t>(m_max + 1), std::vector<std::uint32_t>(order_.size() + 1, 0));
  for (std::size_t i = 0; i < order_.size(); ++i) {
    index_.emplace(order_[i].string, i);
    for (int m = 0; m <= m_max_; ++m) {
      const bool in = order_[i].complexity <= m;
      below_[static_cast<std::size_t>(m)][i + 1] = below_[static_cast<std::size_t>(m)][i] + (in ? 1 : 0);
    }
  }
  for (int m = 0; m <= m_max_; ++m) omega_[static_cast<std::size_t>(m)] = below_[static_cast<std::size_t>(m)].back();
}

std::vector<Bitstring> OmegaLedger::members(int m) const {
  if (m < 0 || m > m_max_) throw PreconditionError("ledger level " + std::to_string(m) + " out of range");
  std::vector<Bitstring> out;
  out.reserve(static_cast<std::size_t>(omega(m)));
  for (const auto& e : order_) {
    if (e.complexity <= m) out.push_back(e.string);
  }
  return out;
}

std::int64_t OmegaLedger::position(const Bitstring& x, int m) const {
  auto it = index_.find(x);
  if (m < 0 || m > m_max_ || it == index_.end() || order_[it->second].complexity > m) return -1;
  return below_[static_cast<std::size_t>(m)][it->second];
}

OmegaLedger omega_ledger(const HaltingTable& table, int m_max) {
  if (m_max < 0 || m_max > table.config().max_prog_len) {
    throw PreconditionError("omega_ledger: m_max must be in [0, L]");
  }
  std::vector<LedgerEntry> order;
  for (auto& d : table.discovery_log(Bitstring{})) {
    const Complexity c = table.complexity(d.output);
    if (c.finite() && c.value() <= m_max) order.push_back({std::move(d.output), c.value(), d.stage});
  }
  return OmegaLedger(m_max, std::move(order));
}

}  // namespace algstat

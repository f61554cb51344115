#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "algstat/model_set.hpp"

namespace algstat {

/// Every nonempty finite set whose canonical code has complexity <= m_max,
/// i.e. every halting output on the empty condition that decodes as a set.
/// Models are ordered by (complexity, code) and indexed by element.
class ModelCatalog {
 public:
  ModelCatalog(const HaltingTable& table, int m_max);

  int m_max() const { return m_max_; }
  const std::vector<ModelSet>& models() const { return models_; }
  /// Indices into models() of the models that contain x, ascending.
  std::span<const std::uint32_t> containing(const Bitstring& x) const;

 private:
  int m_max_;
  std::vector<ModelSet> models_;
  std::unordered_map<Bitstring, std::vector<std::uint32_t>> by_element_;
};

}  // namespace algstat

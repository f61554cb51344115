#include "algstat/model_catalog.hpp"

#include "algstat/errors.hpp"

namespace algstat {

ModelCatalog::ModelCatalog(const HaltingTable& table, int m_max) : m_max_(m_max) {
  if (m_max < 0 || m_max > table.config().max_prog_len) {
    throw PreconditionError("model catalog: m_max must be in [0, L]");
  }
  for (auto& entry : table.outputs(Bitstring{}, m_max)) {
    auto elements = decode_set(entry.output);
    if (!elements || elements->empty()) continue;
    models_.push_back(ModelSet{std::move(*elements), entry.output, entry.complexity});
  }
  for (std::uint32_t i = 0; i < models_.size(); ++i) {
    for (auto& e : models_[i].elements) by_element_[e].push_back(i);
  }
}

std::span<const std::uint32_t> ModelCatalog::containing(const Bitstring& x) const {
  auto it = by_element_.find(x);
  if (it == by_element_.end()) return {};
  return it->second;
}

}  // namespace algstat

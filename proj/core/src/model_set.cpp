#include "algstat/model_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "algstat/errors.hpp"
#include "algstat/profile.hpp"

namespace algstat {

int ModelSet::log_card() const { return ceil_log2(cardinality()); }

double ModelSet::log2_card() const { return std::log2(static_cast<double>(cardinality())); }

bool ModelSet::contains(const Bitstring& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

ModelSet make_model(const HaltingTable& table, StringSet elements) {
  ModelSet m;
  m.elements = std::move(canonicalize(elements));
  m.code = encode_set(m.elements);
  m.complexity = table.complexity(m.code);
  return m;
}

std::optional<ModelSet> model_from_code(const HaltingTable& table, const Bitstring& code) {
  auto elements = decode_set(code);
  if (!elements) return std::nullopt;
  return ModelSet{std::move(*elements), code, table.complexity(code)};
}

StringSet cylinder_set(const Bitstring& prefix, int free) {
  StringSet out;
  for (auto& tail : Bitstring::all_of_length(static_cast<std::size_t>(free))) out.push_back(prefix + tail);
  return out;
}

double deficiency(const HaltingTable& table, const Bitstring& x, const ModelSet& model) {
  if (!model.contains(x)) throw PreconditionError("deficiency: x = " + x.token() + " is not in the model");
  const Complexity cx = table.complexity(x);
  if (model.complexity.is_infinite() || cx.is_infinite()) return std::numeric_limits<double>::infinity();
  return model.complexity.value() + model.log2_card() - cx.value();
}

SufficiencyVerdict is_sufficient(const HaltingTable& table, const Bitstring& x, const ModelSet& model, double epsilon) {
  SufficiencyVerdict v;
  v.deficiency = deficiency(table, x, model);
  v.infinite = std::isinf(v.deficiency);
  v.sufficient = !v.infinite && v.deficiency <= epsilon;
  return v;
}

}  // namespace algstat

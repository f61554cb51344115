#pragma once

#include <cstdint>
#include <optional>

#include "algstat/complexity.hpp"
#include "algstat/halting_table.hpp"
#include "algstat/set_codec.hpp"

namespace algstat {

/// A finite set of strings together with its canonical code and C([A]).
struct ModelSet {
  StringSet elements;  ///< sorted, duplicate-free
  Bitstring code;      ///< encode_set(elements)
  Complexity complexity;

  std::uint64_t cardinality() const { return elements.size(); }
  /// ceil(log2 |A|), the integer grid coordinate.
  int log_card() const;
  double log2_card() const;
  bool contains(const Bitstring& x) const;

  friend bool operator==(const ModelSet& a, const ModelSet& b) { return a.code == b.code; }
};

/// Canonicalizes `elements` and reads C([A]) from the table.
ModelSet make_model(const HaltingTable& table, StringSet elements);
/// std::nullopt when `code` is not a canonical set code.
std::optional<ModelSet> model_from_code(const HaltingTable& table, const Bitstring& code);

/// {u v : l(v) = free}.
StringSet cylinder_set(const Bitstring& prefix, int free);

/// C(A) + log2|A| - C(x), +infinity when either complexity is unreachable.
/// Throws PreconditionError unless x is in A.
double deficiency(const HaltingTable& table, const Bitstring& x, const ModelSet& model);

struct SufficiencyVerdict {
  bool sufficient = false;
  bool infinite = false;  ///< some complexity was unreachable; `sufficient` is then false
  double deficiency = 0.0;
};

SufficiencyVerdict is_sufficient(const HaltingTable& table, const Bitstring& x, const ModelSet& model, double epsilon);

}  // namespace algstat

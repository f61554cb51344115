#include "algstat/constructions.hpp"

#include <algorithm>
#include <map>

#include "algstat/errors.hpp"

namespace algstat {

Bitstring antistochastic(const ModelCatalog& catalog, int n, int k) {
  if (k < 0 || n < k || n > 24) throw PreconditionError("antistochastic: need 0 <= k <= n <= 24");
  if (k - 1 > catalog.m_max()) throw ScaleError("antistochastic: models of complexity < k are beyond the catalog");
  std::vector<std::uint8_t> covered(std::size_t{1} << n, 0);
  const std::uint64_t cap = std::uint64_t{1} << (n - k);
  for (const auto& m : catalog.models()) {
    if (m.complexity.value() >= k) break;
    if (m.cardinality() > cap) continue;
    for (auto& e : m.elements) {
      if (e.size() == static_cast<std::size_t>(n)) covered[e.to_uint()] = 1;
    }
  }
  for (std::uint64_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) return Bitstring::from_uint(v, static_cast<std::size_t>(n));
  }
  throw InvariantViolation("antistochastic: every string is covered");
}

std::vector<Witness> antistochastic_witnesses(HaltingTable& table, const Bitstring& x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 0 || k > n) throw PreconditionError("antistochastic_witnesses: need 0 <= k <= l(x)");
  table.ensure(x);
  std::vector<Witness> out;
  for (int i = 0; i <= k; ++i) {
    ModelSet m = i < k ? make_model(table, cylinder_set(x.prefix(static_cast<std::size_t>(i)), n - i))
                       : make_model(table, {x});
    const Complexity strength = table.total_cond_complexity(m.code, x);
    out.push_back({std::move(m), strength});
  }
  return out;
}

Theorem3Bundle theorem3_string(HaltingTable& table, const ModelCatalog& catalog, const OmegaLedger& ledger, int k,
                               int delta, double eps, double D) {
  if (k < 1) throw PreconditionError("theorem3_string: k must be >= 1");
  if (2 * k > table.config().cond_universe) {
    throw ScaleError("theorem3_string: 2k = " + std::to_string(2 * k) + " exceeds the condition universe N = " +
                     std::to_string(table.config().cond_universe));
  }
  Theorem3Bundle b;
  b.k = k;
  b.delta = delta;
  b.eps = eps;
  b.D = D;
  b.y = antistochastic(catalog, 2 * k, k);
  table.ensure(b.y);
  b.c_z_given_y = Complexity(-1);
  for (auto& z : Bitstring::all_of_length(static_cast<std::size_t>(2 * k))) {
    const Complexity c = table.cond_complexity(z, b.y);
    if (c > b.c_z_given_y) {
      b.c_z_given_y = c;
      b.z = z;
    }
  }
  b.x = b.y + b.z;
  table.ensure(b.x);
  b.model = make_model(table, cylinder_set(b.y, 2 * k));
  b.strength = table.total_cond_complexity(b.model.code, b.x);
  b.mss = is_mss(table, catalog, b.x, b.model, delta, eps, D, catalog.m_max());

  const Complexity limit = b.model.complexity + Complexity(delta);
  if (limit.is_infinite() || limit.value() > ledger.m_max()) {
    throw ScaleError("theorem3_string: C(A) + delta exceeds the ledger");
  }
  for (int m = 0; m <= limit.value(); ++m) {
    if (ledger.position(b.x, m) < 0) continue;
    Located loc = locate(table, ledger, b.x, m);
    if (loc.model.complexity > limit) continue;
    const Complexity strength = table.total_cond_complexity(loc.model.code, b.x);
    const double d = deficiency(table, b.x, loc.model);
    if (strength.finite() && strength.value() <= eps && d <= eps) {
      b.groups.push_back({loc.group, std::move(loc.model), strength, d});
    }
  }
  return b;
}

PartitionResult strongify_partition(HaltingTable& table, const ModelSet& model, const Bitstring& x,
                                    const Bitstring& program, int n) {
  if (n < 0 || n > 20) throw PreconditionError("strongify_partition: n out of range");
  if (x.size() != static_cast<std::size_t>(n)) throw PreconditionError("strongify_partition: l(x) != n");
  const int budget = table.config().step_budget;
  const auto cube = Bitstring::all_of_length(static_cast<std::size_t>(n));
  std::vector<Bitstring> image;
  image.reserve(cube.size());
  for (auto& u : cube) {
    auto out = run(program, u, budget);
    if (!out.halted()) throw PreconditionError("strongify_partition: program is not total on {0,1}^" + std::to_string(n));
    image.push_back(std::move(out.output));
  }
  const auto x_at = static_cast<std::size_t>(x.to_uint());
  if (image[x_at] != model.code) throw PreconditionError("strongify_partition: program does not map x to [A]");

  // Classes keyed by output, in order of their first preimage.
  std::map<Bitstring, std::size_t> slot;
  std::vector<Bitstring> codes;
  std::vector<StringSet> classes;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    auto set = decode_set(image[i]);
    if (!set || !std::binary_search(set->begin(), set->end(), cube[i])) continue;
    auto [it, fresh] = slot.try_emplace(image[i], classes.size());
    if (fresh) {
      codes.push_back(image[i]);
      classes.emplace_back();
    }
    classes[it->second].push_back(cube[i]);
  }
  PartitionResult r;
  r.a1 = make_model(table, classes[slot.at(model.code)]);
  r.partition = std::move(classes);
  table.record(std::vector<Bitstring>{model.code, r.a1.code, x});
  r.ct_a_given_a1 = table.total_cond_complexity(model.code, r.a1.code);
  r.ct_a1_given_a = table.total_cond_complexity(r.a1.code, model.code);
  r.strength_a1 = table.total_cond_complexity(r.a1.code, x);
  return r;
}

Complexity mss_omega_report(HaltingTable& table, const OmegaLedger& ledger, const ModelSet& model) {
  if (model.complexity.is_infinite() || model.complexity.value() > ledger.m_max()) {
    throw ScaleError("mss_omega_report: C(A) is beyond the ledger");
  }
  table.ensure(model.code);
  return table.cond_complexity(omega_numeral(ledger, model.complexity.value()), model.code);
}

Profile clip_below(const Profile& p, int floor) {
  std::vector<ProfilePoint> pts;
  for (const auto& f : p.frontier()) pts.push_back({f.complexity, std::max(f.log_card, floor)});
  return Profile::from_points(std::move(pts));
}

TranslationReport profile_translation_check(HaltingTable& table, const ModelCatalog& catalog, const Bitstring& x,
                                            const ModelSet& model, double eps) {
  if (!model.contains(x)) throw PreconditionError("profile_translation_check: x is not in A");
  table.record(std::vector<Bitstring>{x, model.code});
  TranslationReport r;
  const Complexity strength = table.total_cond_complexity(model.code, x);
  r.strong = strength.finite() && strength.value() <= eps;
  r.sufficient = is_sufficient(table, x, model, eps).sufficient;
  const int m_max = catalog.m_max();
  const int shift = model.log_card();
  r.px = profile(catalog, x, m_max);
  r.pa = profile(catalog, model.code, m_max);
  r.pa_shifted = r.pa.shifted(0, shift);
  r.closeness = closeness(clip_below(r.px, shift), clip_below(r.pa_shifted, shift));
  const Complexity cx = table.complexity(x);
  for (const auto& f : r.px.frontier()) {
    if (f.log_card < shift && cx.finite()) r.below_slack = std::max(r.below_slack, cx.value() - f.complexity - f.log_card);
  }
  return r;
}

}  // namespace algstat

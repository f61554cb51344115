#include "algstat/universal.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "algstat/errors.hpp"

namespace algstat {

std::vector<int> omega_decomposition(std::uint64_t omega) {
  std::vector<int> s;
  for (int bit = 63; bit >= 0; --bit) {
    if ((omega >> bit) & 1U) s.push_back(bit);
  }
  return s;
}

GroupDecomposition universal_groups(const OmegaLedger& ledger, int m) {
  if (m < 0 || m > ledger.m_max()) throw PreconditionError("universal_groups: m outside the ledger");
  GroupDecomposition d;
  d.m = m;
  d.s_values = omega_decomposition(ledger.omega(m));
  std::uint64_t first = 0;
  for (int s : d.s_values) {
    const std::uint64_t count = std::uint64_t{1} << s;
    d.groups.push_back({m, s, first, count});
    first += count;
  }
  return d;
}

StringSet group_members(const OmegaLedger& ledger, const Group& group) {
  const auto all = ledger.members(group.m);
  StringSet out(all.begin() + static_cast<std::ptrdiff_t>(group.first),
                all.begin() + static_cast<std::ptrdiff_t>(group.first + group.count));
  return canonicalize(out);
}

ModelSet group_model(const HaltingTable& table, const OmegaLedger& ledger, const Group& group) {
  return make_model(table, group_members(ledger, group));
}

Located locate(const HaltingTable& table, const OmegaLedger& ledger, const Bitstring& x, int m) {
  const std::int64_t pos = ledger.position(x, m);
  if (pos < 0) throw PreconditionError("locate: " + x.token() + " is not in L_" + std::to_string(m));
  for (const auto& g : universal_groups(ledger, m).groups) {
    if (static_cast<std::uint64_t>(pos) < g.first + g.count) return {g, group_model(table, ledger, g)};
  }
  throw InvariantViolation("locate: groups do not cover L_m");
}

Theorem4Witness verify_theorem4(HaltingTable& table, const OmegaLedger& ledger, const Bitstring& x,
                                const ModelSet& model) {
  if (!model.contains(x)) throw PreconditionError("verify_theorem4: x is not in A");
  const Complexity cx = table.complexity(x);
  if (cx.is_infinite()) throw PreconditionError("verify_theorem4: C(x) is not finite");

  StringSet slice;
  for (auto& e : model.elements) {
    if (e.size() == x.size()) slice.push_back(e);
  }
  const ModelSet a_slice = make_model(table, slice);
  table.ensure(model.code);
  table.ensure(a_slice.code);

  Theorem4Witness w;
  w.deficiency_a = deficiency(table, x, model);
  w.deficiency_a_slice = deficiency(table, x, a_slice);
  w.exists_for_all_m = true;
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= ledger.m_max(); ++m) {
    if (ledger.position(x, m) < 0) {
      if (m >= cx.value()) w.exists_for_all_m = false;
      continue;
    }
    Located loc = locate(table, ledger, x, m);
    GroupComparison gc{loc.group, loc.model, deficiency(table, x, loc.model),
                       table.cond_complexity(loc.model.code, model.code),
                       table.cond_complexity(loc.model.code, a_slice.code)};
    if (gc.model.complexity.finite() && gc.deficiency < best) {
      best = gc.deficiency;
      w.best = static_cast<int>(w.groups.size());
    }
    w.groups.push_back(std::move(gc));
  }
  if (w.best >= 0) {
    w.delta_gap = best - w.deficiency_a;
    w.delta_gap_slice = best - w.deficiency_a_slice;
  }
  return w;
}

Lemma1Report lemma1_report(HaltingTable& table, const OmegaLedger& ledger, int a, int b, int m, int s) {
  if (a < 0 || b < 0 || m < 0 || a > ledger.m_max() || b > ledger.m_max() || m > ledger.m_max()) {
    throw PreconditionError("lemma1_report: level outside the ledger");
  }
  if (s < 0 || s > m) throw PreconditionError("lemma1_report: need 0 <= s <= m");
  Lemma1Report r;
  r.a = a;
  const Bitstring oa = omega_numeral(ledger, a);
  const Bitstring ob = omega_numeral(ledger, b);
  const Bitstring oms = omega_numeral(ledger, m - s);
  table.ensure(ob);
  table.ensure(oms);
  r.omega_a_given_b = table.cond_complexity(oa, ob);
  r.c_omega_a = table.complexity(oa);
  const auto d = universal_groups(ledger, m);
  const Group* group = nullptr;
  for (const auto& g : d.groups) {
    if (g.s == s) group = &g;
  }
  if (group == nullptr) throw PreconditionError("lemma1_report: no group S_{m,s} with s = " + std::to_string(s));
  const ModelSet sm = group_model(table, ledger, *group);
  table.ensure(sm.code);
  r.omega_given_group = table.cond_complexity(oms, sm.code);
  r.group_given_omega = table.cond_complexity(sm.code, oms);
  return r;
}

int lemma8_slack(HaltingTable& table, const OmegaLedger& ledger) {
  std::vector<Bitstring> numerals;
  for (int a = 0; a <= ledger.m_max(); ++a) numerals.push_back(omega_numeral(ledger, a));
  table.record(numerals);
  int slack = std::numeric_limits<int>::min();
  for (int a = 0; a <= ledger.m_max(); ++a) {
    for (int b = 0; b <= ledger.m_max(); ++b) {
      const Complexity c = table.cond_complexity(numerals[static_cast<std::size_t>(a)], numerals[static_cast<std::size_t>(b)]);
      if (c.finite()) slack = std::max(slack, c.value() - std::abs(a - b));
    }
  }
  return slack;
}

}  // namespace algstat

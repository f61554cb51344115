#include "algstat/improvement.hpp"

#include <cmath>

#include "algstat/errors.hpp"
#include "algstat/universal.hpp"

namespace algstat {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::small_step: return "small-step";
    case StopReason::iteration_cap: return "iteration-cap";
    case StopReason::g_failure: return "g-failure";
  }
  return "?";
}

ImprovementTrace improve_loop(const HaltingTable& table, const Bitstring& x, const ModelSet& a, const ModelStep& f,
                              const ModelStep& g, int theta, int cap) {
  ImprovementTrace t;
  auto push = [&](char kind, int index, const ModelSet& m) {
    t.steps.push_back({kind, index, m, deficiency(table, x, m), table.total_cond_complexity(m.code, x)});
  };
  ModelSet ai = a;
  for (int i = 1;; ++i) {
    push('A', i, ai);
    std::optional<ModelSet> bi = f(ai);
    if (!bi) {
      t.f_identity = true;
      bi = ai;
    }
    push('B', i, *bi);
    const Complexity drop_ok = bi->complexity + Complexity(theta);
    if (ai.complexity <= drop_ok) {
      t.stop = StopReason::small_step;
      t.h = ai;
      return t;
    }
    ++t.big_steps;
    if (t.big_steps >= cap) {
      t.stop = StopReason::iteration_cap;
      t.h = ai;
      return t;
    }
    std::optional<ModelSet> next = g(*bi);
    if (!next) {
      t.stop = StopReason::g_failure;
      return t;
    }
    ai = std::move(*next);
  }
}

ImprovementTrace improve_sequence(HaltingTable& table, const OmegaLedger& ledger, const ModelCatalog& catalog,
                                  const Bitstring& x, const ModelSet& a, Complexity eps, int alpha, int theta, int cap) {
  if (!a.contains(x)) throw PreconditionError("improve_sequence: x is not in A");
  if (cap < 1) throw PreconditionError("improve_sequence: cap must be >= 1");
  table.ensure(x);
  const Complexity strength = table.total_cond_complexity(a.code, x);
  if (eps.finite() && strength > eps) throw PreconditionError("improve_sequence: A is not eps-strong for x");

  ModelStep f = [&](const ModelSet& e) -> std::optional<ModelSet> {
    Theorem4Witness w = verify_theorem4(table, ledger, x, e);
    if (w.best < 0) return std::nullopt;
    return w.groups[static_cast<std::size_t>(w.best)].model;
  };
  const auto strong = strong_models(table, catalog, x, eps, catalog.m_max());
  ModelStep g = [&](const ModelSet& b) -> std::optional<ModelSet> {
    if (b.complexity.is_infinite()) return std::nullopt;
    const ModelSet* best = nullptr;
    for (const auto& s : strong) {
      const ModelSet& m = *s.model;
      if (m.complexity.value() > b.complexity.value() + alpha) continue;
      if (m.log2_card() > b.log2_card() + alpha + 1e-9) continue;
      if (best == nullptr || m.complexity < best->complexity ||
          (m.complexity == best->complexity && m.cardinality() < best->cardinality())) {
        best = &m;
      }
    }
    if (best == nullptr) return std::nullopt;
    return *best;
  };
  ImprovementTrace t = improve_loop(table, x, a, f, g, theta, cap);
  if (t.h && t.h->complexity.finite() && t.h->complexity.value() <= ledger.m_max()) {
    const Bitstring omega = omega_numeral(ledger, t.h->complexity.value());
    table.ensure(omega);
    t.c_h_given_omega = table.cond_complexity(t.h->code, omega);
  }
  return t;
}

int improvement_iteration_bound(const ModelSet& a1, int theta, int alpha) {
  if (theta <= alpha) throw PreconditionError("iteration bound needs theta > alpha");
  if (a1.complexity.is_infinite()) throw PreconditionError("iteration bound needs finite C(A_1)");
  const int step = theta - alpha;
  return (a1.complexity.value() + step - 1) / step;
}

int default_theta(int n) { return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))); }

int default_alpha(int n) {
  return std::max(0, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) / 2.0)) - 1);
}

}  // namespace algstat

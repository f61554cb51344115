#include "algstat/hereditary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "algstat/errors.hpp"

namespace algstat {

namespace {

std::uint64_t intersection_size(const StringSet& a, const StringSet& b) {
  std::uint64_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

int floor_log2(std::uint64_t v) { return static_cast<int>(std::bit_width(v)) - 1; }

void run_point(HaltingTable& table, const OmegaLedger& ledger, const ModelCatalog& catalog, const Bitstring& x,
               const ModelSet& model, const HereditaryReport& rep, Complexity eps, int alpha, int theta, int cap,
               HereditaryPoint& pt) {
  const ModelSet& a1 = rep.step1->a1;
  const int n = static_cast<int>(x.size());

  // Lift to P_x and pick the nearest eps-strong model.
  const int la = pt.point.complexity;
  const int lb = pt.point.log_card + a1.log_card();
  const ModelSet* best = nullptr;
  int best_slack = 0;
  for (auto& s : strong_models(table, catalog, x, eps, catalog.m_max())) {
    const int slack = std::max({s.model->complexity.value() - la, s.model->log_card() - lb, 0});
    if (best == nullptr || slack < best_slack) {
      best = s.model;
      best_slack = slack;
    }
  }
  if (best == nullptr) {
    pt.failed_stage = "strong-witness";
    return;
  }
  pt.witness = *best;
  pt.witness_slack = best_slack;

  pt.trace = improve_sequence(table, ledger, catalog, x, *best, eps, alpha, theta, cap);
  if (!pt.trace->h) {
    pt.failed_stage = "improve";
    return;
  }
  pt.m = *pt.trace->h;

  const auto pm = table.shortest_total_program(pt.m->code, x);
  if (!pm) {
    pt.failed_stage = "strongify-m";
    return;
  }
  pt.m1 = strongify_partition(table, *pt.m, x, program_at(*pm), n);
  const ModelSet& m1 = pt.m1->a1;

  // H: classes of the A-partition whose intersection with M_1 has the same
  // floor(log2) size as A_1 cap M_1.
  pt.a1_cap_m1 = intersection_size(a1.elements, m1.elements);
  const int bucket = floor_log2(pt.a1_cap_m1);
  StringSet h_codes;
  for (const auto& cls : rep.step1->partition) {
    const std::uint64_t k = intersection_size(cls, m1.elements);
    if (k > 0 && floor_log2(k) == bucket) h_codes.push_back(encode_set(cls));
  }
  pt.h_size = h_codes.size();
  pt.h_bound = static_cast<double>(m1.cardinality()) / (2.0 * static_cast<double>(pt.a1_cap_m1));
  pt.h_bound_holds = static_cast<double>(pt.h_size) <= pt.h_bound;
  pt.h_bound_floor = static_cast<double>(m1.cardinality()) / std::ldexp(1.0, bucket);
  pt.h_bound_floor_holds = static_cast<double>(pt.h_size) <= pt.h_bound_floor;

  pt.b = make_model(table, std::move(h_codes));
  pt.ct_b_given_a1 = table.total_cond_complexity(pt.b->code, a1.code);

  if (!rep.has_back_program) {
    pt.failed_stage = "back-map";
    return;
  }
  StringSet image;
  for (const auto& t : pt.b->elements) {
    auto out = run(rep.back_program, t, table.config().step_budget);
    if (out.halted()) image.push_back(out.output);
  }
  pt.d = make_model(table, std::move(image));
  pt.a_in_d = pt.d->contains(model.code);
  pt.log_d_le_log_b = pt.d->log2_card() <= pt.b->log2_card() + 1e-12;
  pt.ct_d_given_a = table.total_cond_complexity(pt.d->code, model.code);
}

}  // namespace

HereditaryReport hereditary_check(HaltingTable& table, const OmegaLedger& ledger, const ModelCatalog& catalog,
                                  const Bitstring& x, const ModelSet& model, Complexity eps, int delta, double D,
                                  int alpha, int theta, int cap) {
  if (!model.contains(x)) throw PreconditionError("hereditary_check: x is not in A");
  table.record(std::vector<Bitstring>{x, model.code});
  HereditaryReport rep;
  const Complexity strength = table.total_cond_complexity(model.code, x);
  rep.strong = strength.finite() && (eps.is_infinite() || strength <= eps);
  const double eps_real = eps.finite() ? eps.value() : INFINITY;
  rep.mss = is_mss(table, catalog, x, model, delta, eps_real, D, catalog.m_max()).is_mss;
  rep.normality_gap_x = normality_gap(table, catalog, x, eps, catalog.m_max()).gap;

  const auto p = table.shortest_total_program(model.code, x);
  if (!p) return rep;
  rep.program = program_at(*p);
  rep.step1 = strongify_partition(table, model, x, rep.program, static_cast<int>(x.size()));
  const ModelSet& a1 = rep.step1->a1;
  table.record(std::vector<Bitstring>{a1.code});
  if (auto back = table.shortest_total_program(model.code, a1.code)) {
    rep.back_program = program_at(*back);
    rep.has_back_program = true;
  }

  std::vector<ProfilePoint> reached;
  const Profile pa1 = profile(catalog, a1.code, catalog.m_max());
  for (const auto& f : pa1.frontier()) {
    HereditaryPoint pt;
    pt.point = f;
    run_point(table, ledger, catalog, x, model, rep, eps, alpha, theta, cap, pt);
    if (pt.d && pt.d->complexity.finite()) reached.push_back({pt.d->complexity.value(), pt.d->log_card()});
    rep.points.push_back(std::move(pt));
  }
  rep.strong_points_for_a = Profile::from_points(std::move(reached));
  rep.gap_a1 = normality_gap(table, catalog, a1.code, eps, catalog.m_max());
  rep.gap_a = normality_gap(table, catalog, model.code, eps, catalog.m_max());
  return rep;
}

}  // namespace algstat

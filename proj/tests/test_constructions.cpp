#include <set>

#include "doctest.h"
#include "support.hpp"

#include "algstat/constructions.hpp"
#include "algstat/errors.hpp"
#include "algstat/hereditary.hpp"
#include "algstat/improvement.hpp"

using namespace algstat;
using support::bits;

namespace {

ModelSet fake_model(const Bitstring& x, int complexity) {
  ModelSet m;
  m.elements = {x};
  m.code = encode_set(m.elements) + Bitstring::from_uint(static_cast<std::uint64_t>(complexity), 6);
  m.complexity = Complexity(complexity);
  return m;
}

Theorem3Bundle desk_bundle() {
  const auto& cal = support::calibration();
  return theorem3_string(support::table(), support::catalog(), support::ledger(), 2, cal.get_int("theorem3_delta"),
                         cal.get_real("theorem3_eps"), 1.0);
}

}  // namespace

TEST_CASE("antistochastic strings") {
  const auto& cat = support::catalog();
  CHECK(antistochastic(cat, 5, 0) == Bitstring::zeros(5));
  for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 4}, std::pair{6, 6}}) {
    const Bitstring x = antistochastic(cat, n, k);
    CHECK(x.size() == static_cast<std::size_t>(n));
    for (const auto& m : cat.models()) {
      if (m.complexity.value() >= k) break;
      if (m.cardinality() <= (std::uint64_t{1} << (n - k))) REQUIRE_FALSE(m.contains(x));
    }
  }
}

TEST_CASE("antistochastic witnesses") {
  auto& t = support::table();
  const int eps_cyl = support::calibration().get_int("eps_cyl");
  const Bitstring x = bits("010011");
  const auto w = antistochastic_witnesses(t, x, 3);
  REQUIRE(w.size() == 4);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i].model.contains(x));
    const std::uint64_t want = i < 3 ? std::uint64_t{1} << (6 - i) : 1;
    CHECK(w[i].model.cardinality() == want);
    CHECK(w[i].strength <= Complexity(eps_cyl));
  }
}

TEST_CASE("cylinder construction at k = 2") {
  auto& t = support::table();
  const Theorem3Bundle b = desk_bundle();
  CHECK(b.x.size() == 8);
  CHECK(b.x.starts_with(b.y));
  CHECK(b.x == b.y + b.z);
  CHECK(b.y == antistochastic(support::catalog(), 4, 2));
  CHECK(b.model.cardinality() == 16);
  CHECK(b.model.contains(b.x));
  CHECK(b.model == make_model(t, cylinder_set(b.y, 4)));
  Complexity best = Complexity(0);
  for (const auto& z : Bitstring::all_of_length(4)) best = std::max(best, t.cond_complexity(z, b.y));
  CHECK(b.c_z_given_y == best);
  CHECK(t.cond_complexity(b.z, b.y) == best);
  CHECK(b.mss.is_mss);
  CHECK(b.x.str() == support::calibration().get("theorem3_x"));
  for (const auto& g : b.groups) {
    CHECK(g.model.contains(b.x));
    CHECK(g.strength <= Complexity(static_cast<int>(b.eps)));
  }
  CHECK_THROWS_AS(theorem3_string(t, support::catalog(), support::ledger(), 4, 1, 9, 1), ScaleError);
}

TEST_CASE("partition transform with a constant program") {
  auto& t = support::table();
  const Bitstring x = bits("0110");
  const ModelSet a = make_model(t, cylinder_set(bits("01"), 2));
  const PartitionResult r = strongify_partition(t, a, x, program::literal(a.code), 4);
  CHECK(r.a1.elements == a.elements);
  REQUIRE(r.partition.size() == 1);
  CHECK(r.partition.front() == a.elements);
  CHECK(r.ct_a_given_a1.finite());
  CHECK(r.ct_a1_given_a.finite());
}

TEST_CASE("partition transform with the singleton map") {
  auto& t = support::table();
  const Bitstring x = bits("101");
  const ModelSet a = make_model(t, StringSet{x});
  const PartitionResult r = strongify_partition(t, a, x, program::cylinder_of_condition(0), 3);
  CHECK(r.a1.elements == StringSet{x});
  CHECK(r.partition.size() == 8);
  std::set<Bitstring> seen;
  for (const auto& c : r.partition) {
    REQUIRE(c.size() == 1);
    REQUIRE(seen.insert(c.front()).second);
  }
  CHECK_THROWS_AS(strongify_partition(t, a, bits("100"), program::cylinder_of_condition(0), 3), PreconditionError);
  CHECK_THROWS_AS(strongify_partition(t, a, x, program::tape({TapeOp::open_loop}), 3), PreconditionError);
}

TEST_CASE("improvement loop with synthetic steps") {
  auto& t = support::table();
  const Bitstring x = bits("0110");
  const int theta = 2, alpha = 1;
  ModelStep f = [&](const ModelSet& m) -> std::optional<ModelSet> {
    return fake_model(x, std::max(0, m.complexity.value() - 5));
  };
  ModelStep g = [&](const ModelSet& m) -> std::optional<ModelSet> {
    return fake_model(x, m.complexity.value() + alpha);
  };
  const ModelSet a1 = fake_model(x, 14);
  const ImprovementTrace tr = improve_loop(t, x, a1, f, g, theta, 100);
  CHECK(tr.stop == StopReason::small_step);
  CHECK(tr.big_steps == 3);
  CHECK(tr.big_steps <= improvement_iteration_bound(a1, theta, alpha));
  REQUIRE(tr.h.has_value());
  CHECK(tr.h->complexity == Complexity(2));
  int prev = 1 << 30;
  for (std::size_t i = 0; i < tr.steps.size(); i += 2) {
    REQUIRE(tr.steps[i].kind == 'A');
    REQUIRE(tr.steps[i].model.complexity.value() < prev);
    prev = tr.steps[i].model.complexity.value();
    if (i >= 2) REQUIRE(tr.steps[i].deficiency <= tr.steps[i - 1].deficiency + 2 * alpha);
  }

  const ImprovementTrace capped = improve_loop(t, x, a1, f, g, theta, 2);
  CHECK(capped.stop == StopReason::iteration_cap);
  CHECK(capped.big_steps == 2);

  ModelStep none = [](const ModelSet&) -> std::optional<ModelSet> { return std::nullopt; };
  const ImprovementTrace failed = improve_loop(t, x, a1, f, none, theta, 100);
  CHECK(failed.stop == StopReason::g_failure);
  CHECK_FALSE(failed.h.has_value());

  const ImprovementTrace still = improve_loop(t, x, a1, none, g, theta, 100);
  CHECK(still.f_identity);
  CHECK(still.stop == StopReason::small_step);
  CHECK(still.steps.size() == 2);
}

TEST_CASE("improvement sequence on the cylinder construction") {
  auto& t = support::table();
  const Theorem3Bundle b = desk_bundle();
  const int n = static_cast<int>(b.x.size());
  const int theta = default_theta(n), alpha = default_alpha(n);
  CHECK(theta == 3);
  CHECK(alpha == 1);
  const ImprovementTrace tr = improve_sequence(t, support::ledger(), support::catalog(), b.x, b.model,
                                               Complexity(static_cast<int>(b.eps)), alpha, theta, 64);
  REQUIRE(tr.steps.size() >= 2);
  CHECK(tr.steps.front().model == b.model);
  CHECK(tr.big_steps <= improvement_iteration_bound(b.model, theta, alpha));
  for (std::size_t i = 2; i < tr.steps.size(); i += 2) {
    REQUIRE(tr.steps[i].model.complexity < tr.steps[i - 2].model.complexity);
  }
}

TEST_CASE("hereditary pipeline on the cylinder construction") {
  auto& t = support::table();
  const auto& cal = support::calibration();
  const Theorem3Bundle b = desk_bundle();
  const int n = static_cast<int>(b.x.size());
  const HereditaryReport r =
      hereditary_check(t, support::ledger(), support::catalog(), b.x, b.model, Complexity(static_cast<int>(b.eps)),
                       cal.get_int("theorem3_delta"), 1.0, default_alpha(n), default_theta(n), 64);
  CHECK(r.mss);
  CHECK(r.strong);
  REQUIRE(r.step1.has_value());
  CHECK(r.step1->a1.contains(b.x));
  CHECK(r.step1->a1.cardinality() <= b.model.cardinality());
  REQUIRE_FALSE(r.points.empty());
  for (const auto& p : r.points) {
    if (p.d) {
      CHECK(p.a_in_d);
      CHECK(p.log_d_le_log_b);
    }
    if (p.h_size > 0) CHECK(p.h_bound_floor_holds);
  }
  CHECK(r.gap_a1.gap.finite());
}

TEST_CASE("clip below") {
  const Profile p = Profile::from_points({{1, 5}, {3, 2}, {6, 0}});
  CHECK(clip_below(p, 2).frontier() == std::vector<ProfilePoint>{{1, 5}, {3, 2}});
}

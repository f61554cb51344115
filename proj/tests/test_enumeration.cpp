#include <set>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "algstat/cache_io.hpp"
#include "algstat/errors.hpp"
#include "algstat/suites.hpp"

using namespace algstat;
using support::bits;
using support::small_config;

namespace {

// Shortest program of length <= L producing x on y, by direct execution.
Complexity oracle_complexity(const MachineConfig& cfg, const Bitstring& x, const Bitstring& y) {
  for (ProgramIndex i = 0; i < program_count(cfg.max_prog_len); ++i) {
    const auto r = run(program_at(i), y, cfg.step_budget);
    if (r.halted() && r.output == x) return Complexity(program_length(i));
  }
  return Complexity::infinite();
}

bool oracle_total(const MachineConfig& cfg, const Bitstring& p) {
  for (int n = 0; n <= cfg.cond_universe; ++n) {
    for (const auto& c : Bitstring::all_of_length(static_cast<std::size_t>(n))) {
      if (!run(p, c, cfg.step_budget).halted()) return false;
    }
  }
  return true;
}

Complexity oracle_total_complexity(const MachineConfig& cfg, const Bitstring& y, const Bitstring& x) {
  for (ProgramIndex i = 0; i < program_count(cfg.max_prog_len); ++i) {
    const Bitstring p = program_at(i);
    const auto r = run(p, x, cfg.step_budget);
    if (r.halted() && r.output == y && oracle_total(cfg, p)) return Complexity(program_length(i));
  }
  return Complexity::infinite();
}

// Literal dovetailing: stage t runs every program of length <= min(t, L)
// for t steps.
std::vector<Discovery> oracle_discovery(const MachineConfig& cfg, const Bitstring& y) {
  std::vector<Discovery> log;
  std::set<Bitstring> seen;
  for (int t = 1; t <= cfg.step_budget; ++t) {
    const int len = std::min(t, cfg.max_prog_len);
    for (ProgramIndex i = 0; i < program_count(len); ++i) {
      const auto r = run(program_at(i), y, t);
      if (r.halted() && seen.insert(r.output).second) log.push_back({r.output, t, i});
    }
  }
  return log;
}

void require_same_outcomes(const HaltingTable& a, const HaltingTable& b, const Bitstring& y) {
  REQUIRE(a.program_count() == b.program_count());
  for (ProgramIndex i = 0; i < a.program_count(); ++i) REQUIRE(a.outcome(i, y) == b.outcome(i, y));
}

}  // namespace

TEST_CASE("L = 0 table") {
  const MachineConfig cfg = small_config(0, 1, 0);
  const HaltingTable t = build_table(cfg, std::vector<Bitstring>{Bitstring{}});
  CHECK(t.program_count() == 1);
  const auto r = t.outcome(0, Bitstring{});
  CHECK(r.halted());
  CHECK(r.output.empty());
  CHECK(t.complexity(Bitstring{}) == Complexity(0));
  CHECK(t.complexity(bits("0")).is_infinite());
  REQUIRE(t.totality_known());
  CHECK(t.total_cond_complexity(Bitstring{}, Bitstring{}) == Complexity(0));
  CHECK(t.total_cond_complexity(bits("1"), Bitstring{}).is_infinite());
}

TEST_CASE("recording is idempotent and per-condition independent") {
  const MachineConfig cfg = small_config(10, 128, 2);
  const Bitstring y1 = bits("01"), y2 = bits("110");
  const HaltingTable once = build_table(cfg, std::vector<Bitstring>{y1});
  const HaltingTable twice = build_table(cfg, std::vector<Bitstring>{y1, y1});
  const HaltingTable both = build_table(cfg, std::vector<Bitstring>{y2, y1});
  require_same_outcomes(once, twice, y1);
  require_same_outcomes(once, both, y1);
  CHECK(twice.conditions().size() == 1);
  CHECK_THROWS_AS((void)once.outcome(0, y2), UnrecordedCondition);
}

TEST_CASE("table agrees with direct execution") {
  const MachineConfig cfg = small_config(9, 96, 2);
  const HaltingTable t = build_table(cfg, universe_conditions(cfg));
  for (const auto& y : t.conditions()) {
    for (ProgramIndex i = 0; i < t.program_count(); ++i) {
      REQUIRE(t.outcome(i, y) == run(program_at(i), y, cfg.step_budget));
    }
  }
}

TEST_CASE("C and CT against brute force") {
  const MachineConfig cfg = small_config(9, 96, 2);
  const HaltingTable t = build_table(cfg, universe_conditions(cfg));
  const auto strings = Bitstring::all_up_to(3);
  for (const auto& y : t.conditions()) {
    for (const auto& x : strings) {
      REQUIRE(t.cond_complexity(x, y) == oracle_complexity(cfg, x, y));
    }
  }
  for (const auto& x : Bitstring::all_up_to(2)) {
    for (const auto& y : strings) {
      const Complexity ct = t.total_cond_complexity(y, x);
      REQUIRE(ct == oracle_total_complexity(cfg, y, x));
      REQUIRE(t.cond_complexity(y, x) <= ct);
    }
  }
}

TEST_CASE("dovetailing order matches a literal stage-by-stage simulation") {
  const MachineConfig cfg = small_config(8, 48, 1);
  const HaltingTable t = build_table(cfg, universe_conditions(cfg));
  for (const auto& y : t.conditions()) {
    const auto want = oracle_discovery(cfg, y);
    const auto got = t.discovery_log(y);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(got[i].output == want[i].output);
      REQUIRE(got[i].stage == want[i].stage);
      REQUIRE(got[i].program == want[i].program);
    }
  }
}

TEST_CASE("worker count does not change the table") {
  const MachineConfig cfg = small_config(12, 256, 3);
  const auto conds = universe_conditions(cfg);
  const HaltingTable t1 = build_table(cfg, conds, {1});
  const HaltingTable t2 = build_table(cfg, conds, {2});
  const HaltingTable t8 = build_table(cfg, conds, {8});
  std::ostringstream s1, s2, s8;
  save_cache(t1, s1);
  save_cache(t2, s2);
  save_cache(t8, s8);
  CHECK(s1.str() == s2.str());
  CHECK(s1.str() == s8.str());
  CHECK(omega_ledger(t1, 12) == omega_ledger(t8, 12));
}

TEST_CASE("cache roundtrip and refusal") {
  const MachineConfig cfg = small_config(10, 128, 2);
  const HaltingTable t = build_table(cfg, universe_conditions(cfg));
  std::stringstream buf;
  save_cache(t, buf);
  const std::string bytes = buf.str();
  std::istringstream in(bytes);
  const HaltingTable back = load_cache(in, cfg);
  CHECK(back.conditions() == t.conditions());
  CHECK(back.totality_known());
  for (const auto& y : t.conditions()) require_same_outcomes(t, back, y);
  CHECK(omega_ledger(back, 10) == omega_ledger(t, 10));
  std::ostringstream again;
  save_cache(back, again);
  CHECK(again.str() == bytes);

  MachineConfig other = cfg;
  other.step_budget = 129;
  std::istringstream in2(bytes);
  CHECK_THROWS_AS(load_cache(in2, other), CacheMismatch);
  std::istringstream junk("not a cache\n");
  CHECK_THROWS_AS(load_cache(junk, cfg), CacheMismatch);
}

TEST_CASE("memory ceiling") {
  BuildOptions tiny;
  tiny.memory_ceiling_bytes = 1024;
  CHECK_THROWS_AS(build_table(MachineConfig{}, universe_conditions(MachineConfig{}), tiny), ResourceLimit);
}

TEST_CASE("ledger laws on the default table") {
  const auto& t = support::table();
  const auto& l = support::ledger();
  CHECK(l.omega(0) == 1);
  CHECK(l.members(0) == std::vector<Bitstring>{Bitstring{}});
  for (int m = 0; m <= l.m_max(); ++m) {
    CHECK(l.omega(m) <= (std::uint64_t{1} << (m + 1)) - 1);
  }
  const SuiteResult r = verify_ledger(t, l);
  CHECK(r.checked > 0);
  CHECK_MESSAGE(r.passed(), (r.failures.empty() ? std::string() : r.failures.front()));
}

TEST_CASE("copy and long-run complexities") {
  const auto& t = support::table();
  const int c_copy = support::calibration().get_int("c_copy");
  for (const auto& x : Bitstring::all_up_to(6)) {
    REQUIRE(t.cond_complexity(x, x) <= Complexity(c_copy));
    if (!x.empty()) REQUIRE(t.total_cond_complexity(x, x) == Complexity(c_copy));
  }
  CHECK(t.complexity(Bitstring{}) == Complexity(0));
  const Complexity c64 = t.complexity(Bitstring::zeros(64));
  REQUIRE(c64.finite());
  CHECK(c64.value() < 64);
}

TEST_CASE("C vs CT on the default universe") {
  const SuiteResult r = verify_ct(support::table(), 4);
  CHECK(r.checked > 0);
  CHECK(r.passed());
}

TEST_CASE("symmetry report") {
  const auto& t = support::table();
  const auto e = symmetry_report(t, Bitstring{}, Bitstring{});
  CHECK(e.c_x == Complexity(0));
  CHECK(e.c_y_given_x == Complexity(0));
  CHECK(e.gap_x_side == e.c_pair);
  CHECK(e.gap_y_side == e.c_pair);
  for (const auto& x : Bitstring::all_up_to(2)) {
    for (const auto& y : Bitstring::all_up_to(2)) {
      const auto a = symmetry_report(t, x, y);
      const auto b = symmetry_report(t, y, x);
      CHECK(a.c_x == b.c_y);
      CHECK(a.c_y_given_x == b.c_x_given_y);
    }
  }
  CHECK(pair_code(bits("10"), bits("0")) == bits("1100010"));
}

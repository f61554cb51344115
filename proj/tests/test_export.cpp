#include <cmath>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "algstat/export.hpp"
#include "algstat/models.hpp"
#include "algstat/universal.hpp"

using namespace algstat;
using support::bits;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("frontier csv roundtrip") {
  const MachineConfig cfg;
  for (const auto& x : Bitstring::all_up_to(4)) {
    const Profile p = profile(support::catalog(), x, 16);
    const std::string csv = frontier_csv(p, cfg, {x.token(), "inf", "all"});
    REQUIRE(csv.rfind("# algstat frontier\n", 0) == 0);
    REQUIRE(csv.find("\nm,l_min\n") != std::string::npos);
    REQUIRE(parse_frontier_csv(csv) == p);
  }
  CHECK(parse_frontier_csv(frontier_csv(Profile{}, cfg, {})).empty());
}

TEST_CASE("ledger and group dumps") {
  const auto& l = support::ledger();
  const std::string csv = ledger_csv(l, support::table().config());
  CHECK(csv.find("index,string,complexity,stage\n") != std::string::npos);
  CHECK(count_of(csv, "\n") >= l.order().size() + 1);
  const std::string groups = group_dump_csv(l);
  CHECK(groups.rfind("m,s,first,count\n", 0) == 0);
  std::size_t total = 0;
  for (int m = 0; m <= l.m_max(); ++m) total += universal_groups(l, m).groups.size();
  CHECK(count_of(groups, "\n") == total + 1);
}

TEST_CASE("trace csv") {
  ImprovementTrace tr;
  TraceStep s;
  s.model.elements = {bits("01")};
  s.model.code = encode_set(s.model.elements);
  s.model.complexity = Complexity(9);
  s.deficiency = 1.5;
  s.strength = Complexity::infinite();
  tr.steps = {s, s};
  tr.steps[1].kind = 'B';
  const std::string csv = trace_csv(tr);
  CHECK(csv.rfind("step,kind,index,complexity,log_card,deficiency,strength\n", 0) == 0);
  CHECK(count_of(csv, "\n") == 3);
  CHECK(csv.find(",inf") != std::string::npos);
}

TEST_CASE("svg staircases") {
  const std::string empty = plot_profile({Profile{}}, {"empty"});
  CHECK(empty.rfind("<svg", 0) == 0);
  CHECK(empty.find("complexity") != std::string::npos);
  CHECK(empty.find("log-cardinality") != std::string::npos);
  CHECK(count_of(empty, "<path") == 0);

  const Profile p = Profile::from_points({{3, 4}, {5, 1}, {8, 0}});
  const std::string two = plot_profile({p, p}, {"first", "second"}, "overlay");
  CHECK(two == plot_profile({p, p}, {"first", "second"}, "overlay"));
  CHECK(two.find("first") != std::string::npos);
  CHECK(two.find("second") != std::string::npos);
  CHECK(count_of(two, "<path") == 2);
  CHECK(two.find("</svg>") != std::string::npos);
}

TEST_CASE("bundle layout") {
  const auto dir = std::filesystem::temp_directory_path() / "algstat-test-bundle";
  std::filesystem::remove_all(dir);
  const auto written = write_bundle(dir, MachineConfig{}, support::calibration(), {{"a.csv", "m,l_min\n"}});
  REQUIRE(written.size() == 3);
  CHECK(std::filesystem::exists(dir / "config.txt"));
  CHECK(std::filesystem::exists(dir / "constants.txt"));
  CHECK(std::filesystem::exists(dir / "a.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("calibration file format") {
  const Calibration& cal = support::calibration();
  CHECK(cal.config() == MachineConfig{});
  const Calibration back = Calibration::parse(cal.str());
  CHECK(back.values() == cal.values());
  CHECK(std::isinf(cal.get_real("example1_theorem4_delta_gap")));
  CHECK_THROWS(cal.get_int("no_such_key"));
  CHECK_THROWS(Calibration::parse("wrong-header 1\n"));
}

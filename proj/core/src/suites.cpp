#include "algstat/suites.hpp"

#include <algorithm>
#include <set>

#include "algstat/family.hpp"
#include "algstat/models.hpp"
#include "algstat/universal.hpp"

namespace algstat {

void SuiteResult::fail(std::string what) {
  if (failures.size() < 20) failures.push_back(std::move(what));
  ++failure_count;
}

SuiteResult verify_codec(int max_len, int code_len) {
  SuiteResult r;
  r.name = "codec";
  const auto strings = Bitstring::all_up_to(static_cast<std::size_t>(max_len));
  auto check = [&](StringSet s) {
    ++r.checked;
    const Bitstring code = encode_set(s);
    auto back = decode_set(code);
    canonicalize(s);
    if (!back || *back != s) r.fail("decode(encode(A)) != A for code " + code.token());
  };
  check({});
  for (std::size_t i = 0; i < strings.size(); ++i) {
    check({strings[i]});
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      check({strings[i], strings[j]});
      for (std::size_t k = j + 1; k < strings.size(); ++k) check({strings[i], strings[j], strings[k]});
    }
  }
  for (int len = 0; len <= code_len; len += 2) {
    for (auto& c : Bitstring::all_of_length(static_cast<std::size_t>(len))) {
      auto s = decode_set(c);
      if (!s) continue;
      ++r.checked;
      if (encode_set(*s) != c) r.fail("encode(decode(c)) != c for " + c.token());
    }
  }
  return r;
}

SuiteResult verify_ledger(const HaltingTable& table, const OmegaLedger& ledger) {
  SuiteResult r;
  r.name = "ledger";
  const int L = table.config().max_prog_len;
  // Every string the table can produce on the empty condition, with C.
  const auto outs = table.outputs(Bitstring{}, L);
  for (int m = 0; m <= ledger.m_max(); ++m) {
    const auto members = ledger.members(m);
    ++r.checked;
    if (ledger.omega(m) != members.size()) r.fail("Omega_" + std::to_string(m) + " != |L_m|");
    if (m > 0 && ledger.omega(m - 1) > ledger.omega(m)) r.fail("Omega decreases at m=" + std::to_string(m));
    std::set<Bitstring> got(members.begin(), members.end());
    if (m > 0) {
      for (auto& x : ledger.members(m - 1)) {
        if (!got.contains(x)) r.fail("L_" + std::to_string(m - 1) + " not inside L_" + std::to_string(m));
      }
    }
    std::set<Bitstring> want;
    for (auto& o : outs) {
      if (o.complexity.value() <= m) want.insert(o.output);
    }
    if (got != want) r.fail("L_" + std::to_string(m) + " != {x : C(x) <= m}");
    for (auto& x : members) {
      ++r.checked;
      if (table.complexity(x) > Complexity(m)) r.fail("member " + x.token() + " of L_" + std::to_string(m) + " has C > m");
    }
  }
  return r;
}

SuiteResult verify_groups(const HaltingTable& table, const OmegaLedger& ledger) {
  SuiteResult r;
  r.name = "groups";
  for (int m = 0; m <= ledger.m_max(); ++m) {
    const auto d = universal_groups(ledger, m);
    const auto members = ledger.members(m);
    std::uint64_t sum = 0, next = 0;
    int prev_s = 64;
    for (const auto& g : d.groups) {
      ++r.checked;
      if (g.count != (std::uint64_t{1} << g.s)) r.fail("group size is not 2^s");
      if (g.s >= prev_s) r.fail("exponents not strictly decreasing");
      if (g.first != next) r.fail("groups are not consecutive");
      prev_s = g.s;
      next = g.first + g.count;
      sum += g.count;
    }
    if (sum != ledger.omega(m)) r.fail("group sizes do not sum to Omega_" + std::to_string(m));
    if (d.s_values != omega_decomposition(ledger.omega(m))) r.fail("exponents differ from the decomposition");
    for (std::size_t i = 0; i < members.size(); ++i) {
      ++r.checked;
      const Group* scan = nullptr;
      for (const auto& g : d.groups) {
        if (i >= g.first && i < g.first + g.count) scan = &g;
      }
      const Located loc = locate(table, ledger, members[i], m);
      if (scan == nullptr || !(loc.group == *scan)) r.fail("locate disagrees with scan for " + members[i].token());
      if (!loc.model.contains(members[i])) r.fail("located group misses " + members[i].token());
    }
  }
  return r;
}

SuiteResult verify_theorem1(const HaltingTable& table, const ModelCatalog& catalog, const Calibration& cal, int n) {
  SuiteResult r;
  r.name = "theorem1";
  const int c_slice = cal.get_int("c_slice");
  const int c_two_part = cal.get_int("c_two_part");
  const int m_max = catalog.m_max();
  for (auto& x : Bitstring::all_up_to(static_cast<std::size_t>(n))) {
    ++r.checked;
    const Profile p = profile(catalog, x, m_max);
    const auto& fr = p.frontier();
    for (std::size_t i = 1; i < fr.size(); ++i) {
      if (!(fr[i - 1].complexity < fr[i].complexity && fr[i - 1].log_card > fr[i].log_card)) {
        r.fail("frontier of " + x.token() + " is not strictly monotone");
      }
    }
    for (const auto& f : fr) {
      if (!p.contains(f.complexity + 1, f.log_card) || !p.contains(f.complexity, f.log_card + 1)) {
        r.fail("profile of " + x.token() + " is not upward closed");
      }
    }
    const Complexity cs = table.complexity(encode_set(StringSet{x}));
    if (cs.finite() && cs.value() <= m_max && !p.contains(cs.value(), 0)) r.fail("(C({x}),0) missing for " + x.token());
    const Complexity cc = table.complexity(encode_set(Bitstring::all_of_length(x.size())));
    if (cc.finite() && cc.value() <= m_max && !p.contains(cc.value(), static_cast<int>(x.size()))) {
      r.fail("(C(cube),n) missing for " + x.token());
    }
    const auto slack = profile_law_slack(table, p, x);
    if (slack.slice > c_slice) r.fail("slice law slack " + std::to_string(slack.slice) + " > c_slice for " + x.token());
    if (slack.two_part > c_two_part) {
      r.fail("two-part slack " + std::to_string(slack.two_part) + " > c_two_part for " + x.token());
    }
  }
  return r;
}

SuiteResult verify_containment(const HaltingTable& table, const ModelCatalog& catalog, const Calibration& cal, int n) {
  SuiteResult r;
  r.name = "containment";
  const Complexity eps(cal.get_int("eps_cyl"));
  const int m_max = catalog.m_max();
  const ModelFamily cyl = cylinder_family();
  for (auto& x : Bitstring::all_up_to(static_cast<std::size_t>(n))) {
    ++r.checked;
    const Profile restricted = restricted_profile(table, x, cyl, m_max);
    const Profile strong = strong_profile(table, catalog, x, eps, m_max);
    const Profile full = profile(catalog, x, m_max);
    if (!restricted.subset_of(strong)) r.fail("restricted not inside strong for " + x.token());
    if (!strong.subset_of(full)) r.fail("strong not inside full for " + x.token());
  }
  return r;
}

SuiteResult verify_ct(const HaltingTable& table, int n) {
  SuiteResult r;
  r.name = "ct";
  const auto strings = Bitstring::all_up_to(static_cast<std::size_t>(n));
  for (auto& x : strings) {
    for (auto& y : strings) {
      ++r.checked;
      if (table.cond_complexity(y, x) > table.total_cond_complexity(y, x)) {
        r.fail("C(y|x) > CT(y|x) for y=" + y.token() + " x=" + x.token());
      }
    }
  }
  return r;
}

}  // namespace algstat

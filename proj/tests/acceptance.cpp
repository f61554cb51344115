// Acceptance run: one line per criterion, exit 0 iff every criterion passes.
// Measured values are archived under --out.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "algstat/cache_io.hpp"
#include "algstat/calibration.hpp"
#include "algstat/constructions.hpp"
#include "algstat/errors.hpp"
#include "algstat/export.hpp"
#include "algstat/hereditary.hpp"
#include "algstat/improvement.hpp"
#include "algstat/suites.hpp"

using namespace algstat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Context {
  HaltingTable& table;
  const OmegaLedger& ledger;
  const ModelCatalog& catalog;
  const Calibration& cal;
  std::filesystem::path out;
};

std::string suite_detail(const SuiteResult& r) {
  std::string d = std::to_string(r.checked) + " checks, " + std::to_string(r.failure_count) + " failures";
  if (!r.failures.empty()) d += "; first: " + r.failures.front();
  return d;
}

Verdict from_suite(const SuiteResult& r) {
  Verdict v;
  v.pass = r.passed() && r.checked > 0;
  v.detail = suite_detail(r);
  return v;
}

std::string fmt_real(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// 1. Codec round-trip.
Verdict codec(const Context&) {
  Verdict v;
  const SuiteResult small = verify_codec(4, 20);
  v.require(small.passed(), suite_detail(small));
  const auto pool = Bitstring::all_up_to(6);
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<std::size_t> size(4, 24), pick(0, pool.size() - 1);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    StringSet s;
    for (std::size_t n = size(rng); s.size() < n;) {
      s.push_back(pool[pick(rng)]);
      canonicalize(s);
    }
    const auto back = decode_set(encode_set(s));
    if (!back || *back != s) ++bad;
  }
  v.require(bad == 0, std::to_string(bad) + " larger sets failed the round-trip");
  if (v.pass) v.detail = std::to_string(small.checked) + " small checks, 10000 larger sets";
  return v;
}

// 9. Partition transform over sampled (A, p) pairs.
struct PartitionSample {
  ProgramIndex program;
  Bitstring x;
};

std::vector<PartitionSample> partition_samples(const HaltingTable& table, std::size_t want) {
  std::vector<PartitionSample> all;
  for (ProgramIndex p = 0; p < table.program_count(); ++p) {
    if (!table.reads_condition(p) || !table.is_total(p)) continue;
    for (int n = 4; n <= 6; ++n) {
      for (const auto& x : Bitstring::all_of_length(static_cast<std::size_t>(n))) {
        if (code_contains(table.outcome(p, x).output, x)) all.push_back({p, x});
      }
    }
  }
  std::vector<PartitionSample> picked;
  if (all.empty()) return picked;
  const std::size_t stride = std::max<std::size_t>(1, all.size() / want);
  for (std::size_t i = 0; i < all.size() && picked.size() < want; i += stride) picked.push_back(all[i]);
  return picked;
}

Verdict partition(const Context& c) {
  Verdict v;
  const auto samples = partition_samples(c.table, 20);
  v.require(samples.size() == 20, "only " + std::to_string(samples.size()) + " sampled pairs");
  std::ostringstream csv;
  csv << "program,x,card_a,card_a1,classes,ct_a_given_a1,ct_a1_given_a,strength_a1\n";
  for (const auto& s : samples) {
    const Bitstring prog = program_at(s.program);
    const int n = static_cast<int>(s.x.size());
    const ModelSet a = *model_from_code(c.table, c.table.outcome(s.program, s.x).output);
    const PartitionResult r = strongify_partition(c.table, a, s.x, prog, n);
    std::set<Bitstring> seen;
    bool disjoint = true, inside = true;
    for (const auto& cls : r.partition) {
      inside = inside && !cls.empty();
      for (const auto& e : cls) {
        disjoint = disjoint && seen.insert(e).second;
        inside = inside && e.size() == static_cast<std::size_t>(n);
      }
    }
    const std::string tag = " (p=" + prog.str() + ", x=" + s.x.str() + ")";
    v.require(disjoint && inside, "classes overlap or leave {0,1}^n" + tag);
    v.require(r.a1.contains(s.x), "x not in A_1" + tag);
    v.require(r.a1.cardinality() <= a.cardinality(), "|A_1| > |A|" + tag);
    v.require(r.ct_a_given_a1.finite(), "CT(A|A_1) infinite" + tag);
    v.require(r.ct_a1_given_a.finite(), "CT(A_1|A) infinite" + tag);
    csv << prog.token() << ',' << s.x.token() << ',' << a.cardinality() << ',' << r.a1.cardinality() << ','
        << r.partition.size() << ',' << r.ct_a_given_a1 << ',' << r.ct_a1_given_a << ',' << r.strength_a1 << '\n';
  }
  write_text(c.out / "partition" / "samples.csv", csv.str());
  if (v.pass) v.detail = std::to_string(samples.size()) + " pairs; archived partition/samples.csv";
  return v;
}

// 7. Antistochastic construction.
Verdict antistochastic_check(const Context& c) {
  Verdict v;
  const int L = c.table.config().max_prog_len;
  std::ostringstream detail;
  for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 4}}) {
    const std::string tag = "antistochastic_" + std::to_string(n) + "_" + std::to_string(k);
    const Bitstring x = antistochastic(c.catalog, n, k);
    v.require(x.str() == c.cal.get(tag + "_x"), tag + ": string differs from calibration");
    for (const auto& m : c.catalog.models()) {
      if (m.complexity.value() >= k) continue;
      if (m.cardinality() <= (std::uint64_t{1} << (n - k)) && m.contains(x)) {
        v.require(false, tag + ": x lies in a qualifying model");
      }
    }
    const Profile px = profile(c.catalog, x, L);
    const Complexity close = closeness(px, Profile::l_shape(k, n));
    v.require(close.str() == c.cal.get(tag + "_eps"), tag + ": L-shape closeness " + close.str() + " differs from calibration");

    int w_eps = 0;
    std::vector<ProfilePoint> wpts;
    for (const auto& w : antistochastic_witnesses(c.table, x, k)) {
      v.require(w.model.contains(x), tag + ": witness misses x");
      if (w.model.complexity.is_infinite() || w.strength.is_infinite()) continue;
      w_eps = std::max(w_eps, w.strength.value());
      wpts.push_back({w.model.complexity.value(), w.model.log_card()});
    }
    v.require(w_eps <= c.cal.get_int(tag + "_witness_eps"), tag + ": witness strength above calibration");
    const int overhead = c.cal.get_int(tag + "_cylinder_overhead");
    const NormalityGap gap = normality_gap(c.table, c.catalog, x, Complexity(w_eps), L);
    v.require(gap.gap <= Complexity(overhead),
              tag + ": normality gap " + gap.gap.str() + " above cylinder overhead " + std::to_string(overhead));
    write_text(c.out / "antistochastic" / (tag + ".csv"), frontier_csv(px, c.table.config(), {x.token(), "inf", "all"}));
    detail << (n == 6 ? "" : "; ") << tag << " x=" << x << " close=" << close << " gap=" << gap.gap << "<=" << overhead;
  }
  if (v.pass) v.detail = detail.str();
  return v;
}

Theorem3Bundle desk_bundle(const Context& c) {
  return theorem3_string(c.table, c.catalog, c.ledger, 2, c.cal.get_int("theorem3_delta"),
                         c.cal.get_real("theorem3_eps"), 1.0);
}

// 8. Cylinder construction at k = 2.
Verdict theorem3(const Context& c) {
  Verdict v;
  const Theorem3Bundle b = desk_bundle(c);
  v.require(b.x.size() == 8, "l(x) != 4k");
  v.require(b.x.starts_with(b.y), "x does not extend y");
  v.require(b.model.cardinality() == 16 && b.model.contains(b.x), "A is not the 2^(2k) cylinder over y");
  Complexity best = Complexity(0);
  for (const auto& z : Bitstring::all_of_length(4)) best = std::max(best, c.table.cond_complexity(z, b.y));
  v.require(b.c_z_given_y == best, "z is not the argmax of C(z|y)");
  v.require(b.mss.is_mss, "A is not an MSS at the calibrated (delta, eps)");
  std::ostringstream csv;
  csv << "m,s,complexity,strength,deficiency\n";
  for (const auto& g : b.groups) {
    csv << g.group.m << ',' << g.group.s << ',' << g.model.complexity << ',' << g.strength << ','
        << fmt_real(g.deficiency) << '\n';
  }
  std::ostringstream summary;
  summary << "x " << b.x << "\ny " << b.y << "\nz " << b.z << "\nc_z_given_y " << b.c_z_given_y << "\nc_a "
          << b.model.complexity << "\nct_a_given_x " << b.strength << "\ndeficiency "
          << fmt_real(b.mss.sufficiency.deficiency) << "\ndelta " << b.delta << "\neps " << fmt_real(b.eps)
          << "\nis_mss " << b.mss.is_mss << "\ngroups " << b.groups.size() << '\n';
  write_bundle(c.out / "theorem3", c.table.config(), c.cal, {{"summary.txt", summary.str()}, {"groups.csv", csv.str()}});
  if (v.pass) {
    v.detail = "x=" + b.x.str() + " C(A)=" + b.model.complexity.str() + " delta=" + std::to_string(b.delta) +
               " eps=" + fmt_real(b.eps) + ", " + std::to_string(b.groups.size()) + " groups reported";
  }
  return v;
}

// 10. Improvement sequences.
void check_trace(Verdict& v, const HaltingTable& table, const ImprovementTrace& tr, const ModelSet& a1, int alpha,
                 int theta, const std::string& tag) {
  if (a1.complexity.finite()) {
    v.require(tr.big_steps <= improvement_iteration_bound(a1, theta, alpha), tag + ": iteration bound exceeded");
  }
  (void)table;
  double accumulated = tr.steps.empty() ? 0 : tr.steps.front().deficiency;
  for (std::size_t i = 2; i < tr.steps.size(); i += 2) {
    const auto& prev_a = tr.steps[i - 2];
    const auto& prev_b = tr.steps[i - 1];
    const auto& next_a = tr.steps[i];
    v.require(next_a.model.complexity < prev_a.model.complexity, tag + ": A-complexity did not decrease");
    v.require(next_a.deficiency <= prev_b.deficiency + 2 * alpha + 1e-9, tag + ": deficiency grew by more than 2 alpha");
    accumulated += (prev_b.deficiency - prev_a.deficiency) + 2 * alpha;
    v.require(next_a.deficiency <= accumulated + 1e-9, tag + ": deficiency above the accumulated bound");
  }
}

Verdict improvement(const Context& c) {
  Verdict v;
  const Theorem3Bundle b = desk_bundle(c);
  std::vector<std::pair<Bitstring, ModelSet>> starts{{b.x, b.model}};
  for (const auto& x : Bitstring::all_of_length(6)) {
    const auto w = antistochastic_witnesses(c.table, x, 2);
    for (const auto& wi : w) {
      if (wi.model.complexity.finite()) starts.emplace_back(x, wi.model);
    }
  }
  const Complexity eps_cyl(c.cal.get_int("eps_cyl"));
  for (const auto& x : Bitstring::all_up_to(4)) {
    if (x.empty()) continue;  // theta = alpha = 0
    for (const auto& sm : strong_models(c.table, c.catalog, x, eps_cyl, c.table.config().max_prog_len)) {
      starts.emplace_back(x, *sm.model);
    }
  }
  std::size_t traces = 0, big = 0, identity = 0;
  for (const auto& [x, a] : starts) {
    const int n = static_cast<int>(x.size());
    const int theta = default_theta(n), alpha = default_alpha(n);
    const Complexity eps = c.table.total_cond_complexity(a.code, x);
    const ImprovementTrace tr = improve_sequence(c.table, c.ledger, c.catalog, x, a, eps, alpha, theta, 64);
    check_trace(v, c.table, tr, a, alpha, theta, "x=" + x.str());
    big += static_cast<std::size_t>(tr.big_steps);
    identity += tr.f_identity ? 1 : 0;
    if (traces++ == 0) write_text(c.out / "improve" / "theorem3_trace.csv", trace_csv(tr));
  }
  if (v.pass) v.detail = std::to_string(traces) + " traces, " + std::to_string(big) + " big steps, " + std::to_string(identity) +
                         " with no finite-complexity group";
  return v;
}

// 11. Hereditary pipeline.
Verdict hereditary(const Context& c) {
  Verdict v;
  const Theorem3Bundle b = desk_bundle(c);
  const int n = static_cast<int>(b.x.size());
  const HereditaryReport r =
      hereditary_check(c.table, c.ledger, c.catalog, b.x, b.model, Complexity(static_cast<int>(b.eps)),
                       c.cal.get_int("theorem3_delta"), 1.0, default_alpha(n), default_theta(n), 64);
  v.require(!r.points.empty(), "no frontier points reported");
  std::ostringstream csv;
  csv << "a,b,failed_stage,m1_card,a1_cap_m1,h_size,h_bound,h_bound_holds,h_bound_floor,h_bound_floor_holds,"
         "a_in_d,log_d_le_log_b\n";
  std::size_t h_stages = 0, d_stages = 0;
  for (const auto& p : r.points) {
    const std::string tag = " at (" + std::to_string(p.point.complexity) + "," + std::to_string(p.point.log_card) + ")";
    if (p.h_size > 0) {
      ++h_stages;
      v.require(p.h_bound_holds, "|H| = " + std::to_string(p.h_size) + " > |M_1|/(2|A_1 cap M_1|) = " +
                                     fmt_real(p.h_bound) + tag);
    }
    if (p.d) {
      ++d_stages;
      v.require(p.a_in_d, "[A] not in D" + tag);
      v.require(p.log_d_le_log_b, "log|D| > log|B|" + tag);
    }
    csv << p.point.complexity << ',' << p.point.log_card << ',' << (p.failed_stage.empty() ? "-" : p.failed_stage)
        << ',' << (p.m1 ? p.m1->a1.cardinality() : 0) << ',' << p.a1_cap_m1 << ',' << p.h_size << ','
        << fmt_real(p.h_bound) << ',' << p.h_bound_holds << ',' << fmt_real(p.h_bound_floor) << ','
        << p.h_bound_floor_holds << ',' << p.a_in_d << ',' << p.log_d_le_log_b << '\n';
  }
  v.require(r.gap_a1.gap.finite(), "normality_gap([A_1]) is infinite");
  std::ostringstream summary;
  summary << "mss " << r.mss << "\nstrong " << r.strong << "\nnormality_gap_x " << r.normality_gap_x
          << "\nnormality_gap_a1 " << r.gap_a1.gap << "\nnormality_gap_a " << r.gap_a.gap << "\npoints "
          << r.points.size() << '\n';
  write_bundle(c.out / "hereditary", c.table.config(), c.cal, {{"summary.txt", summary.str()}, {"points.csv", csv.str()}});
  const std::string counts = std::to_string(r.points.size()) + " points, " + std::to_string(h_stages) +
                             " reached H, " + std::to_string(d_stages) + " reached D, gap([A_1])=" + r.gap_a1.gap.str();
  v.detail = v.pass ? counts : v.detail + "; " + counts;
  return v;
}

// 12. Determinism across worker counts.
Verdict determinism(const Context& c) {
  Verdict v;
  const MachineConfig cfg = c.table.config();
  std::string ref_cache, ref_ledger, ref_results;
  for (unsigned workers : {1U, 2U, 8U}) {
    BuildOptions opts;
    opts.workers = workers;
    const HaltingTable t = build_table(cfg, universe_conditions(cfg), opts);
    std::ostringstream bytes;
    save_cache(t, bytes);
    const OmegaLedger l = omega_ledger(t, cfg.max_prog_len);
    const ModelCatalog cat(t, cfg.max_prog_len);
    std::ostringstream results;
    for (const SuiteResult& r : {verify_ledger(t, l), verify_groups(t, l),
                                 verify_theorem1(t, cat, c.cal, cfg.cond_universe)}) {
      results << r.name << ' ' << r.checked << ' ' << r.failure_count << '\n';
    }
    for (const auto& x : Bitstring::all_up_to(static_cast<std::size_t>(cfg.cond_universe))) {
      const Profile px = profile(cat, x, cfg.max_prog_len);
      for (const auto& p : px.frontier()) results << p.complexity << ',' << p.log_card << ';';
    }
    if (workers == 1) {
      ref_cache = bytes.str();
      ref_ledger = ledger_csv(l, cfg);
      ref_results = results.str();
      continue;
    }
    const std::string w = " with " + std::to_string(workers) + " workers";
    v.require(bytes.str() == ref_cache, "cache bytes differ" + w);
    v.require(ledger_csv(l, cfg) == ref_ledger, "ledger differs" + w);
    v.require(results.str() == ref_results, "criteria 2-4 results differ" + w);
  }
  if (v.pass) v.detail = "1/2/8 workers: identical cache (" + std::to_string(ref_cache.size()) + " bytes), ledger and results";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algstat acceptance run"};
  std::string out = "acceptance-out";
  std::string cal_file = ALGSTAT_CALIBRATION_FILE;
  app.add_option("--out", out, "Archive directory")->capture_default_str();
  app.add_option("--calibration", cal_file, "Frozen calibration constants")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    const Calibration cal = Calibration::load(cal_file);
    const MachineConfig cfg;
    if (!(cal.config() == cfg)) {
      std::cerr << "calibration file was measured under a different configuration\n";
      return 2;
    }
    HaltingTable table = build_table(cfg, universe_conditions(cfg));
    const OmegaLedger ledger = omega_ledger(table, cfg.max_prog_len);
    const ModelCatalog catalog(table, cfg.max_prog_len);
    const Context ctx{table, ledger, catalog, cal, out};
    write_text(ctx.out / "ledger.csv", ledger_csv(ledger, cfg));

    const int n = cfg.cond_universe;
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"codec round-trip", [&] { return codec(ctx); }},
        {"ledger laws", [&] { return from_suite(verify_ledger(table, ledger)); }},
        {"group laws", [&] { return from_suite(verify_groups(table, ledger)); }},
        {"profile shape", [&] { return from_suite(verify_theorem1(table, catalog, cal, n)); }},
        {"containment chain", [&] { return from_suite(verify_containment(table, catalog, cal, n)); }},
        {"C vs CT", [&] { return from_suite(verify_ct(table, 4)); }},
        {"antistochastic construction", [&] { return antistochastic_check(ctx); }},
        {"cylinder construction bundle", [&] { return theorem3(ctx); }},
        {"partition transform", [&] { return partition(ctx); }},
        {"improvement sequence", [&] { return improvement(ctx); }},
        {"hereditary pipeline", [&] { return hereditary(ctx); }},
        {"determinism", [&] { return determinism(ctx); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      const auto start = std::chrono::steady_clock::now();
      Verdict v;
      try {
        v = criteria[i].second();
      } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("error: ") + e.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      failed += v.pass ? 0 : 1;
      char timing[32];
      std::snprintf(timing, sizeof timing, "%.1fs", secs);
      std::cout << "[PRIMARY] " << (i + 1) << ". " << criteria[i].first << ": " << (v.pass ? "PASS" : "FAIL") << " ("
                << v.detail << ") [" << timing << "]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
  } catch (const UserError& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}

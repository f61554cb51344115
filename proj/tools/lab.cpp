// algstat-lab: command-line workbench over the halting table.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "algstat/cache_io.hpp"
#include "algstat/calibration.hpp"
#include "algstat/constructions.hpp"
#include "algstat/errors.hpp"
#include "algstat/export.hpp"
#include "algstat/family.hpp"
#include "algstat/hereditary.hpp"
#include "algstat/improvement.hpp"
#include "algstat/suites.hpp"
#include "lab_context.hpp"

using namespace algstat;
namespace fs = std::filesystem;

namespace {

Complexity parse_eps(const std::string& s) {
  if (s == "inf") return Complexity::infinite();
  return Complexity(std::stoi(s));
}

std::string print_profile(const Profile& p) {
  std::string out;
  for (const auto& f : p.frontier()) out += "(" + std::to_string(f.complexity) + "," + std::to_string(f.log_card) + ")";
  return out.empty() ? "(empty)" : out;
}

ModelFamily family_by_name(const std::string& name) {
  if (name == "cylinders") return cylinder_family();
  if (name == "singletons") return singleton_family();
  if (name == "all-sets") return all_sets_family();
  throw UserError("unknown family '" + name + "' (cylinders, singletons, all-sets)");
}

int m_max_or_default(int m_max, const MachineConfig& c) {
  if (m_max < 0) return c.max_prog_len;
  if (m_max > c.max_prog_len) throw UserError("--m-max exceeds --max-prog-len");
  return m_max;
}

void emit(const fs::path& path, const std::string& text) {
  write_text(path, text);
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algstat-lab: exact desk-scale algorithmic statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  lab::CommonOptions opts;
  opts.add_to(app);
  std::string calibration_file = ALGSTAT_DEFAULT_CALIBRATION;
  app.add_option("--calibration", calibration_file, "Calibration constants file")->capture_default_str();

  std::string x_arg, y_arg, family_name = "cylinders", eps_arg = "inf", suite = "theorem1";
  std::vector<std::string> csv_inputs, labels;
  int m_arg = 6, m_max = -1, n_arg = 6, k_arg = 2, delta = -1, alpha = -1, theta = -1, cap = 16, prefix_len = 0;
  double eps_real = -1, d_arg = 1.0;
  bool plot = false;

  app.add_subcommand("build-cache", "Build the halting table over the condition universe and save it");
  auto* cx = app.add_subcommand("complexity", "C(x|y)");
  cx->add_option("--x", x_arg, "String x (\"-\" for the empty string)")->required();
  cx->add_option("--y", y_arg, "Condition y (default empty)");
  auto* ct = app.add_subcommand("ct", "CT(y|x), total conditional complexity");
  ct->add_option("--y", y_arg)->required();
  ct->add_option("--x", x_arg)->required();
  auto* omega = app.add_subcommand("omega", "Omega_m and L_m; writes ledger.csv");
  omega->add_option("--m", m_arg)->capture_default_str();
  auto* groups = app.add_subcommand("groups", "Universal groups S_{m,s}; writes groups.csv");
  groups->add_option("--m", m_arg)->capture_default_str();
  auto* prof = app.add_subcommand("profile", "Profile P_x; writes a frontier CSV");
  auto* sprof = app.add_subcommand("strong-profile", "Strong profile P_x^eps");
  auto* rprof = app.add_subcommand("restricted-profile", "Profile over a model family");
  for (auto* sc : {prof, sprof, rprof}) {
    sc->add_option("--x", x_arg)->required();
    sc->add_option("--m-max", m_max, "Complexity scan bound (default L)");
    sc->add_flag("--plot", plot, "Also write an SVG staircase");
  }
  sprof->add_option("--eps", eps_arg, "Strength bound, or inf")->capture_default_str();
  rprof->add_option("--family", family_name, "cylinders | singletons | all-sets")->capture_default_str();
  auto* anti = app.add_subcommand("antistochastic", "Antistochastic string and its cylinder witnesses");
  anti->add_option("--n", n_arg)->capture_default_str();
  anti->add_option("--k", k_arg)->capture_default_str();
  auto* t3 = app.add_subcommand("theorem3", "Cylinder construction x = yz, its model and the group report");
  auto* her = app.add_subcommand("hereditary", "Hereditary pipeline on the cylinder construction");
  for (auto* sc : {t3, her}) {
    sc->add_option("--k", k_arg)->capture_default_str();
    sc->add_option("--delta", delta, "MSS delta (default: calibrated)");
    sc->add_option("--eps", eps_real, "Strength/sufficiency bound (default: calibrated)");
    sc->add_option("--D", d_arg, "MSS log coefficient")->capture_default_str();
  }
  her->add_option("--alpha", alpha, "Normality slack (default from l(x))");
  her->add_option("--theta", theta, "Big-step threshold (default from l(x))");
  her->add_option("--cap", cap)->capture_default_str();
  auto* imp = app.add_subcommand("improve", "Improvement sequence from a prefix-cylinder model of x");
  imp->add_option("--x", x_arg)->required();
  imp->add_option("--prefix-len", prefix_len, "A = strings sharing the first i bits of x")->capture_default_str();
  imp->add_option("--eps", eps_arg)->capture_default_str();
  imp->add_option("--alpha", alpha);
  imp->add_option("--theta", theta);
  imp->add_option("--cap", cap)->capture_default_str();
  auto* ver = app.add_subcommand("verify", "Run a verification suite; exit 0 iff it passes");
  ver->add_option("--suite", suite, "codec | ledger | groups | theorem1 | containment | ct")->capture_default_str();
  ver->add_option("--n", n_arg, "String length bound")->capture_default_str();
  auto* plt = app.add_subcommand("plot", "SVG of frontier CSVs, or of P_x against P_x^eps");
  plt->add_option("--csv", csv_inputs, "Frontier CSV files to overlay");
  plt->add_option("--label", labels, "Legend labels");
  plt->add_option("--x", x_arg);
  plt->add_option("--eps", eps_arg)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const fs::path out(opts.out);
    const MachineConfig& cfg = opts.config;
    auto calibration = [&] {
      Calibration cal = Calibration::load(calibration_file);
      if (cal.config() != cfg) {
        std::cerr << "note: calibration was measured under a different configuration\n";
      }
      return cal;
    };

    if (command == "plot" && !csv_inputs.empty()) {
      std::vector<Profile> profiles;
      for (auto& path : csv_inputs) {
        std::ifstream in(path);
        if (!in) throw UserError("cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        profiles.push_back(parse_frontier_csv(ss.str()));
      }
      if (labels.empty()) labels = csv_inputs;
      emit(out / "plot.svg", plot_profile(profiles, labels));
      return 0;
    }
    if (command == "verify" && suite == "codec") {
      const SuiteResult r = verify_codec(std::min(n_arg, 4), 20);
      std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked << " checks)\n";
      for (auto& f : r.failures) std::cout << "  " << f << "\n";
      return r.passed() ? 0 : 1;
    }

    HaltingTable table = lab::open_table(opts, command == "build-cache");
    const int L = cfg.max_prog_len;

    if (command == "build-cache") {
      const auto path = lab::cache_path(opts);
      std::cout << "programs " << table.program_count() << ", conditions " << table.conditions().size()
                << ", memory " << table.memory_bytes() << " bytes\n";
      if (path) std::cout << "cache " << path->string() << "\n";
      else std::cout << "no cache path (use --cache or ALGSTAT_CACHE_DIR); table discarded\n";
    } else if (command == "complexity") {
      const Bitstring x = Bitstring::parse(x_arg);
      const Bitstring y = Bitstring::parse(y_arg);
      table.ensure(y);
      std::cout << "C(" << x.token() << "|" << y.token() << ") = " << table.cond_complexity(x, y) << "\n";
    } else if (command == "ct") {
      const Bitstring x = Bitstring::parse(x_arg);
      const Bitstring y = Bitstring::parse(y_arg);
      table.ensure(x);
      std::cout << "CT(" << y.token() << "|" << x.token() << ") = " << table.total_cond_complexity(y, x) << "\n";
    } else if (command == "omega") {
      const OmegaLedger ledger = omega_ledger(table, m_max_or_default(m_arg, cfg));
      for (int m = 0; m <= ledger.m_max(); ++m) std::cout << "Omega_" << m << " = " << ledger.omega(m) << "\n";
      emit(out / "ledger.csv", ledger_csv(ledger, cfg));
    } else if (command == "groups") {
      const OmegaLedger ledger = omega_ledger(table, m_max_or_default(m_arg, cfg));
      for (int m = 0; m <= ledger.m_max(); ++m) {
        std::cout << "m=" << m << " Omega=" << ledger.omega(m) << " s=";
        for (int s : omega_decomposition(ledger.omega(m))) std::cout << s << " ";
        std::cout << "\n";
      }
      emit(out / "groups.csv", group_dump_csv(ledger));
    } else if (command == "profile" || command == "strong-profile" || command == "restricted-profile") {
      const Bitstring x = Bitstring::parse(x_arg);
      const int mm = m_max_or_default(m_max, cfg);
      const ModelCatalog catalog(table, mm);
      Profile p;
      FrontierMeta meta{x.token()};
      std::string stem = "profile";
      if (command == "profile") {
        p = profile(catalog, x, mm);
      } else if (command == "strong-profile") {
        table.ensure(x);
        p = strong_profile(table, catalog, x, parse_eps(eps_arg), mm);
        meta.eps = eps_arg;
        stem = "strong_profile";
      } else {
        const ModelFamily fam = family_by_name(family_name);
        p = restricted_profile(table, x, fam, mm);
        meta.family = fam.name();
        stem = "restricted_profile";
      }
      std::cout << command << " " << x.token() << ": " << print_profile(p) << "\n";
      emit(out / (stem + "_" + x.token() + ".csv"), frontier_csv(p, cfg, meta));
      if (plot) emit(out / (stem + "_" + x.token() + ".svg"), plot_profile({p}, {command + " " + x.token()}));
    } else if (command == "antistochastic") {
      const ModelCatalog catalog(table, L);
      const Bitstring x = antistochastic(catalog, n_arg, k_arg);
      const Profile p = profile(catalog, x, L);
      std::cout << "x = " << x.token() << "\nprofile " << print_profile(p) << "\nL-shape closeness "
                << closeness(p, Profile::l_shape(k_arg, n_arg)) << "\n";
      for (auto& w : antistochastic_witnesses(table, x, k_arg)) {
        std::cout << "witness |A|=" << w.model.cardinality() << " C=" << w.model.complexity << " CT=" << w.strength
                  << "\n";
      }
      emit(out / ("antistochastic_" + x.token() + ".csv"), frontier_csv(p, cfg, {x.token()}));
    } else if (command == "theorem3" || command == "hereditary") {
      const ModelCatalog catalog(table, L);
      const OmegaLedger ledger = omega_ledger(table, L);
      if (delta < 0 || eps_real < 0) {
        const Calibration cal = calibration();
        if (delta < 0) delta = cal.get_int("theorem3_delta");
        if (eps_real < 0) eps_real = cal.get_int("theorem3_eps");
      }
      const Theorem3Bundle b = theorem3_string(table, catalog, ledger, k_arg, delta, eps_real, d_arg);
      std::cout << "y = " << b.y.token() << "  z = " << b.z.token() << "  x = " << b.x.token()
                << "\nC(z|y) = " << b.c_z_given_y << "  C(x) = " << table.complexity(b.x) << "\nA: |A| = "
                << b.model.cardinality() << "  C(A) = " << b.model.complexity << "  CT(A|x) = " << b.strength
                << "\nis_mss(delta=" << delta << ", eps=" << eps_real << ", D=" << d_arg << ") = "
                << (b.mss.is_mss ? "true" : "false") << "  deficiency = " << b.mss.sufficiency.deficiency
                << "\nstrong sufficient groups (single enumerator): " << b.groups.size() << "\n";
      const Profile px = profile(catalog, b.x, L);
      const Profile ps = strong_profile(table, catalog, b.x, Complexity(static_cast<int>(eps_real)), L);
      if (command == "theorem3") {
        std::string report = "m,s,complexity,strength,deficiency\n";
        for (auto& g : b.groups) {
          report += std::to_string(g.group.m) + "," + std::to_string(g.group.s) + "," + g.model.complexity.str() +
                    "," + g.strength.str() + "," + std::to_string(g.deficiency) + "\n";
        }
        Calibration constants(cfg);
        constants.set("k", k_arg);
        constants.set("delta", delta);
        constants.set_real("eps", eps_real);
        constants.set_real("D", d_arg);
        constants.set("x", b.x.str());
        constants.set("c_z_given_y", b.c_z_given_y.str());
        constants.set("is_mss", b.mss.is_mss ? 1 : 0);
        for (auto& p : write_bundle(out / "theorem3", cfg, constants,
                                    {{"groups.csv", report},
                                     {"profile_x.csv", frontier_csv(px, cfg, {b.x.token()})},
                                     {"strong_profile_x.csv", frontier_csv(ps, cfg, {b.x.token(), std::to_string(static_cast<int>(eps_real))})},
                                     {"profiles.svg", plot_profile({px, ps}, {"P_x", "P_x^eps"}, "x = " + b.x.str())}})) {
          std::cout << "wrote " << p.string() << "\n";
        }
      } else {
        const int n = static_cast<int>(b.x.size());
        if (alpha < 0) alpha = default_alpha(n);
        if (theta < 0) theta = default_theta(n);
        const HereditaryReport rep = hereditary_check(table, ledger, catalog, b.x, b.model,
                                                      Complexity(static_cast<int>(eps_real)), delta, d_arg, alpha,
                                                      theta, cap);
        std::cout << "preconditions: mss=" << rep.mss << " strong=" << rep.strong
                  << " normality_gap(x)=" << rep.normality_gap_x << "\n";
        std::string csv = "a,b,failed_stage,witness_slack,a1_cap_m1,h_size,h_bound,h_bound_holds,h_bound_floor,"
                          "h_bound_floor_holds,a_in_d,log_d_le_log_b\n";
        for (auto& pt : rep.points) {
          std::cout << "point (" << pt.point.complexity << "," << pt.point.log_card << "): "
                    << (pt.failed_stage.empty() ? "complete" : "failed at " + pt.failed_stage) << "  |H|=" << pt.h_size
                    << " bound=" << pt.h_bound << " floor-bound=" << pt.h_bound_floor << " [A] in D=" << pt.a_in_d
                    << "\n";
          csv += std::to_string(pt.point.complexity) + "," + std::to_string(pt.point.log_card) + "," +
                 (pt.failed_stage.empty() ? "-" : pt.failed_stage) + "," + std::to_string(pt.witness_slack) + "," +
                 std::to_string(pt.a1_cap_m1) + "," + std::to_string(pt.h_size) + "," + std::to_string(pt.h_bound) +
                 "," + std::to_string(pt.h_bound_holds) + "," + std::to_string(pt.h_bound_floor) + "," +
                 std::to_string(pt.h_bound_floor_holds) + "," + std::to_string(pt.a_in_d) + "," +
                 std::to_string(pt.log_d_le_log_b) + "\n";
        }
        std::cout << "normality_gap([A_1]) = " << rep.gap_a1.gap << "  normality_gap([A]) = " << rep.gap_a.gap << "\n";
        Calibration constants(cfg);
        constants.set("normality_gap_a1", rep.gap_a1.gap.str());
        constants.set("normality_gap_a", rep.gap_a.gap.str());
        constants.set("alpha", alpha);
        constants.set("theta", theta);
        for (auto& p : write_bundle(out / "hereditary", cfg, constants, {{"points.csv", csv}})) {
          std::cout << "wrote " << p.string() << "\n";
        }
      }
    } else if (command == "improve") {
      const Bitstring x = Bitstring::parse(x_arg);
      if (prefix_len < 0 || prefix_len > static_cast<int>(x.size())) throw UserError("--prefix-len out of range");
      const ModelCatalog catalog(table, L);
      const OmegaLedger ledger = omega_ledger(table, L);
      const int n = static_cast<int>(x.size());
      if (alpha < 0) alpha = default_alpha(n);
      if (theta < 0) theta = default_theta(n);
      const ModelSet a = make_model(table, cylinder_set(x.prefix(static_cast<std::size_t>(prefix_len)), n - prefix_len));
      const ImprovementTrace t = improve_sequence(table, ledger, catalog, x, a, parse_eps(eps_arg), alpha, theta, cap);
      std::cout << trace_csv(t) << "stop: " << to_string(t.stop) << "  big steps: " << t.big_steps << "\n";
      if (t.h) std::cout << "H: |H|=" << t.h->cardinality() << " C(H)=" << t.h->complexity
                         << " C(H|Omega)=" << t.c_h_given_omega << "\n";
      emit(out / ("trace_" + x.token() + ".csv"), trace_csv(t));
    } else if (command == "verify") {
      SuiteResult r;
      if (suite == "ledger") {
        r = verify_ledger(table, omega_ledger(table, L));
      } else if (suite == "groups") {
        r = verify_groups(table, omega_ledger(table, L));
      } else if (suite == "theorem1") {
        r = verify_theorem1(table, ModelCatalog(table, L), calibration(), std::min(n_arg, cfg.cond_universe));
      } else if (suite == "containment") {
        r = verify_containment(table, ModelCatalog(table, L), calibration(), std::min(n_arg, cfg.cond_universe));
      } else if (suite == "ct") {
        r = verify_ct(table, std::min(n_arg, cfg.cond_universe));
      } else {
        throw UserError("unknown suite '" + suite + "'");
      }
      std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked << " checks, "
                << r.failure_count << " failures)\n";
      for (auto& f : r.failures) std::cout << "  " << f << "\n";
      return r.passed() ? 0 : 1;
    } else if (command == "plot") {
      if (x_arg.empty()) throw UserError("plot needs --csv files or --x");
      const Bitstring x = Bitstring::parse(x_arg);
      table.ensure(x);
      const ModelCatalog catalog(table, L);
      const Profile px = profile(catalog, x, L);
      const Profile ps = strong_profile(table, catalog, x, parse_eps(eps_arg), L);
      emit(out / ("plot_" + x.token() + ".svg"),
           plot_profile({px, ps}, {"P_x", "P_x^" + eps_arg}, "x = " + x.token()));
    }
    return 0;
  } catch (const UserError& e) {
    std::cerr << "algstat-lab " << command << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "algstat-lab " << command << ": bad argument: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "algstat-lab " << command << ": invariant violated: " << e.what() << "\n";
    return 1;
  }
}

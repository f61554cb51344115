#include "algstat/calibration.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "algstat/constructions.hpp"
#include "algstat/errors.hpp"
#include "algstat/family.hpp"
#include "algstat/hereditary.hpp"

namespace algstat {

Calibration::Calibration(const MachineConfig& config) {
  set("machine_id", config.machine_id);
  set("max_prog_len", config.max_prog_len);
  set("step_budget", config.step_budget);
  set("cond_universe", config.cond_universe);
}

Calibration Calibration::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw UserError("calibration: empty file");
  std::istringstream head(line);
  std::string magic;
  int version = 0;
  head >> magic >> version;
  if (magic != "algstat-calibration") throw UserError("calibration: not a calibration file");
  if (version != kCalibrationVersion) throw UserError("calibration: unsupported version " + std::to_string(version));
  Calibration c;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw UserError("calibration: malformed line '" + line + "'");
    c.values_[line.substr(0, sp)] = line.substr(sp + 1);
  }
  return c;
}

Calibration Calibration::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UserError("calibration: cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Calibration::str() const {
  std::string out = "algstat-calibration " + std::to_string(kCalibrationVersion) + "\n";
  for (const auto& [k, v] : values_) out += k + " " + v + "\n";
  return out;
}

void Calibration::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw UserError("calibration: cannot write " + path.string());
  out << str();
}

const std::string& Calibration::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw UserError("calibration: missing key '" + key + "'");
  return it->second;
}

int Calibration::get_int(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t used = 0;
    const int out = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw UserError("calibration: key '" + key + "' is not an integer");
  }
}

double Calibration::get_real(const std::string& key) const {
  const std::string& v = get(key);
  if (v == "inf") return std::numeric_limits<double>::infinity();
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw UserError("calibration: key '" + key + "' is not a number");
  }
}

void Calibration::set_real(const std::string& key, double value) {
  if (std::isinf(value)) {
    set(key, std::string("inf"));
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  set(key, std::string(buf));
}

MachineConfig Calibration::config() const {
  MachineConfig c;
  c.machine_id = get("machine_id");
  c.max_prog_len = get_int("max_prog_len");
  c.step_budget = get_int("step_budget");
  c.cond_universe = get_int("cond_universe");
  return c;
}

namespace {

int finite_or(Complexity c, int fallback) { return c.finite() ? c.value() : fallback; }

}  // namespace

Calibration measure_calibration(HaltingTable& table) {
  const MachineConfig& cfg = table.config();
  table.record(universe_conditions(cfg));
  Calibration cal(cfg);
  const int L = cfg.max_prog_len;
  const int N = cfg.cond_universe;
  const ModelCatalog catalog(table, L);
  const OmegaLedger ledger = omega_ledger(table, L);

  // Literal overhead over every string a literal can reach.
  int c_embed = 0;
  for (auto& x : Bitstring::all_up_to(static_cast<std::size_t>(std::min(L, 12)))) {
    const Complexity c = table.complexity(x);
    if (c.finite()) c_embed = std::max(c_embed, c.value() - static_cast<int>(x.size()));
  }
  cal.set("c_embed", c_embed);

  // Copy constant and profile laws over the condition universe.
  int c_copy = 0, c_slice = 0, c_two_part = 0, eps_cyl = 0, unresolved = 0;
  const ModelFamily cylinders = cylinder_family();
  for (auto& x : Bitstring::all_up_to(static_cast<std::size_t>(N))) {
    c_copy = std::max(c_copy, finite_or(table.total_cond_complexity(x, x), 0));
    const auto slack = profile_law_slack(table, profile(catalog, x, L), x);
    c_slice = std::max(c_slice, slack.slice);
    c_two_part = std::max(c_two_part, slack.two_part);
    unresolved += slack.unresolved;
    for (auto& members : cylinders.enumerate(static_cast<int>(x.size()))) {
      if (!std::binary_search(members.begin(), members.end(), x)) continue;
      const Bitstring code = encode_set(members);
      if (table.complexity(code).is_infinite()) continue;
      eps_cyl = std::max(eps_cyl, finite_or(table.total_cond_complexity(code, x), 0));
    }
  }
  cal.set("c_copy", c_copy);
  cal.set("c_slice", c_slice);
  cal.set("c_two_part", c_two_part);
  cal.set("eps_cyl", eps_cyl);
  cal.set("profile_unresolved", unresolved);

  // Group complexities.
  int c_group = std::numeric_limits<int>::min();
  for (int m = 0; m <= L; ++m) {
    for (const auto& g : universal_groups(ledger, m).groups) {
      const ModelSet s = group_model(table, ledger, g);
      if (s.complexity.finite()) c_group = std::max(c_group, s.complexity.value() - (m - g.s));
    }
  }
  cal.set("c_group", c_group);

  // Symmetry of information over strings of length <= 4.
  int sym_gap = 0, sym_infinite = 0;
  const int sym_len = std::min(4, N);
  for (auto& x : Bitstring::all_up_to(static_cast<std::size_t>(sym_len))) {
    for (auto& y : Bitstring::all_up_to(static_cast<std::size_t>(sym_len))) {
      const auto r = symmetry_report(table, x, y);
      for (Complexity g : {r.gap_x_side, r.gap_y_side}) {
        if (g.finite()) {
          sym_gap = std::max(sym_gap, g.value());
        } else {
          ++sym_infinite;
        }
      }
    }
  }
  cal.set("symmetry_max_gap", sym_gap);
  cal.set("symmetry_infinite_gaps", sym_infinite);

  cal.set("lemma8_slack", lemma8_slack(table, ledger));

  // Antistochastic strings.
  for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 4}}) {
    const std::string tag = "antistochastic_" + std::to_string(n) + "_" + std::to_string(k);
    const Bitstring x = antistochastic(catalog, n, k);
    const Profile px = profile(catalog, x, L);
    cal.set(tag + "_x", x.str());
    cal.set(tag + "_eps", closeness(px, Profile::l_shape(k, n)).str());
    int w_eps = 0;
    std::vector<ProfilePoint> wpts;
    for (auto& w : antistochastic_witnesses(table, x, k)) {
      if (w.model.complexity.is_infinite() || w.strength.is_infinite()) continue;
      w_eps = std::max(w_eps, w.strength.value());
      wpts.push_back({w.model.complexity.value(), w.model.log_card()});
    }
    cal.set(tag + "_witness_eps", w_eps);
    cal.set(tag + "_cylinder_overhead", dilation_distance(px, Profile::from_points(wpts)).str());
  }

  // Cylinder construction at k = 2: eps covers both strength and deficiency of A,
  // delta is the least value making A an MSS at that eps with D = 1.
  if (N >= 4) {
    const ModelCatalog& cat = catalog;
    Theorem3Bundle probe = theorem3_string(table, cat, ledger, 2, 0, 0, 1);
    const double def = deficiency(table, probe.x, probe.model);
    const int eps = std::max(finite_or(probe.strength, 0), static_cast<int>(std::ceil(def)));
    int delta = -1;
    for (int d = 0; d <= probe.model.complexity.value(); ++d) {
      if (is_mss(table, cat, probe.x, probe.model, d, eps, 1.0, L).is_mss) {
        delta = d;
        break;
      }
    }
    cal.set("theorem3_eps", eps);
    cal.set("theorem3_delta", delta);
    cal.set("theorem3_x", probe.x.str());
    cal.set_real("example1_deficiency", def);
    const Theorem4Witness w4 = verify_theorem4(table, ledger, probe.x, probe.model);
    cal.set_real("example1_theorem4_delta_gap", w4.best >= 0 ? w4.delta_gap : std::numeric_limits<double>::infinity());
    const TranslationReport tr = profile_translation_check(table, cat, probe.x, probe.model, eps);
    cal.set("theorem3_translation_eps", tr.closeness.str());
  }
  return cal;
}

}  // namespace algstat

#include "algstat/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "algstat/errors.hpp"

namespace algstat {

namespace {

std::string config_line(const MachineConfig& c) {
  return "machine_id=" + c.machine_id + " L=" + std::to_string(c.max_prog_len) + " T=" +
         std::to_string(c.step_budget) + " N=" + std::to_string(c.cond_universe);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string frontier_csv(const Profile& p, const MachineConfig& config, const FrontierMeta& meta) {
  std::string out = "# algstat frontier\n# " + config_line(config) + "\n# x=" + meta.subject + " eps=" + meta.eps +
                    " family=" + meta.family + "\nm,l_min\n";
  for (const auto& f : p.frontier()) out += std::to_string(f.complexity) + "," + std::to_string(f.log_card) + "\n";
  return out;
}

Profile parse_frontier_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ProfilePoint> pts;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "m,l_min") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw UserError("frontier csv: malformed row '" + line + "'");
    pts.push_back({std::stoi(line.substr(0, comma)), std::stoi(line.substr(comma + 1))});
  }
  return Profile::from_points(std::move(pts));
}

std::string ledger_csv(const OmegaLedger& ledger, const MachineConfig& config) {
  std::string out = "# algstat ledger\n# " + config_line(config) + " m_max=" + std::to_string(ledger.m_max()) + "\n";
  for (int m = 0; m <= ledger.m_max(); ++m) {
    out += "# omega " + std::to_string(m) + " " + std::to_string(ledger.omega(m)) + "\n";
  }
  out += "index,string,complexity,stage\n";
  std::size_t i = 0;
  for (const auto& e : ledger.order()) {
    out += std::to_string(i++) + "," + e.string.token() + "," + std::to_string(e.complexity) + "," +
           std::to_string(e.stage) + "\n";
  }
  return out;
}

std::string group_dump_csv(const OmegaLedger& ledger) {
  std::string out = "m,s,first,count\n";
  for (int m = 0; m <= ledger.m_max(); ++m) {
    for (const auto& g : universal_groups(ledger, m).groups) {
      out += std::to_string(m) + "," + std::to_string(g.s) + "," + std::to_string(g.first) + "," +
             std::to_string(g.count) + "\n";
    }
  }
  return out;
}

std::string trace_csv(const ImprovementTrace& trace) {
  std::string out = "step,kind,index,complexity,log_card,deficiency,strength\n";
  std::size_t i = 0;
  for (const auto& s : trace.steps) {
    char def[32];
    std::snprintf(def, sizeof def, "%.6f", s.deficiency);
    out += std::to_string(i++) + "," + std::string(1, s.kind) + "," + std::to_string(s.index) + "," +
           s.model.complexity.str() + "," + std::to_string(s.model.log_card()) + "," + def + "," + s.strength.str() +
           "\n";
  }
  return out;
}

std::string plot_profile(const std::vector<Profile>& profiles, const std::vector<std::string>& labels,
                         const std::string& title) {
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  constexpr double kW = 480, kH = 360, kLeft = 50, kRight = 150, kTop = 30, kBottom = 45;
  int max_m = 1, max_l = 1;
  for (const auto& p : profiles) {
    for (const auto& f : p.frontier()) {
      max_m = std::max(max_m, f.complexity + 1);
      max_l = std::max(max_l, f.log_card + 1);
    }
  }
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto X = [&](double m) { return kLeft + pw * m / max_m; };
  auto Y = [&](double l) { return kTop + ph - ph * l / max_l; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW
    << " " << kH << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) s << "<text x=\"" << fmt(kW / 2) << "\" y=\"18\" text-anchor=\"middle\">" << xml_escape(title) << "</text>\n";
  s << "<g stroke=\"black\" fill=\"none\">\n";
  s << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(max_m)) << "\" y2=\"" << fmt(Y(0)) << "\"/>\n";
  s << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(0)) << "\" y2=\"" << fmt(Y(max_l)) << "\"/>\n";
  s << "</g>\n";
  for (int m = 0; m <= max_m; ++m) {
    s << "<text x=\"" << fmt(X(m)) << "\" y=\"" << fmt(Y(0) + 14) << "\" text-anchor=\"middle\">" << m << "</text>\n";
  }
  for (int l = 0; l <= max_l; ++l) {
    s << "<text x=\"" << fmt(X(0) - 6) << "\" y=\"" << fmt(Y(l) + 4) << "\" text-anchor=\"end\">" << l << "</text>\n";
  }
  s << "<text x=\"" << fmt(X(max_m / 2.0)) << "\" y=\"" << fmt(kH - 8) << "\" text-anchor=\"middle\">complexity</text>\n";
  s << "<text x=\"14\" y=\"" << fmt(Y(max_l / 2.0)) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
    << fmt(Y(max_l / 2.0)) << ")\">log-cardinality</text>\n";

  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const char* color = kColors[i % (sizeof kColors / sizeof *kColors)];
    const auto& fr = profiles[i].frontier();
    if (!fr.empty()) {
      // Staircase: from the top of the first column down each step, then out
      // along the bottom edge.
      std::string d = "M" + fmt(X(fr[0].complexity)) + "," + fmt(Y(max_l));
      for (std::size_t j = 0; j < fr.size(); ++j) {
        d += " L" + fmt(X(fr[j].complexity)) + "," + fmt(Y(fr[j].log_card));
        const double next = j + 1 < fr.size() ? fr[j + 1].complexity : max_m;
        d += " L" + fmt(X(next)) + "," + fmt(Y(fr[j].log_card));
      }
      s << "<path d=\"" << d << "\" stroke=\"" << color << "\" stroke-width=\"2\" fill=\"none\"/>\n";
    }
    const double ly = kTop + 16.0 * static_cast<double>(i);
    s << "<line x1=\"" << fmt(kW - kRight + 15) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(kW - kRight + 35)
      << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    const std::string label = i < labels.size() ? labels[i] : "profile " + std::to_string(i + 1);
    s << "<text x=\"" << fmt(kW - kRight + 40) << "\" y=\"" << fmt(ly + 4) << "\">" << xml_escape(label) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError("cannot write " + path.string());
  out << text;
}

std::vector<std::filesystem::path> write_bundle(const std::filesystem::path& dir, const MachineConfig& config,
                                                const Calibration& constants,
                                                const std::vector<std::pair<std::string, std::string>>& artifacts) {
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::string& name, const std::string& text) {
    write_text(dir / name, text);
    written.push_back(dir / name);
  };
  put("config.txt", "machine_id " + config.machine_id + "\nmax_prog_len " + std::to_string(config.max_prog_len) +
                        "\nstep_budget " + std::to_string(config.step_budget) + "\ncond_universe " +
                        std::to_string(config.cond_universe) + "\n");
  put("constants.txt", constants.str());
  for (const auto& [name, text] : artifacts) put(name, text);
  return written;
}

}  // namespace algstat

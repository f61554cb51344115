#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "algstat/calibration.hpp"
#include "algstat/improvement.hpp"
#include "algstat/omega.hpp"
#include "algstat/profile.hpp"
#include "algstat/universal.hpp"

namespace algstat {

/// Extra header fields written with a frontier CSV.
struct FrontierMeta {
  std::string subject;               ///< the string x, as a token
  std::string eps = "inf";
  std::string family = "all";
};

/// "# key=value" header lines, then "m,l_min" and one row per frontier point.
std::string frontier_csv(const Profile& p, const MachineConfig& config, const FrontierMeta& meta);
/// Parses the rows of frontier_csv back (header lines are skipped).
Profile parse_frontier_csv(const std::string& text);

/// "index,string,complexity,stage" in enumeration order, plus an
/// "# omega" header block with m,Omega_m.
std::string ledger_csv(const OmegaLedger& ledger, const MachineConfig& config);

/// "m,s,first,count" for every group of every m <= ledger.m_max().
std::string group_dump_csv(const OmegaLedger& ledger);

/// "step,kind,index,complexity,log_card,deficiency,strength" for a trace.
std::string trace_csv(const ImprovementTrace& trace);

/// Staircase rendering of one or more frontiers as a self-contained SVG:
/// complexity on the horizontal axis, log-cardinality on the vertical axis.
/// Output bytes depend only on the arguments.
std::string plot_profile(const std::vector<Profile>& profiles, const std::vector<std::string>& labels,
                         const std::string& title = "");

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Experiment bundle: config.txt, constants.txt and each named artifact,
/// written under `dir`. Returns the written paths in order.
std::vector<std::filesystem::path> write_bundle(const std::filesystem::path& dir, const MachineConfig& config,
                                                const Calibration& constants,
                                                const std::vector<std::pair<std::string, std::string>>& artifacts);

}  // namespace algstat

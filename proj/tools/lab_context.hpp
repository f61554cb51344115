#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "algstat/halting_table.hpp"

namespace lab {

/// Flags shared by every subcommand.
struct CommonOptions {
  algstat::MachineConfig config;
  std::string cache;
  std::string out = ".";
  bool seedless = false;
  unsigned workers = 0;

  void add_to(CLI::App& app);
  algstat::BuildOptions build_options() const { return {workers, std::size_t{6} << 30}; }
};

/// Cache location: --cache, else $ALGSTAT_CACHE_DIR/<config>.cache, else none.
std::optional<std::filesystem::path> cache_path(const CommonOptions& opts);

/// Loads the cache when present (refusing mismatches), otherwise builds the
/// table over the condition universe; saves it when a cache path is known
/// and `save` is set.
algstat::HaltingTable open_table(const CommonOptions& opts, bool save);

}  // namespace lab

#include "lab_context.hpp"

#include <cstdlib>
#include <iostream>

#include "algstat/cache_io.hpp"

namespace lab {

void CommonOptions::add_to(CLI::App& app) {
  app.add_option("--max-prog-len", config.max_prog_len, "Longest enumerated program (L)")->capture_default_str();
  app.add_option("--steps", config.step_budget, "Step budget per run (T)")->capture_default_str();
  app.add_option("--cond-universe", config.cond_universe, "Totality universe bound (N)")->capture_default_str();
  app.add_option("--cache", cache, "Halting-table cache file");
  app.add_option("--out", out, "Directory for artifacts")->capture_default_str();
  app.add_flag("--seedless", seedless, "Accepted for compatibility; every run is deterministic");
  app.add_option("--workers", workers, "Worker threads for table builds (0 = all cores)")->capture_default_str();
}

std::optional<std::filesystem::path> cache_path(const CommonOptions& opts) {
  if (!opts.cache.empty()) return std::filesystem::path(opts.cache);
  if (const char* dir = std::getenv("ALGSTAT_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    const auto& c = opts.config;
    return std::filesystem::path(dir) / (c.machine_id + "-L" + std::to_string(c.max_prog_len) + "-T" +
                                         std::to_string(c.step_budget) + "-N" + std::to_string(c.cond_universe) +
                                         ".cache");
  }
  return std::nullopt;
}

algstat::HaltingTable open_table(const CommonOptions& opts, bool save) {
  opts.config.validate();
  const auto path = cache_path(opts);
  if (path && std::filesystem::exists(*path)) {
    auto table = algstat::load_cache(*path, opts.config, opts.build_options());
    table.record(algstat::universe_conditions(opts.config));
    return table;
  }
  auto table = algstat::build_table(opts.config, algstat::universe_conditions(opts.config), opts.build_options());
  if (path && save) {
    if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
    algstat::save_cache(table, *path);
  }
  return table;
}

}  // namespace lab

#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "algstat/halting_table.hpp"

namespace algstat {

inline constexpr int kCalibrationVersion = 1;

/// Versioned key-value file of measured machine constants. Line 1 is
/// "algstat-calibration <version>"; every other line is "<key> <value>".
/// Lines starting with '#' are comments. Keys are written sorted.
class Calibration {
 public:
  Calibration() = default;
  explicit Calibration(const MachineConfig& config);

  static Calibration load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
  std::string str() const;
  static Calibration parse(const std::string& text);

  bool has(const std::string& key) const { return values_.contains(key); }
  /// Throws UserError when the key is missing or malformed.
  int get_int(const std::string& key) const;
  double get_real(const std::string& key) const;
  const std::string& get(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set(const std::string& key, int value) { values_[key] = std::to_string(value); }
  void set_real(const std::string& key, double value);

  /// The configuration the constants were measured under.
  MachineConfig config() const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Runs every calibration oracle on `table` (which gains recorded
/// conditions) and returns the measured constants. Keys are documented in
/// docs/machine.md.
Calibration measure_calibration(HaltingTable& table);

}  // namespace algstat

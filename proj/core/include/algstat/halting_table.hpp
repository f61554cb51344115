#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "algstat/bitstring.hpp"
#include "algstat/complexity.hpp"
#include "algstat/machine.hpp"

namespace algstat {

struct BuildOptions {
  unsigned workers = 0;  ///< 0 selects std::thread::hardware_concurrency()
  std::size_t memory_ceiling_bytes = std::size_t{6} << 30;
};

/// A string's first observation in the dovetailed enumeration on one
/// condition. Stage t runs every program of length <= min(t, L) for t steps,
/// so a program of length l halting after s steps is seen at stage
/// max(l, s, 1); ties break by program (length, lex) order.
struct Discovery {
  Bitstring output;
  int stage = 0;
  ProgramIndex program = 0;
};

/// Interned outputs, bit-packed in one arena.
class OutputPool {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFU;

  std::uint32_t intern(const Bitstring& s);
  std::uint32_t find(const Bitstring& s) const;
  Bitstring get(std::uint32_t id) const;
  std::size_t size_of(std::uint32_t id) const { return entries_[id].bits; }
  std::size_t count() const { return entries_.size(); }
  std::size_t memory_bytes() const;

 private:
  struct Entry {
    std::uint64_t offset;
    std::uint32_t bits;
    std::uint32_t hash;
  };
  bool equals(std::uint32_t id, const Bitstring& s) const;
  void rehash(std::size_t slots);

  std::vector<std::uint8_t> arena_;
  std::vector<Entry> entries_;
  std::vector<std::uint32_t> slots_;
};

/// Memoized outcomes of every program of length <= L on each recorded
/// condition. All complexity values in the library are read from here.
///
/// Storage exploits the fact that a run which never reads its condition has
/// the same outcome under every condition: those outcomes are stored once
/// (from the run on the empty condition) and only condition-reading programs
/// get per-condition records. Queries are const and safe to run
/// concurrently; record() mutates and must not overlap with queries.
class HaltingTable {
 public:
  explicit HaltingTable(MachineConfig config, BuildOptions options = {});

  const MachineConfig& config() const { return config_; }
  std::uint64_t program_count() const { return base_out_.size(); }

  /// Adds records for any conditions not yet present. Duplicates are ignored;
  /// the result does not depend on the order of `conditions`.
  void record(std::span<const Bitstring> conditions);
  void ensure(const Bitstring& condition) { record(std::span<const Bitstring>(&condition, 1)); }

  bool has_condition(const Bitstring& condition) const { return records_.contains(condition); }
  std::vector<Bitstring> conditions() const;

  /// Throws UnrecordedCondition when `condition` has no record.
  ExecutionOutcome outcome(ProgramIndex program, const Bitstring& condition) const;
  bool reads_condition(ProgramIndex program) const { return reads_[program] != 0; }

  Complexity cond_complexity(const Bitstring& x, const Bitstring& y) const;
  Complexity complexity(const Bitstring& x) const { return cond_complexity(x, Bitstring{}); }
  std::optional<ProgramIndex> shortest_program(const Bitstring& x, const Bitstring& y) const;

  /// Requires every condition of length <= N to be recorded (totality_known()).
  Complexity total_cond_complexity(const Bitstring& y, const Bitstring& x) const;
  std::optional<ProgramIndex> shortest_total_program(const Bitstring& y, const Bitstring& x) const;

  bool totality_known() const { return totality_known_; }
  /// Halts within T on every condition of length <= N.
  bool is_total(ProgramIndex program) const;

  /// Distinct outputs in dovetailing discovery order.
  std::vector<Discovery> discovery_log(const Bitstring& condition) const;

  struct OutputEntry {
    Bitstring output;
    Complexity complexity;
  };
  /// Distinct halting outputs on `condition` whose complexity is <= max_len,
  /// sorted by (complexity, output).
  std::vector<OutputEntry> outputs(const Bitstring& condition, int max_len) const;

  std::size_t memory_bytes() const;

 private:
  friend class CacheCodec;

  struct Record {
    std::vector<std::uint32_t> out;    // per dependent program; kNone = exhausted
    std::vector<std::uint16_t> steps;  // per dependent program
    std::unordered_map<std::uint32_t, std::uint32_t> first;        // output -> dependent rank
    std::unordered_map<std::uint32_t, std::uint32_t> first_total;  // output -> dependent rank
  };

  struct Tag {};
  HaltingTable(MachineConfig config, BuildOptions options, Tag);  // empty shell for the cache loader

  void build_base();
  void finish_base();
  Record build_record(const Bitstring& condition);
  void index_record(Record& rec) const;
  void maybe_compute_totality();
  void index_totals(Record& rec) const;
  const Record& record_for(const Bitstring& condition) const;
  unsigned worker_count() const;

  MachineConfig config_;
  BuildOptions options_;
  OutputPool pool_;

  // Outcomes on the empty condition, for every program.
  std::vector<std::uint32_t> base_out_;
  std::vector<std::uint16_t> base_steps_;
  std::vector<std::uint8_t> reads_;
  std::vector<ProgramIndex> dependents_;  // programs with reads_ set, ascending
  std::vector<std::uint32_t> dep_rank_;   // program -> rank in dependents_, or kNone
  std::unordered_map<std::uint32_t, ProgramIndex> first_indep_;  // output -> first non-reading halting program

  std::map<Bitstring, Record> records_;
  bool totality_known_ = false;
  std::vector<std::uint8_t> dep_total_;  // per dependent rank
};

HaltingTable build_table(const MachineConfig& config, std::span<const Bitstring> conditions, BuildOptions options = {});

/// Every string of length <= N plus the empty condition, which is what the
/// lab records by default.
std::vector<Bitstring> universe_conditions(const MachineConfig& config);

inline Complexity cond_complexity(const HaltingTable& t, const Bitstring& x, const Bitstring& y) {
  return t.cond_complexity(x, y);
}
inline Complexity complexity(const HaltingTable& t, const Bitstring& x) { return t.complexity(x); }
inline Complexity total_cond_complexity(const HaltingTable& t, const Bitstring& y, const Bitstring& x) {
  return t.total_cond_complexity(y, x);
}

}  // namespace algstat

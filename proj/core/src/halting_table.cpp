#include "algstat/halting_table.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "algstat/errors.hpp"

namespace algstat {

// ---------------------------------------------------------------- OutputPool

namespace {

std::uint32_t hash32(const Bitstring& s) {
  const std::size_t h = BitstringHash{}(s);
  return static_cast<std::uint32_t>(h ^ (h >> 32));
}

}  // namespace

bool OutputPool::equals(std::uint32_t id, const Bitstring& s) const {
  const Entry& e = entries_[id];
  if (e.bits != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool bit = (arena_[e.offset + i / 8] >> (7 - i % 8)) & 1U;
    if (bit != s[i]) return false;
  }
  return true;
}

void OutputPool::rehash(std::size_t slots) {
  slots_.assign(slots, kNone);
  for (std::uint32_t id = 0; id < entries_.size(); ++id) {
    std::size_t at = entries_[id].hash & (slots - 1);
    while (slots_[at] != kNone) at = (at + 1) & (slots - 1);
    slots_[at] = id;
  }
}

std::uint32_t OutputPool::find(const Bitstring& s) const {
  if (slots_.empty()) return kNone;
  const std::uint32_t h = hash32(s);
  std::size_t at = h & (slots_.size() - 1);
  while (slots_[at] != kNone) {
    const std::uint32_t id = slots_[at];
    if (entries_[id].hash == h && equals(id, s)) return id;
    at = (at + 1) & (slots_.size() - 1);
  }
  return kNone;
}

std::uint32_t OutputPool::intern(const Bitstring& s) {
  if (const auto id = find(s); id != kNone) return id;
  if ((entries_.size() + 1) * 2 > slots_.size()) rehash(std::max<std::size_t>(1024, slots_.size() * 2));
  const auto id = static_cast<std::uint32_t>(entries_.size());
  const std::uint32_t h = hash32(s);
  entries_.push_back({arena_.size(), static_cast<std::uint32_t>(s.size()), h});
  const std::size_t bytes = (s.size() + 7) / 8;
  const std::size_t base = arena_.size();
  arena_.resize(base + bytes, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) arena_[base + i / 8] |= static_cast<std::uint8_t>(1U << (7 - i % 8));
  }
  std::size_t at = h & (slots_.size() - 1);
  while (slots_[at] != kNone) at = (at + 1) & (slots_.size() - 1);
  slots_[at] = id;
  return id;
}

Bitstring OutputPool::get(std::uint32_t id) const {
  const Entry& e = entries_[id];
  Bitstring out;
  out.reserve(e.bits);
  for (std::size_t i = 0; i < e.bits; ++i) out.push_back((arena_[e.offset + i / 8] >> (7 - i % 8)) & 1U);
  return out;
}

std::size_t OutputPool::memory_bytes() const {
  return arena_.capacity() + entries_.capacity() * sizeof(Entry) + slots_.capacity() * sizeof(std::uint32_t);
}

// -------------------------------------------------------------- HaltingTable

namespace {

constexpr std::uint32_t kNone = OutputPool::kNone;

// Runs fn(i) for i in [0, n) on `workers` threads over contiguous blocks.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2048) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

}  // namespace

HaltingTable::HaltingTable(MachineConfig config, BuildOptions options, Tag)
    : config_(std::move(config)), options_(options) {
  config_.validate();
}

HaltingTable::HaltingTable(MachineConfig config, BuildOptions options)
    : HaltingTable(std::move(config), options, Tag{}) {
  const std::uint64_t programs = algstat::program_count(config_.max_prog_len);
  const std::uint64_t projected = programs * (sizeof(std::uint32_t) + sizeof(std::uint16_t) + 2 * sizeof(std::uint32_t));
  if (projected > options_.memory_ceiling_bytes) {
    throw ResourceLimit("build_table: " + std::to_string(programs) +
                        " programs exceed the memory ceiling; lower --max-prog-len");
  }
  build_base();
}

unsigned HaltingTable::worker_count() const {
  if (options_.workers != 0) return options_.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

void HaltingTable::build_base() {
  const std::size_t n = static_cast<std::size_t>(algstat::program_count(config_.max_prog_len));
  std::vector<TracedOutcome> runs(n);
  const Bitstring empty;
  parallel_for(n, worker_count(), [&](std::size_t i) {
    runs[i] = run_traced(program_at(static_cast<ProgramIndex>(i)), empty, config_.step_budget);
  });
  base_out_.resize(n);
  base_steps_.resize(n);
  reads_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = runs[i].outcome;
    base_out_[i] = o.halted() ? pool_.intern(o.output) : kNone;
    base_steps_[i] = static_cast<std::uint16_t>(o.steps_used);
    reads_[i] = runs[i].read_condition ? 1 : 0;
  }
  finish_base();
}

void HaltingTable::finish_base() {
  const std::size_t n = base_out_.size();
  dependents_.clear();
  dep_rank_.assign(n, kNone);
  first_indep_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (reads_[i]) {
      dep_rank_[i] = static_cast<std::uint32_t>(dependents_.size());
      dependents_.push_back(static_cast<ProgramIndex>(i));
    } else if (base_out_[i] != kNone) {
      first_indep_.try_emplace(base_out_[i], static_cast<ProgramIndex>(i));
    }
  }
}

HaltingTable::Record HaltingTable::build_record(const Bitstring& condition) {
  Record rec;
  const std::size_t d = dependents_.size();
  rec.out.resize(d);
  rec.steps.resize(d);
  if (condition.empty()) {
    for (std::size_t r = 0; r < d; ++r) {
      rec.out[r] = base_out_[dependents_[r]];
      rec.steps[r] = base_steps_[dependents_[r]];
    }
  } else {
    std::vector<ExecutionOutcome> runs(d);
    parallel_for(d, worker_count(), [&](std::size_t r) {
      runs[r] = run(program_at(dependents_[r]), condition, config_.step_budget);
    });
    for (std::size_t r = 0; r < d; ++r) {
      rec.out[r] = runs[r].halted() ? pool_.intern(runs[r].output) : kNone;
      rec.steps[r] = static_cast<std::uint16_t>(runs[r].steps_used);
    }
  }
  index_record(rec);
  return rec;
}

void HaltingTable::index_record(Record& rec) const {
  rec.first.clear();
  for (std::uint32_t r = 0; r < rec.out.size(); ++r) {
    if (rec.out[r] != kNone) rec.first.try_emplace(rec.out[r], r);
  }
}

void HaltingTable::index_totals(Record& rec) const {
  rec.first_total.clear();
  for (std::uint32_t r = 0; r < rec.out.size(); ++r) {
    if (rec.out[r] != kNone && dep_total_[r]) rec.first_total.try_emplace(rec.out[r], r);
  }
}

void HaltingTable::record(std::span<const Bitstring> conditions) {
  std::vector<Bitstring> fresh(conditions.begin(), conditions.end());
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  std::erase_if(fresh, [&](const Bitstring& c) { return records_.contains(c); });
  if (fresh.empty()) return;

  const std::size_t per_record = dependents_.size() * (sizeof(std::uint32_t) + sizeof(std::uint16_t) + 16);
  if (memory_bytes() + per_record * fresh.size() > options_.memory_ceiling_bytes) {
    throw ResourceLimit("build_table: recording " + std::to_string(fresh.size()) +
                        " conditions would exceed the memory ceiling; shrink L or the condition list");
  }
  for (const auto& c : fresh) {
    Record rec = build_record(c);
    if (totality_known_) index_totals(rec);
    records_.emplace(c, std::move(rec));
  }
  maybe_compute_totality();
}

void HaltingTable::maybe_compute_totality() {
  if (totality_known_) return;
  const auto universe = Bitstring::all_up_to(static_cast<std::size_t>(config_.cond_universe));
  for (const auto& u : universe) {
    if (!records_.contains(u)) return;
  }
  dep_total_.assign(dependents_.size(), 1);
  for (const auto& u : universe) {
    const Record& rec = records_.at(u);
    for (std::size_t r = 0; r < rec.out.size(); ++r) {
      if (rec.out[r] == kNone) dep_total_[r] = 0;
    }
  }
  totality_known_ = true;
  for (auto& [cond, rec] : records_) index_totals(rec);
}

std::vector<Bitstring> HaltingTable::conditions() const {
  std::vector<Bitstring> out;
  out.reserve(records_.size());
  for (const auto& [c, rec] : records_) out.push_back(c);
  return out;
}

const HaltingTable::Record& HaltingTable::record_for(const Bitstring& condition) const {
  auto it = records_.find(condition);
  if (it == records_.end()) {
    throw UnrecordedCondition("condition '" + condition.token() + "' is not recorded in the halting table");
  }
  return it->second;
}

ExecutionOutcome HaltingTable::outcome(ProgramIndex program, const Bitstring& condition) const {
  const Record& rec = record_for(condition);
  if (program >= base_out_.size()) throw PreconditionError("program longer than max_prog_len");
  std::uint32_t out = base_out_[program];
  int steps = base_steps_[program];
  if (reads_[program]) {
    const auto r = dep_rank_[program];
    out = rec.out[r];
    steps = rec.steps[r];
  }
  if (out == kNone) return {RunStatus::exhausted, {}, steps};
  return {RunStatus::halted, pool_.get(out), steps};
}

std::optional<ProgramIndex> HaltingTable::shortest_program(const Bitstring& x, const Bitstring& y) const {
  const Record& rec = record_for(y);
  const std::uint32_t id = pool_.find(x);
  if (id == kNone) return std::nullopt;
  std::optional<ProgramIndex> best;
  if (auto it = first_indep_.find(id); it != first_indep_.end()) best = it->second;
  if (auto it = rec.first.find(id); it != rec.first.end()) {
    const ProgramIndex p = dependents_[it->second];
    if (!best || p < *best) best = p;
  }
  return best;
}

Complexity HaltingTable::cond_complexity(const Bitstring& x, const Bitstring& y) const {
  auto p = shortest_program(x, y);
  return p ? Complexity(program_length(*p)) : Complexity::infinite();
}

bool HaltingTable::is_total(ProgramIndex program) const {
  if (!totality_known_) {
    throw UnrecordedCondition("totality needs every condition of length <= " + std::to_string(config_.cond_universe) +
                              " to be recorded");
  }
  if (!reads_[program]) return base_out_[program] != kNone;
  return dep_total_[dep_rank_[program]] != 0;
}

std::optional<ProgramIndex> HaltingTable::shortest_total_program(const Bitstring& y, const Bitstring& x) const {
  const Record& rec = record_for(x);
  if (!totality_known_) {
    throw UnrecordedCondition("total_cond_complexity needs every condition of length <= " +
                              std::to_string(config_.cond_universe) + " to be recorded");
  }
  const std::uint32_t id = pool_.find(y);
  if (id == kNone) return std::nullopt;
  std::optional<ProgramIndex> best;
  // A halting program that never reads its condition halts on every condition.
  if (auto it = first_indep_.find(id); it != first_indep_.end()) best = it->second;
  if (auto it = rec.first_total.find(id); it != rec.first_total.end()) {
    const ProgramIndex p = dependents_[it->second];
    if (!best || p < *best) best = p;
  }
  return best;
}

Complexity HaltingTable::total_cond_complexity(const Bitstring& y, const Bitstring& x) const {
  auto p = shortest_total_program(y, x);
  return p ? Complexity(program_length(*p)) : Complexity::infinite();
}

std::vector<Discovery> HaltingTable::discovery_log(const Bitstring& condition) const {
  const Record& rec = record_for(condition);
  struct Key {
    int stage;
    ProgramIndex program;
  };
  std::unordered_map<std::uint32_t, Key> best;
  for (std::size_t i = 0; i < base_out_.size(); ++i) {
    std::uint32_t out = base_out_[i];
    int steps = base_steps_[i];
    if (reads_[i]) {
      out = rec.out[dep_rank_[i]];
      steps = rec.steps[dep_rank_[i]];
    }
    if (out == kNone) continue;
    const int stage = std::max({program_length(static_cast<ProgramIndex>(i)), steps, 1});
    auto [it, inserted] = best.try_emplace(out, Key{stage, static_cast<ProgramIndex>(i)});
    if (!inserted && std::tie(stage, i) < std::tie(it->second.stage, it->second.program)) {
      it->second = Key{stage, static_cast<ProgramIndex>(i)};
    }
  }
  std::vector<Discovery> log;
  log.reserve(best.size());
  for (const auto& [id, key] : best) log.push_back({pool_.get(id), key.stage, key.program});
  std::sort(log.begin(), log.end(), [](const Discovery& a, const Discovery& b) {
    return std::tie(a.stage, a.program) < std::tie(b.stage, b.program);
  });
  return log;
}

std::vector<HaltingTable::OutputEntry> HaltingTable::outputs(const Bitstring& condition, int max_len) const {
  const Record& rec = record_for(condition);
  std::unordered_map<std::uint32_t, ProgramIndex> first(first_indep_.begin(), first_indep_.end());
  for (const auto& [id, r] : rec.first) {
    const ProgramIndex p = dependents_[r];
    auto [it, inserted] = first.try_emplace(id, p);
    if (!inserted && p < it->second) it->second = p;
  }
  std::vector<OutputEntry> out;
  for (const auto& [id, p] : first) {
    const int len = program_length(p);
    if (len <= max_len) out.push_back({pool_.get(id), Complexity(len)});
  }
  std::sort(out.begin(), out.end(), [](const OutputEntry& a, const OutputEntry& b) {
    return std::tie(a.complexity, a.output) < std::tie(b.complexity, b.output);
  });
  return out;
}

std::size_t HaltingTable::memory_bytes() const {
  std::size_t total = pool_.memory_bytes() + base_out_.size() * 7 + dependents_.size() * 8;
  for (const auto& [c, rec] : records_) {
    total += rec.out.size() * 6 + (rec.first.size() + rec.first_total.size()) * 24;
  }
  return total;
}

HaltingTable build_table(const MachineConfig& config, std::span<const Bitstring> conditions, BuildOptions options) {
  HaltingTable table(config, options);
  table.record(conditions);
  return table;
}

std::vector<Bitstring> universe_conditions(const MachineConfig& config) {
  return Bitstring::all_up_to(static_cast<std::size_t>(config.cond_universe));
}

}  // namespace algstat

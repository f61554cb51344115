#include "algstat/cache_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "algstat/errors.hpp"

namespace algstat {

class CacheCodec {
 public:
  static void save(const HaltingTable& t, std::ostream& out);
  static HaltingTable load(std::istream& in, const MachineConfig& expected, BuildOptions options);
};

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

void put_u16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put_bits(std::ostream& out, const Bitstring& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  std::string bytes((s.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (1 << (7 - i % 8)));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void need(std::istream& in) {
  if (!in) throw CacheMismatch("cache file is truncated");
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  need(in);
  return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) | (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
}

std::uint16_t get_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  need(in);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

Bitstring get_bits(std::istream& in) {
  const std::uint32_t n = get_u32(in);
  std::string bytes((n + 7) / 8, '\0');
  in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  need(in);
  Bitstring s;
  s.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) s.push_back((static_cast<unsigned char>(bytes[i / 8]) >> (7 - i % 8)) & 1U);
  return s;
}

struct Header {
  MachineConfig config;
  std::uint64_t pool = 0, programs = 0, dependents = 0, conditions = 0;
};

Header read_header(std::istream& in) {
  Header h;
  std::string line;
  if (!std::getline(in, line)) throw CacheMismatch("empty cache file");
  {
    std::istringstream ls(line);
    std::string magic;
    int version = 0;
    ls >> magic >> version;
    if (magic != "algstat-halting-table") throw CacheMismatch("not a halting-table cache");
    if (version != kCacheFormatVersion) {
      throw CacheMismatch("cache format version " + std::to_string(version) + " is not supported");
    }
  }
  bool ended = false;
  while (std::getline(in, line)) {
    if (line == "end-header") {
      ended = true;
      break;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "machine_id") ls >> h.config.machine_id;
    else if (key == "max_prog_len") ls >> h.config.max_prog_len;
    else if (key == "step_budget") ls >> h.config.step_budget;
    else if (key == "cond_universe") ls >> h.config.cond_universe;
    else if (key == "pool") ls >> h.pool;
    else if (key == "programs") ls >> h.programs;
    else if (key == "dependents") ls >> h.dependents;
    else if (key == "conditions") ls >> h.conditions;
    else throw CacheMismatch("unknown cache header key '" + key + "'");
  }
  if (!ended) throw CacheMismatch("cache header is not terminated");
  return h;
}

}  // namespace

void CacheCodec::save(const HaltingTable& t, std::ostream& out) {
  out << "algstat-halting-table " << kCacheFormatVersion << "\n"
      << "machine_id " << t.config_.machine_id << "\n"
      << "max_prog_len " << t.config_.max_prog_len << "\n"
      << "step_budget " << t.config_.step_budget << "\n"
      << "cond_universe " << t.config_.cond_universe << "\n"
      << "pool " << t.pool_.count() << "\n"
      << "programs " << t.base_out_.size() << "\n"
      << "dependents " << t.dependents_.size() << "\n"
      << "conditions " << t.records_.size() << "\n"
      << "end-header\n";
  for (std::uint32_t id = 0; id < t.pool_.count(); ++id) put_bits(out, t.pool_.get(id));
  for (auto v : t.base_out_) put_u32(out, v);
  for (auto v : t.base_steps_) put_u16(out, v);
  for (auto v : t.reads_) out.put(static_cast<char>(v));
  for (const auto& [cond, rec] : t.records_) {
    put_bits(out, cond);
    for (auto v : rec.out) put_u32(out, v);
    for (auto v : rec.steps) put_u16(out, v);
  }
}

HaltingTable CacheCodec::load(std::istream& in, const MachineConfig& expected, BuildOptions options) {
  const Header h = read_header(in);
  const MachineConfig& c = h.config;
  if (!(c == expected)) {
    std::ostringstream msg;
    msg << "cache header (machine_id=" << c.machine_id << " L=" << c.max_prog_len << " T=" << c.step_budget
        << " N=" << c.cond_universe << ") does not match the active config (machine_id=" << expected.machine_id
        << " L=" << expected.max_prog_len << " T=" << expected.step_budget << " N=" << expected.cond_universe
        << "); refusing to reuse it";
    throw CacheMismatch(msg.str());
  }
  if (h.programs != program_count(c.max_prog_len)) throw CacheMismatch("cache program count does not match L");

  HaltingTable t(c, options, HaltingTable::Tag{});
  for (std::uint64_t i = 0; i < h.pool; ++i) {
    if (t.pool_.intern(get_bits(in)) != i) throw CacheMismatch("cache output pool contains duplicates");
  }
  const std::size_t n = static_cast<std::size_t>(h.programs);
  t.base_out_.resize(n);
  t.base_steps_.resize(n);
  t.reads_.resize(n);
  for (auto& v : t.base_out_) v = get_u32(in);
  for (auto& v : t.base_steps_) v = get_u16(in);
  for (auto& v : t.reads_) {
    v = static_cast<std::uint8_t>(in.get());
    need(in);
  }
  t.finish_base();
  if (t.dependents_.size() != h.dependents) throw CacheMismatch("cache dependent count is inconsistent");
  for (std::uint64_t k = 0; k < h.conditions; ++k) {
    Bitstring cond = get_bits(in);
    HaltingTable::Record rec;
    rec.out.resize(t.dependents_.size());
    rec.steps.resize(t.dependents_.size());
    for (auto& v : rec.out) v = get_u32(in);
    for (auto& v : rec.steps) v = get_u16(in);
    t.index_record(rec);
    t.records_.emplace(std::move(cond), std::move(rec));
  }
  t.maybe_compute_totality();
  return t;
}

void save_cache(const HaltingTable& table, std::ostream& out) { CacheCodec::save(table, out); }

void save_cache(const HaltingTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError("cannot write cache file " + path.string());
  save_cache(table, out);
}

HaltingTable load_cache(std::istream& in, const MachineConfig& expected, BuildOptions options) {
  return CacheCodec::load(in, expected, options);
}

HaltingTable load_cache(const std::filesystem::path& path, const MachineConfig& expected, BuildOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open cache file " + path.string());
  return load_cache(in, expected, options);
}

MachineConfig peek_cache_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open cache file " + path.string());
  return read_header(in).config;
}

}  // namespace algstat

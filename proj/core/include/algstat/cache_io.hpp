#pragma once

#include <filesystem>
#include <iosfwd>

#include "algstat/errors.hpp"
#include "algstat/halting_table.hpp"

namespace algstat {

/// Refused cache: the header disagrees with the active configuration or the
/// file is not a halting-table container.
class CacheMismatch : public UserError {
 public:
  using UserError::UserError;
};

inline constexpr int kCacheFormatVersion = 1;

/// Container layout (all integers little-endian):
///
///   text header, one "key value" per line:
///     algstat-halting-table <version>
///     machine_id <id>
///     max_prog_len <L>
///     step_budget <T>
///     cond_universe <N>
///     pool <P>            distinct outputs
///     programs <n>        2^(L+1) - 1
///     dependents <d>      programs that read their condition
///     conditions <c>
///     end-header
///   pool: P x (u32 bit length, ceil(bits/8) bytes, MSB first)
///   base: n x u32 output id (0xFFFFFFFF = exhausted), n x u16 steps,
///         n x u8 reads-condition flag
///   c records, in (length, lex) order of the condition:
///         u32 condition bit length, packed condition bytes,
///         d x u32 output id, d x u16 steps
void save_cache(const HaltingTable& table, std::ostream& out);
void save_cache(const HaltingTable& table, const std::filesystem::path& path);

/// Throws CacheMismatch when the header's machine_id, L, T or N differ from
/// `expected`.
HaltingTable load_cache(std::istream& in, const MachineConfig& expected, BuildOptions options = {});
HaltingTable load_cache(const std::filesystem::path& path, const MachineConfig& expected, BuildOptions options = {});

/// Reads only the header.
MachineConfig peek_cache_config(const std::filesystem::path& path);

}  // namespace algstat

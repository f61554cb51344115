#pragma once

#include <cstdint>
#include <string>

#include "algstat/bitstring.hpp"

namespace algstat {

/// Identifier of the reference interpreter revision. Every complexity value
/// produced by this library is relative to this machine.
inline constexpr const char* kMachineId = "lab1";

/// The enumeration universe.
struct MachineConfig {
  std::string machine_id = kMachineId;
  int max_prog_len = 16;   ///< L: programs of length 0..L are enumerated.
  int step_budget = 1024;  ///< T: interpreter steps per run.
  int cond_universe = 6;   ///< N: totality is judged over conditions of length <= N.

  /// Throws PreconditionError unless L in [0, 24], T in [1, 65535], N in [0, 16]
  /// and machine_id names this interpreter.
  void validate() const;

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

enum class RunStatus : std::uint8_t { halted, exhausted };

struct ExecutionOutcome {
  RunStatus status = RunStatus::halted;
  Bitstring output;  ///< empty unless halted
  int steps_used = 0;

  bool halted() const { return status == RunStatus::halted; }
  friend bool operator==(const ExecutionOutcome&, const ExecutionOutcome&) = default;
};

/// Outcome plus whether the run ever looked at its condition. A run that did
/// not read the condition has the same outcome under every condition.
struct TracedOutcome {
  ExecutionOutcome outcome;
  bool read_condition = false;
};

/// Runs `program` on `condition` for at most `budget` steps.
///
/// The lab1 machine reads the program as one prefix-coded expression (MSB
/// first); bits after a complete expression are ignored, and a program that
/// ends inside an expression halts at once with empty output. Every node
/// costs 1 step plus the length of the string it produces. See
/// docs/machine.md for the normative opcode table.
ExecutionOutcome run(const Bitstring& program, const Bitstring& condition, int budget);
TracedOutcome run_traced(const Bitstring& program, const Bitstring& condition, int budget);

// Opcode prefixes of the lab1 expression language.
namespace opcode {
inline const Bitstring& lit() { static const Bitstring b = Bitstring::parse("11"); return b; }
inline const Bitstring& cyl() { static const Bitstring b = Bitstring::parse("10"); return b; }
inline const Bitstring& set1() { static const Bitstring b = Bitstring::parse("01"); return b; }
inline const Bitstring& in() { static const Bitstring b = Bitstring::parse("00000"); return b; }
inline const Bitstring& cylin() { static const Bitstring b = Bitstring::parse("00001"); return b; }
inline const Bitstring& cat() { static const Bitstring b = Bitstring::parse("00010"); return b; }
inline const Bitstring& set_union() { static const Bitstring b = Bitstring::parse("00011"); return b; }
inline const Bitstring& drop() { static const Bitstring b = Bitstring::parse("00100"); return b; }
inline const Bitstring& rep() { static const Bitstring b = Bitstring::parse("00101"); return b; }
inline const Bitstring& elem() { static const Bitstring b = Bitstring::parse("00110"); return b; }
inline const Bitstring& tape() { static const Bitstring b = Bitstring::parse("00111"); return b; }
}  // namespace opcode

/// 3-bit opcodes of the tape sub-machine entered by the TAPE opcode.
enum class TapeOp : std::uint8_t {
  move_right = 0,
  move_left = 1,
  flip = 2,
  open_loop = 3,   ///< if cell == 0 jump past the matching close
  close_loop = 4,  ///< if cell == 1 jump back past the matching open
  emit = 5,
  consume = 6,     ///< next condition bit into the cell; 0 once exhausted
  halt = 7,
};

/// Exp-Golomb code of order 3 used for every numeric field: j zeros, a one,
/// then j+3 payload bits; the value is 8*(2^j - 1) + payload.
Bitstring encode_number(std::uint64_t value);

// Program builders for the handful of program shapes the library reasons
// about directly (copy, cylinders, literals). They emit exactly the bits the
// parser expects.
namespace program {
Bitstring literal(const Bitstring& x);
Bitstring cylinder(const Bitstring& prefix, std::uint64_t free);
Bitstring singleton(const Bitstring& inner);
Bitstring copy();
/// REP: `inner` repeated 2^k times.
Bitstring repeat(std::uint64_t k, const Bitstring& inner);
Bitstring cylinder_of_condition(std::uint64_t free);
Bitstring tape(std::initializer_list<TapeOp> ops);
}  // namespace program

/// Programs are enumerated in (length, lex) order; index 0 is the empty
/// program, indices 1..2 are "0","1", and so on.
using ProgramIndex = std::uint32_t;

constexpr std::uint64_t program_count(int max_len) { return (std::uint64_t{1} << (max_len + 1)) - 1; }
Bitstring program_at(ProgramIndex index);
ProgramIndex index_of(const Bitstring& program);
int program_length(ProgramIndex index);

}  // namespace algstat

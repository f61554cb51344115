#include "algstat/machine.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "algstat/errors.hpp"
#include "algstat/set_codec.hpp"

namespace algstat {

void MachineConfig::validate() const {
  if (machine_id != kMachineId) {
    throw PreconditionError("unknown machine_id '" + machine_id + "' (this build implements " + kMachineId + ")");
  }
  if (max_prog_len < 0 || max_prog_len > 24) throw PreconditionError("max_prog_len must be in [0, 24]");
  if (step_budget < 1 || step_budget > 65535) throw PreconditionError("step_budget must be in [1, 65535]");
  if (cond_universe < 0 || cond_universe > 16) throw PreconditionError("cond_universe must be in [0, 16]");
}

namespace {

enum class Op : std::uint8_t { lit, cyl, set1, in, cylin, cat, set_union, drop, rep, elem, tape };

struct Node {
  Op op;
  std::uint64_t a = 0;  // LIT/CYL: literal length, CYLIN/DROP/REP: k, ELEM: index
  std::uint64_t b = 0;  // CYL: free count
  std::size_t lit_begin = 0;
  std::uint32_t kids[2] = {0, 0};
};

class Reader {
 public:
  explicit Reader(const Bitstring& p) : p_(p) {}

  std::optional<bool> bit() {
    if (pos_ >= p_.size()) return std::nullopt;
    return p_[pos_++];
  }

  std::optional<std::uint64_t> number() {
    int zeros = 0;
    for (;;) {
      auto b = bit();
      if (!b) return std::nullopt;
      if (*b) break;
      if (++zeros > 40) return std::nullopt;
    }
    const int width = zeros + 3;
    std::uint64_t payload = 0;
    for (int i = 0; i < width; ++i) {
      auto b = bit();
      if (!b) return std::nullopt;
      payload = (payload << 1) | (*b ? 1U : 0U);
    }
    return 8 * ((std::uint64_t{1} << zeros) - 1) + payload;
  }

  // Skips n literal bits, returning where they start.
  std::optional<std::size_t> skip(std::uint64_t n) {
    if (n > p_.size() - pos_) return std::nullopt;
    const std::size_t at = pos_;
    pos_ += static_cast<std::size_t>(n);
    return at;
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return p_.size() - pos_; }
  void finish() { pos_ = p_.size(); }

 private:
  const Bitstring& p_;
  std::size_t pos_ = 0;
};

// Parses one expression in prefix order, appending nodes. Children always get
// larger indices than their parent. Returns false on truncation.
bool parse(Reader& r, std::vector<Node>& nodes, std::size_t& tape_at) {
  struct Pending {
    std::uint32_t parent;
    int slot;
  };
  std::vector<Pending> todo{{0, -1}};
  while (!todo.empty()) {
    const Pending pend = todo.back();
    todo.pop_back();
    if (tape_at != 0) return false;  // a TAPE node swallowed the rest; no bits left
    Node n{};
    auto b0 = r.bit();
    auto b1 = r.bit();
    if (!b0 || !b1) return false;
    if (*b0 && *b1) {
      n.op = Op::lit;
      auto len = r.number();
      if (!len) return false;
      auto at = r.skip(*len);
      if (!at) return false;
      n.a = *len;
      n.lit_begin = *at;
    } else if (*b0 && !*b1) {
      n.op = Op::cyl;
      auto free = r.number();
      if (!free) return false;
      auto len = r.number();
      if (!len) return false;
      auto at = r.skip(*len);
      if (!at) return false;
      n.a = *len;
      n.b = *free;
      n.lit_begin = *at;
    } else if (!*b0 && *b1) {
      n.op = Op::set1;
    } else {
      std::uint32_t code = 0;
      for (int i = 0; i < 3; ++i) {
        auto b = r.bit();
        if (!b) return false;
        code = (code << 1) | (*b ? 1U : 0U);
      }
      static constexpr Op kTable[8] = {Op::in,   Op::cylin,   Op::cat,  Op::set_union,
                                       Op::drop, Op::rep, Op::elem, Op::tape};
      n.op = kTable[code];
      if (n.op == Op::cylin || n.op == Op::drop || n.op == Op::rep) {
        auto k = r.number();
        if (!k) return false;
        n.a = *k;
      } else if (n.op == Op::elem) {
        auto width = r.number();
        if (!width || *width > 63) return false;
        std::uint64_t idx = 0;
        for (std::uint64_t i = 0; i < *width; ++i) {
          auto b = r.bit();
          if (!b) return false;
          idx = (idx << 1) | (*b ? 1U : 0U);
        }
        n.a = idx;
      } else if (n.op == Op::tape) {
        n.lit_begin = r.pos();
        tape_at = nodes.size() + 1;  // nonzero marker
        r.finish();
      }
    }
    const auto self = static_cast<std::uint32_t>(nodes.size());
    if (pend.slot >= 0) nodes[pend.parent].kids[pend.slot] = self;
    nodes.push_back(n);
    int arity = 0;
    switch (n.op) {
      case Op::set1: case Op::drop: case Op::rep: case Op::elem: arity = 1; break;
      case Op::cat: case Op::set_union: arity = 2; break;
      default: break;
    }
    // Push in reverse so the first child is parsed first.
    for (int s = arity - 1; s >= 0; --s) todo.push_back({self, s});
  }
  return true;
}

struct TapeResult {
  bool halted;
  int steps;
  Bitstring output;
  bool consumed;
};

TapeResult run_tape(const Bitstring& program, std::size_t begin, const Bitstring& condition, int budget) {
  const std::size_t nops = (program.size() - begin) / 3;
  std::vector<std::uint8_t> ops(nops);
  for (std::size_t i = 0; i < nops; ++i) {
    const std::size_t at = begin + 3 * i;
    ops[i] = static_cast<std::uint8_t>((program[at] << 2) | (program[at + 1] << 1) | program[at + 2]);
  }
  constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(nops, kUnmatched);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < nops; ++i) {
    if (ops[i] == static_cast<std::uint8_t>(TapeOp::open_loop)) {
      stack.push_back(i);
    } else if (ops[i] == static_cast<std::uint8_t>(TapeOp::close_loop) && !stack.empty()) {
      match[i] = stack.back();
      match[stack.back()] = i;
      stack.pop_back();
    }
  }

  TapeResult res{false, 0, {}, false};
  std::vector<std::uint8_t> tape(16, 0);
  std::size_t head = 8;
  std::size_t cond_pos = 0;
  std::size_t ip = 0;
  while (ip < nops) {
    if (res.steps >= budget) return res;
    ++res.steps;
    switch (static_cast<TapeOp>(ops[ip])) {
      case TapeOp::move_right:
        if (++head == tape.size()) tape.resize(tape.size() * 2, 0);
        break;
      case TapeOp::move_left:
        if (head == 0) {
          const std::size_t grow = tape.size();
          tape.insert(tape.begin(), grow, 0);
          head += grow;
        }
        --head;
        break;
      case TapeOp::flip:
        tape[head] ^= 1U;
        break;
      case TapeOp::open_loop:
        if (tape[head] == 0) {
          if (match[ip] == kUnmatched) continue;  // spin in place
          ip = match[ip];
        }
        break;
      case TapeOp::close_loop:
        if (tape[head] == 1) {
          if (match[ip] == kUnmatched) continue;
          ip = match[ip];
        }
        break;
      case TapeOp::emit:
        res.output.push_back(tape[head] != 0);
        break;
      case TapeOp::consume:
        res.consumed = true;
        tape[head] = cond_pos < condition.size() && condition[cond_pos] ? 1 : 0;
        if (cond_pos < condition.size()) ++cond_pos;
        break;
      case TapeOp::halt:
        res.halted = true;
        return res;
    }
    ++ip;
  }
  res.halted = true;
  return res;
}

Bitstring slice(const Bitstring& p, std::size_t begin, std::uint64_t len) {
  Bitstring out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < len; ++i) out.push_back(p[begin + i]);
  return out;
}

}  // namespace

TracedOutcome run_traced(const Bitstring& program, const Bitstring& condition, int budget) {
  TracedOutcome traced;
  Reader reader(program);
  std::vector<Node> nodes;
  std::size_t tape_marker = 0;
  if (!parse(reader, nodes, tape_marker)) {
    return traced;  // truncated: halt at once with empty output
  }
  auto exhausted = [&] {
    traced.outcome = ExecutionOutcome{RunStatus::exhausted, {}, budget};
    return traced;
  };
  // Every node costs at least one step.
  if (nodes.size() > static_cast<std::size_t>(budget)) return exhausted();

  std::vector<Bitstring> value(nodes.size());
  long long steps = 0;
  // Prefix order puts children after parents, so reverse order is a valid
  // evaluation order. The TAPE node, if any, is last and runs first.
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const Node& n = nodes[i];
    const long long left = budget - steps;
    Bitstring out;
    switch (n.op) {
      case Op::lit:
        if (1 + static_cast<long long>(n.a) > left) return exhausted();
        out = slice(program, n.lit_begin, n.a);
        break;
      case Op::cyl: {
        if (n.b > 20 || 1 + static_cast<long long>(cylinder_code_length(n.a, n.b)) > left) return exhausted();
        const Bitstring head = slice(program, n.lit_begin, n.a);
        StringSet members;
        for (auto& tail : Bitstring::all_of_length(static_cast<std::size_t>(n.b))) members.push_back(head + tail);
        out = encode_set(members);
        break;
      }
      case Op::set1: {
        const Bitstring& inner = value[n.kids[0]];
        if (1 + 2 * static_cast<long long>(inner.size()) + 2 > left) return exhausted();
        out = encode_set(std::span<const Bitstring>(&inner, 1));
        break;
      }
      case Op::in:
        traced.read_condition = true;
        out = condition;
        break;
      case Op::cylin: {
        traced.read_condition = true;
        const Bitstring head = condition.drop_back(static_cast<std::size_t>(n.a));
        if (n.a > 20 || 1 + static_cast<long long>(cylinder_code_length(head.size(), n.a)) > left) return exhausted();
        StringSet members;
        for (auto& tail : Bitstring::all_of_length(static_cast<std::size_t>(n.a))) members.push_back(head + tail);
        out = encode_set(members);
        break;
      }
      case Op::cat:
        out = value[n.kids[0]] + value[n.kids[1]];
        break;
      case Op::set_union: {
        StringSet merged;
        for (int k = 0; k < 2; ++k) {
          if (auto s = decode_set(value[n.kids[k]])) merged.insert(merged.end(), s->begin(), s->end());
        }
        out = encode_set(merged);
        break;
      }
      case Op::drop:
        out = value[n.kids[0]].drop_back(static_cast<std::size_t>(std::min<std::uint64_t>(n.a, SIZE_MAX)));
        break;
      case Op::rep: {
        const Bitstring& inner = value[n.kids[0]];
        if (n.a > 20 || 1 + static_cast<long long>(inner.size() << n.a) > left) return exhausted();
        out.reserve(inner.size() << n.a);
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n.a); ++r) out.append(inner);
        break;
      }
      case Op::elem: {
        auto s = decode_set(value[n.kids[0]]);
        if (s && n.a < s->size()) out = (*s)[static_cast<std::size_t>(n.a)];
        break;
      }
      case Op::tape: {
        auto t = run_tape(program, n.lit_begin, condition, static_cast<int>(left - 1));
        traced.read_condition = traced.read_condition || t.consumed;
        if (!t.halted) return exhausted();
        steps += 1 + t.steps;
        value[i] = std::move(t.output);
        continue;
      }
    }
    steps += 1 + static_cast<long long>(out.size());
    if (steps > budget) return exhausted();
    value[i] = std::move(out);
  }
  traced.outcome = ExecutionOutcome{RunStatus::halted, std::move(value[0]), static_cast<int>(steps)};
  return traced;
}

ExecutionOutcome run(const Bitstring& program, const Bitstring& condition, int budget) {
  if (budget < 1) throw PreconditionError("run: budget must be >= 1");
  return run_traced(program, condition, budget).outcome;
}

Bitstring encode_number(std::uint64_t value) {
  int zeros = 0;
  while (value >= 8 * ((std::uint64_t{1} << (zeros + 1)) - 1)) ++zeros;
  Bitstring out = Bitstring::zeros(static_cast<std::size_t>(zeros));
  out.push_back(true);
  out.append(Bitstring::from_uint(value - 8 * ((std::uint64_t{1} << zeros) - 1), static_cast<std::size_t>(zeros + 3)));
  return out;
}

namespace program {

Bitstring literal(const Bitstring& x) { return opcode::lit() + encode_number(x.size()) + x; }

Bitstring cylinder(const Bitstring& prefix, std::uint64_t free) {
  return opcode::cyl() + encode_number(free) + encode_number(prefix.size()) + prefix;
}

Bitstring singleton(const Bitstring& inner) { return opcode::set1() + inner; }

Bitstring copy() { return opcode::in(); }

Bitstring repeat(std::uint64_t k, const Bitstring& inner) { return opcode::rep() + encode_number(k) + inner; }

Bitstring cylinder_of_condition(std::uint64_t free) { return opcode::cylin() + encode_number(free); }

Bitstring tape(std::initializer_list<TapeOp> ops) {
  Bitstring out = opcode::tape();
  for (auto op : ops) out.append(Bitstring::from_uint(static_cast<std::uint64_t>(op), 3));
  return out;
}

}  // namespace program

Bitstring program_at(ProgramIndex index) {
  const std::uint64_t v = std::uint64_t{index} + 1;
  int len = 0;
  while ((v >> (len + 1)) != 0) ++len;
  return Bitstring::from_uint(v - (std::uint64_t{1} << len), static_cast<std::size_t>(len));
}

ProgramIndex index_of(const Bitstring& program) {
  return static_cast<ProgramIndex>((std::uint64_t{1} << program.size()) - 1 + program.to_uint());
}

int program_length(ProgramIndex index) {
  const std::uint64_t v = std::uint64_t{index} + 1;
  int len = 0;
  while ((v >> (len + 1)) != 0) ++len;
  return len;
}

}  // namespace algstat

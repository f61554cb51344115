#include "algstat/omega.hpp"

#include <cstdlib>

namespace algstat {

Bitstring pair_code(const Bitstring& x, const Bitstring& y) {
  Bitstring out;
  out.reserve(2 * x.size() + 2 + y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(x[i]);
  }
  out.push_back(false);
  out.push_back(true);
  out.append(y);
  return out;
}

namespace {

Complexity abs_gap(Complexity lhs, Complexity rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) return Complexity::infinite();
  return Complexity(std::abs(lhs.value() - rhs.value()));
}

}  // namespace

SymmetryReport symmetry_report(const HaltingTable& table, const Bitstring& x, const Bitstring& y) {
  SymmetryReport r;
  r.c_x = table.complexity(x);
  r.c_y = table.complexity(y);
  r.c_y_given_x = table.cond_complexity(y, x);
  r.c_x_given_y = table.cond_complexity(x, y);
  r.c_pair = table.complexity(pair_code(x, y));
  r.gap_x_side = abs_gap(r.c_x + r.c_y_given_x, r.c_pair);
  r.gap_y_side = abs_gap(r.c_y + r.c_x_given_y, r.c_pair);
  return r;
}

}  // namespace algstat

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "algstat/bitstring.hpp"

namespace algstat {

/// A finite set of strings held as a sorted, duplicate-free vector in
/// (length, lex) order.
using StringSet = std::vector<Bitstring>;

/// Sorts and deduplicates in place; returns the argument for chaining.
StringSet& canonicalize(StringSet& elements);

/// Canonical code [A]: elements in (length, lex) order, each with every bit
/// doubled (0 -> 00, 1 -> 11) and terminated by the pair 01. The empty set
/// encodes to the empty string. Input need not be sorted or unique.
Bitstring encode_set(std::span<const Bitstring> elements);

/// Code length of the set {u v : l(v) = free} without building it.
std::size_t cylinder_code_length(std::size_t prefix_len, std::size_t free);

/// Inverse of encode_set. std::nullopt marks a string that is not a canonical
/// code: odd length, a "10" pair, a missing terminator, or elements out of
/// strict (length, lex) order.
std::optional<StringSet> decode_set(const Bitstring& code);

/// True when `code` is a canonical code whose set contains `x`. Does not
/// materialize the set.
bool code_contains(const Bitstring& code, const Bitstring& x);

}  // namespace algstat

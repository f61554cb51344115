#include "algstat/set_codec.hpp"

#include <algorithm>

namespace algstat {

StringSet& canonicalize(StringSet& elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

Bitstring encode_set(std::span<const Bitstring> elements) {
  StringSet sorted(elements.begin(), elements.end());
  canonicalize(sorted);
  std::size_t total = 0;
  for (const auto& e : sorted) total += 2 * e.size() + 2;
  Bitstring code;
  code.reserve(total);
  for (const auto& e : sorted) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      code.push_back(e[i]);
      code.push_back(e[i]);
    }
    code.push_back(false);
    code.push_back(true);
  }
  return code;
}

std::size_t cylinder_code_length(std::size_t prefix_len, std::size_t free) {
  return (std::size_t{1} << free) * (2 * (prefix_len + free) + 2);
}

std::optional<StringSet> decode_set(const Bitstring& code) {
  if (code.size() % 2 != 0) return std::nullopt;
  StringSet out;
  Bitstring current;
  bool open = false;
  for (std::size_t i = 0; i < code.size(); i += 2) {
    const bool a = code[i];
    const bool b = code[i + 1];
    if (a == b) {
      current.push_back(a);
      open = true;
    } else if (!a && b) {
      if (!out.empty() && !(out.back() < current)) return std::nullopt;
      out.push_back(std::move(current));
      current = Bitstring{};
      open = false;
    } else {
      return std::nullopt;
    }
  }
  if (open) return std::nullopt;
  return out;
}

bool code_contains(const Bitstring& code, const Bitstring& x) {
  auto set = decode_set(code);
  return set && std::binary_search(set->begin(), set->end(), x);
}

}  // namespace algstat

#include "doctest.h"
#include "support.hpp"

#include "algstat/set_codec.hpp"
#include "algstat/suites.hpp"

using namespace algstat;
using support::bits;

TEST_CASE("encode examples") {
  CHECK(encode_set(StringSet{}).empty());
  CHECK(encode_set(StringSet{Bitstring{}}) == bits("01"));
  CHECK(encode_set(StringSet{Bitstring{}, bits("0")}) == bits("010001"));
  CHECK(encode_set(StringSet{bits("0"), Bitstring{}}) == bits("010001"));
  CHECK(encode_set(StringSet{bits("1"), bits("1")}) == bits("1101"));
}

TEST_CASE("decode examples and invalid codes") {
  CHECK(decode_set(bits("010001")) == StringSet{Bitstring{}, bits("0")});
  CHECK(decode_set(bits("0001")) == StringSet{bits("0")});
  CHECK(decode_set(Bitstring{}) == StringSet{});
  CHECK_FALSE(decode_set(bits("1")).has_value());
  CHECK_FALSE(decode_set(bits("10")).has_value());
  CHECK_FALSE(decode_set(bits("0010")).has_value());
  CHECK_FALSE(decode_set(bits("00")).has_value());
  CHECK_FALSE(decode_set(bits("11010001")).has_value());  // 1 before 0
  CHECK_FALSE(decode_set(bits("00010001")).has_value());  // duplicate
  CHECK_FALSE(decode_set(bits("000101")).has_value());    // Λ after 0
}

TEST_CASE("roundtrip over small sets and short codes") {
  const SuiteResult r = verify_codec(3, 16);
  CHECK(r.checked > 0);
  CHECK_MESSAGE(r.passed(), (r.failures.empty() ? std::string() : r.failures.front()));
}

TEST_CASE("every string of length <= 14 is either a canonical code or rejected") {
  for (const auto& c : Bitstring::all_up_to(14)) {
    const auto d = decode_set(c);
    if (d) REQUIRE(encode_set(*d) == c);
  }
}

TEST_CASE("code_contains agrees with decoding") {
  const auto elems = Bitstring::all_up_to(3);
  for (const auto& c : Bitstring::all_up_to(12)) {
    const auto d = decode_set(c);
    for (const auto& x : elems) {
      const bool want = d && std::binary_search(d->begin(), d->end(), x);
      REQUIRE(code_contains(c, x) == want);
    }
  }
}

TEST_CASE("cylinder code length") {
  for (const auto& u : Bitstring::all_up_to(3)) {
    for (std::size_t free = 0; free <= 4; ++free) {
      StringSet s;
      for (const auto& v : Bitstring::all_of_length(free)) s.push_back(u + v);
      CHECK(cylinder_code_length(u.size(), free) == encode_set(s).size());
    }
  }
}

TEST_CASE("canonicalize sorts and deduplicates") {
  StringSet s{bits("11"), bits("0"), bits("11"), Bitstring{}};
  canonicalize(s);
  CHECK(s == StringSet{Bitstring{}, bits("0"), bits("11")});
}

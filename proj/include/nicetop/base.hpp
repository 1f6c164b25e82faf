#pragma once
// Shared plumbing: bitmask element sets, exact rationals, error taxonomy.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace nicetop {

// Subsets of a (small) indexed universe. Bit i set <=> element i present.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1; }
constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_bits(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> v;
  for_bits(m, [&](int i) { v.push_back(i); });
  return v;
}

// Exact rationals; all cut points and parameters live here.
//
// Pitfall: under C++20, boost 1.74's reversed-argument operator== becomes
// its own rewritten candidate, so `Rat == 0` and `Rat != 0` recurse forever
// (gcc 11 picks the rewrite). Mixed <, >, <=, >= are unaffected. Equality
// against integers must be spelled `r == Rat{0}`.
using Rat = boost::rational<long long>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  int asked, cap;
  CapExceeded(const std::string& what, int asked_, int cap_)
      : Error(what + ": " + std::to_string(asked_) + " exceeds cap " +
              std::to_string(cap_)),
        asked(asked_),
        cap(cap_) {}
};

struct ParseError : Error {
  using Error::Error;
};

// "p" or "p/q", no whitespace. q must be positive and nonzero.
inline Rat parse_rat(std::string_view s) {
  auto parse_int = [](std::string_view t) -> long long {
    if (t.empty()) throw ParseError("empty rational component");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(t), &pos);
    } catch (const std::exception&) {
      throw ParseError("bad rational: " + std::string(t));
    }
    if (pos != t.size()) throw ParseError("bad rational: " + std::string(t));
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  long long num = parse_int(s.substr(0, slash));
  long long den = parse_int(s.substr(slash + 1));
  if (den <= 0) throw ParseError("rational denominator must be positive");
  return Rat(num, den);
}

inline std::string show_rat(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline std::string show_mask(Mask m) {
  std::string s = "{";
  bool first = true;
  for_bits(m, [&](int x) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

}  // namespace nicetop

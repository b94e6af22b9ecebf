#pragma once

// Test-only oracles. Nothing here calls into the geometry or search code
// paths it is used to check.

#include <tennenbaum/core.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tennenbaum::oracle {

/// Square i of the diagonal packing, in fine units, as plain integers.
struct PlainSquare {
  std::int64_t x, y, side;
  bool contains(std::int64_t cx, std::int64_t cy) const {
    return x <= cx && cx < x + side && y <= cy && cy < y + side;
  }
};

inline std::vector<PlainSquare> diagonal_squares(std::int64_t n, std::int64_t p, std::int64_t q) {
  std::vector<PlainSquare> out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back({i * (p - q), i * (p - q), (n - 1) * q});
  return out;
}

/// Coverage count of one unit cell by direct membership tests.
inline int cell_count(const std::vector<PlainSquare>& squares, std::int64_t x, std::int64_t y) {
  int c = 0;
  for (const auto& s : squares) c += s.contains(x, y) ? 1 : 0;
  return c;
}

struct PlainLedger {
  std::int64_t uncovered = 0, excess = 0;
};

inline PlainLedger brute_ledger(std::int64_t big_side, const std::vector<PlainSquare>& squares) {
  PlainLedger l;
  for (std::int64_t y = 0; y < big_side; ++y)
    for (std::int64_t x = 0; x < big_side; ++x) {
      const int c = cell_count(squares, x, y);
      if (c == 0) ++l.uncovered;
      if (c > 1) l.excess += c - 1;
    }
  return l;
}

/// Random integer with up to `digits` decimal digits, at least `min`.
inline Integer random_integer(std::mt19937_64& rng, int digits, const Integer& min = 0) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> len(1, digits);
  std::string s;
  const int count = len(rng);
  for (int i = 0; i < count; ++i) s.push_back(static_cast<char>('0' + digit(rng)));
  Integer v = parse_integer(s);
  return v < min ? min : v;
}

/// Uniform in [lo, hi] for big bounds (hi - lo < 2^64 not required).
inline Integer random_between(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  const Integer span = hi - lo + 1;
  Integer r = 0;
  const std::size_t words = boost::multiprecision::msb(span) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) r = (r << 64) | Integer(rng());
  return lo + r % span;
}

inline boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream is(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(is, tree);
  return tree;
}

}  // namespace tennenbaum::oracle

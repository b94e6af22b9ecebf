#pragma once

// The diagonal packing of n q-squares inside a p-square, in fine units
// (every length multiplied by n-1 so all corners are integers), its overlap
// and corner-gap decomposition, a brute-force multiplicity grid, and the area
// ledger excess - uncovered = (n-1)^2 * (n q^2 - p^2).

#include "core.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace tennenbaum {

struct Point {
  Integer x;
  Integer y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned square [x, x+side) x [y, y+side).
struct Square {
  Point corner;
  Integer side;

  Integer area() const { return side * side; }
  friend bool operator==(const Square&, const Square&) = default;
};

/// Area of the intersection of two squares (0 if disjoint).
inline Integer overlap_area(const Square& a, const Square& b) {
  auto extent = [](const Integer& a0, const Integer& a1, const Integer& b0, const Integer& b1) {
    Integer lo = a0 > b0 ? a0 : b0;
    Integer hi = a1 < b1 ? a1 : b1;
    return hi > lo ? Integer(hi - lo) : Integer(0);
  };
  return extent(a.corner.x, a.corner.x + a.side, b.corner.x, b.corner.x + b.side) *
         extent(a.corner.y, a.corner.y + a.side, b.corner.y, b.corner.y + b.side);
}

/// Mirror x -> big_side - x across the vertical mid-line (the figures' convention).
inline Square reflect(const Square& s, const Integer& big_side) {
  return Square{Point{big_side - s.corner.x - s.side, s.corner.y}, s.side};
}

struct FineLayout {
  Radicand n;
  Integer p;
  Integer q;
  Integer scale;       // n - 1 fine units per length unit
  Integer big_side;    // (n-1) p
  Integer step;        // p - q, diagonal offset between consecutive squares
  Integer small_side;  // (n-1) q
  std::vector<Point> placements;

  Square big_square() const { return Square{Point{0, 0}, big_side}; }
  Square small_square(std::size_t i) const { return Square{placements.at(i), small_side}; }
  std::vector<Square> small_squares() const {
    std::vector<Square> out;
    out.reserve(placements.size());
    for (const auto& pt : placements) out.push_back(Square{pt, small_side});
    return out;
  }
};

/// Places n squares of side (n-1)q at (i(p-q), i(p-q)), i = 0..n-1.
/// Requires 1 <= q < p <= nq.
inline FineLayout build_layout(const Radicand& n, const Candidate& c) {
  if (c.q < 1) throw precondition_error("layout requires q >= 1, got q = " + to_string(c.q));
  if (c.p <= c.q)
    throw precondition_error("layout requires q < p <= n·q, but p = " + to_string(c.p) +
                             " <= q = " + to_string(c.q) + " (no gap)");
  if (c.p > n.value() * c.q)
    throw precondition_error("layout requires q < p <= n·q, but p = " + to_string(c.p) + " > n·q = " +
                             to_string(Integer(n.value() * c.q)) +
                             ": squares cannot tile the diagonal without gaps along it");
  if (n.value() > std::numeric_limits<std::uint32_t>::max())
    throw resource_error("layout with more than 2^32 squares is not supported");

  const Integer scale = n.value() - 1;
  FineLayout l{n, c.p, c.q, scale, scale * c.p, c.p - c.q, scale * c.q, {}};
  const auto count = static_cast<std::size_t>(n.value());
  l.placements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Integer offset = l.step * i;
    l.placements.push_back(Point{offset, offset});
  }
  return l;
}

/// Intersection of small squares i and i+1.
struct OverlapSquare {
  std::size_t index;
  Square square;
};

/// The n-1 consecutive intersections, each of side (n-1)q - (p-q) fine units.
inline std::vector<OverlapSquare> overlap_squares(const FineLayout& l) {
  std::vector<OverlapSquare> out;
  const std::size_t count = l.placements.size() - 1;
  out.reserve(count);
  const Integer side = l.small_side - l.step;
  for (std::size_t i = 0; i < count; ++i) {
    Integer offset = l.step * (i + 1);
    out.push_back({i, Square{Point{offset, offset}, side}});
  }
  return out;
}

enum class Corner { TopLeft, BottomRight };

/// One square of the uncovered staircase. Rows count from the diagonal
/// outward: row k (1..n-1) holds k squares, column 0..k-1.
struct CornerGapSquare {
  Corner corner;
  std::size_t row;
  std::size_t column;
  Square square;
};

/// 2 * triangular(n-1) squares of side p-q tiling the uncovered region.
inline std::vector<CornerGapSquare> corner_gap_squares(const FineLayout& l) {
  std::vector<CornerGapSquare> out;
  const std::size_t rows = l.placements.size() - 1;
  out.reserve(rows * (rows + 1));
  for (Corner corner : {Corner::TopLeft, Corner::BottomRight}) {
    for (std::size_t k = 1; k <= rows; ++k) {
      const Integer along = l.small_side + l.step * (k - 1);
      for (std::size_t j = 0; j < k; ++j) {
        const Integer across = l.step * j;
        Point pt = corner == Corner::TopLeft ? Point{across, along} : Point{along, across};
        out.push_back({corner, k, j, Square{std::move(pt), l.step}});
      }
    }
  }
  return out;
}

/// Largest grid the brute-force oracle will allocate.
inline constexpr std::uint64_t kMaxGridCells = 100'000'000;

/// Per unit cell, how many squares contain it.
struct MultiplicityGrid {
  std::size_t side = 0;
  std::vector<std::uint32_t> counts;  // row-major, index y * side + x

  std::uint32_t at(std::size_t x, std::size_t y) const { return counts[y * side + x]; }
};

/// Rasterizes arbitrary squares lying inside [0, big_side)^2.
inline MultiplicityGrid multiplicity_grid(const Integer& big_side, std::span<const Square> squares) {
  if (big_side < 0) throw precondition_error("grid side must be non-negative");
  if (big_side * big_side > kMaxGridCells)
    throw resource_error("multiplicity grid of " + to_string(Integer(big_side * big_side)) +
                         " cells exceeds the guard of " + std::to_string(kMaxGridCells));
  MultiplicityGrid g;
  g.side = static_cast<std::size_t>(big_side);
  g.counts.assign(g.side * g.side, 0);
  for (const Square& s : squares) {
    if (s.side < 0 || s.corner.x < 0 || s.corner.y < 0 || s.corner.x + s.side > big_side ||
        s.corner.y + s.side > big_side)
      throw precondition_error("square does not lie inside the grid");
    const auto x0 = static_cast<std::size_t>(s.corner.x);
    const auto y0 = static_cast<std::size_t>(s.corner.y);
    const auto w = static_cast<std::size_t>(s.side);
    for (std::size_t y = y0; y < y0 + w; ++y) {
      std::uint32_t* row = g.counts.data() + y * g.side;
      for (std::size_t x = x0; x < x0 + w; ++x) ++row[x];
    }
  }
  return g;
}

inline MultiplicityGrid multiplicity_grid(const FineLayout& l) {
  const std::vector<Square> squares = l.small_squares();
  return multiplicity_grid(l.big_side, squares);
}

/// Area accounting in fine units (divide by scale^2 for length units).
struct AreaLedger {
  Integer n;
  Integer p;
  Integer q;
  Integer scale;
  Integer uncovered;    // cells covered by no small square
  Integer excess;       // sum over cells of max(count - 1, 0)
  Integer union_area;   // cells covered at least once
  Integer sum_small;    // n * small_side^2
  Integer defect_fine;  // (n-1)^2 (n q^2 - p^2)
  Integer defect;       // n q^2 - p^2

  /// A fine-unit area in length-squared units, when scale^2 divides it.
  /// Only the difference excess - uncovered is always divisible.
  std::optional<Integer> in_length_units(const Integer& fine_area) const {
    const Integer s2 = scale * scale;
    if (fine_area % s2 != 0) return std::nullopt;
    return Integer(fine_area / s2);
  }

  friend bool operator==(const AreaLedger&, const AreaLedger&) = default;
};

/// Area ledger from the grid alone, for any placement of squares.
inline AreaLedger ledger_from_grid(const MultiplicityGrid& g) {
  AreaLedger out;
  std::uint64_t uncovered = 0, covered = 0, excess = 0, total = 0;
  for (std::uint32_t c : g.counts) {
    total += c;
    if (c == 0) {
      ++uncovered;
    } else {
      ++covered;
      excess += c - 1;
    }
  }
  out.uncovered = uncovered;
  out.union_area = covered;
  out.excess = excess;
  out.sum_small = total;
  return out;
}

enum class LedgerMode { ClosedForm, WithOracle };

/// Closed-form ledger; WithOracle also rasterizes and demands agreement.
inline AreaLedger area_ledger(const FineLayout& l, LedgerMode mode = LedgerMode::ClosedForm) {
  const Integer& n = l.n.value();
  AreaLedger out;
  out.n = n;
  out.p = l.p;
  out.q = l.q;
  out.scale = l.scale;
  out.uncovered = 2 * triangular(l.scale) * l.step * l.step;
  const Integer overlap_side = l.small_side - l.step;
  out.excess = l.scale * overlap_side * overlap_side;
  out.union_area = l.big_side * l.big_side - out.uncovered;
  out.sum_small = n * l.small_side * l.small_side;
  out.defect = n * l.q * l.q - l.p * l.p;
  out.defect_fine = l.scale * l.scale * out.defect;

  if (mode == LedgerMode::WithOracle) {
    const AreaLedger raster = ledger_from_grid(multiplicity_grid(l));
    if (raster.uncovered != out.uncovered || raster.excess != out.excess ||
        raster.union_area != out.union_area || raster.sum_small != out.sum_small)
      throw std::logic_error("closed-form ledger disagrees with the multiplicity grid");
  }
  return out;
}

/// True iff the overlap area equals the uncovered area, i.e. nq^2 = p^2.
inline bool verify_paper_identity(const Radicand& n, const Candidate& c) {
  const AreaLedger ledger = area_ledger(build_layout(n, c));
  return ledger.excess == ledger.uncovered;
}

/// Flat "key = integer" record, one per line, fixed key order.
inline std::string to_record(const AreaLedger& l) {
  std::ostringstream os;
  os << "n = " << l.n << '\n'
     << "p = " << l.p << '\n'
     << "q = " << l.q << '\n'
     << "scale = " << l.scale << '\n'
     << "uncovered = " << l.uncovered << '\n'
     << "excess = " << l.excess << '\n'
     << "union = " << l.union_area << '\n'
     << "sum_small = " << l.sum_small << '\n'
     << "defect_fine = " << l.defect_fine << '\n'
     << "defect = " << l.defect << '\n';
  return os.str();
}

/// Inverse of to_record. Rejects unknown, duplicate and missing keys.
inline AreaLedger parse_record(const std::string& text) {
  AreaLedger out;
  const std::map<std::string, Integer AreaLedger::*> fields{
      {"n", &AreaLedger::n},
      {"p", &AreaLedger::p},
      {"q", &AreaLedger::q},
      {"scale", &AreaLedger::scale},
      {"uncovered", &AreaLedger::uncovered},
      {"excess", &AreaLedger::excess},
      {"union", &AreaLedger::union_area},
      {"sum_small", &AreaLedger::sum_small},
      {"defect_fine", &AreaLedger::defect_fine},
      {"defect", &AreaLedger::defect},
  };
  std::map<std::string, bool> seen;
  std::istringstream is(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("record line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const auto it = fields.find(key);
    if (it == fields.end()) throw std::invalid_argument("unknown record key: " + key);
    if (seen[key]) throw std::invalid_argument("duplicate record key: " + key);
    seen[key] = true;
    out.*(it->second) = parse_integer(trim(line.substr(eq + 1)));
  }
  for (const auto& [key, member] : fields) {
    if (!seen[key]) throw std::invalid_argument("missing record key: " + key);
  }
  return out;
}

}  // namespace tennenbaum

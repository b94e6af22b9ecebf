#pragma once

// Deterministic SVG 1.1 figures: the diagonal packing and the
// "p-square = q-square + ... + q-square" banner.

#include "core.hpp"
#include "geometry.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace tennenbaum {

struct FigureStyle {
  std::string small_fill = "#b3b3ff";
  std::string small_opacity = "0.6";
  std::string overlap_fill = "#ff6666";
  std::string overlap_opacity = "1";
  int stroke_width = 1;
  Integer unit_scale = 12;  // pixels per length unit
  bool labels = true;
  bool corner_grid = true;
};

enum class Orientation { Canonical, PaperReflected };

/// A rectangle as emitted, in the figure's own y-up pixel frame.
struct SvgRect {
  std::string role;  // "big", "gap", "small", "overlap", "term"
  Integer x;
  Integer y;
  Integer side;
};

struct SvgDocument {
  std::string text;
  Integer width;
  Integer height;
  std::vector<SvgRect> rects;  // paint order
};

inline constexpr int kSvgMargin = 10;

/// Smallest multiple of n-1 that is at least 12, the default pixels per unit.
inline Integer default_unit_scale(const Radicand& n) {
  const Integer k = n.value() - 1;
  const Integer m = (12 + k - 1) / k;
  return m * k;
}

namespace detail {

inline bool is_unit_decimal(const std::string& s) {
  if (s == "0" || s == "1") return true;
  if (s.size() < 3 || s[1] != '.') return false;
  if (s[0] != '0' && s[0] != '1') return false;
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    if (s[0] == '1' && s[i] != '0') return false;
  }
  return true;
}

inline void check_style(const FigureStyle& style) {
  if (!is_unit_decimal(style.small_opacity) || !is_unit_decimal(style.overlap_opacity))
    throw precondition_error("opacity must be a decimal in [0,1]");
  if (style.unit_scale < 1) throw precondition_error("unit scale must be a positive integer");
  if (style.stroke_width < 0) throw precondition_error("stroke width must be non-negative");
}

/// a/b in lowest terms, or a plain integer.
inline std::string ratio_label(const Integer& a, const Integer& b) {
  const Integer g = boost::multiprecision::gcd(a, b);
  if (g == 0) return "0";
  const Integer num = a / g, den = b / g;
  if (den == 1) return to_string(num);
  return to_string(num) + "/" + to_string(den);
}

inline void header(std::ostringstream& os, const Integer& w, const Integer& h) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
}

inline void rect(std::ostringstream& os, const SvgRect& r, const std::string& fill, const std::string& opacity,
                 int stroke_width) {
  os << "  <rect class=\"" << r.role << "\" x=\"" << r.x << "\" y=\"" << r.y << "\" width=\"" << r.side
     << "\" height=\"" << r.side << "\" fill=\"" << fill << "\"";
  if (fill != "none") os << " fill-opacity=\"" << opacity << "\"";
  os << " stroke=\"black\" stroke-width=\"" << stroke_width << "\"/>\n";
}

inline void text(std::ostringstream& os, const Integer& x, const Integer& y, const char* anchor,
                 const std::string& body) {
  os << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor
     << "\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << body << "</text>\n";
}

}  // namespace detail

/// Packing figure. Rect coordinates inside the flipped group are y-up and
/// equal the layout's length-unit coordinates times unit_scale.
inline SvgDocument render_layout(const FineLayout& layout, const FigureStyle& style,
                                 Orientation orientation = Orientation::PaperReflected) {
  detail::check_style(style);
  if (style.unit_scale % layout.scale != 0)
    throw precondition_error("unit scale " + to_string(style.unit_scale) + " must be a multiple of n−1 = " +
                             to_string(layout.scale));
  const Integer px = style.unit_scale / layout.scale;  // pixels per fine unit
  auto place = [&](const Square& s) {
    return orientation == Orientation::PaperReflected ? reflect(s, layout.big_side) : s;
  };
  auto to_px = [&](const std::string& role, const Square& s) {
    const Square t = place(s);
    return SvgRect{role, t.corner.x * px, t.corner.y * px, t.side * px};
  };

  SvgDocument doc;
  const Integer side_px = layout.big_side * px;
  doc.width = side_px + 2 * kSvgMargin;
  doc.height = side_px + 2 * kSvgMargin;

  doc.rects.push_back(to_px("big", layout.big_square()));
  const auto gaps = corner_gap_squares(layout);
  if (style.corner_grid) {
    for (const auto& g : gaps) doc.rects.push_back(to_px("gap", g.square));
  }
  for (const Square& s : layout.small_squares()) doc.rects.push_back(to_px("small", s));
  const auto overlaps = overlap_squares(layout);
  for (const auto& o : overlaps) {
    if (o.square.side > 0) doc.rects.push_back(to_px("overlap", o.square));
  }

  std::ostringstream os;
  detail::header(os, doc.width, doc.height);
  os << "<g transform=\"translate(" << kSvgMargin << ',' << (doc.height - kSvgMargin) << ") scale(1,-1)\">\n";
  for (const SvgRect& r : doc.rects) {
    if (r.role == "big" || r.role == "gap")
      detail::rect(os, r, "none", "1", style.stroke_width);
    else if (r.role == "small")
      detail::rect(os, r, style.small_fill, style.small_opacity, style.stroke_width);
    else
      detail::rect(os, r, style.overlap_fill, style.overlap_opacity, style.stroke_width);
  }
  os << "</g>\n";

  if (style.labels) {
    // Anchored at the right edge of each labeled rect, vertically centered.
    auto label = [&](const SvgRect& r, const std::string& body) {
      const Integer x = kSvgMargin + r.x + r.side - 2;
      const Integer y = doc.height - kSvgMargin - (r.y + r.side / 2);
      detail::text(os, x, y, "end", body);
    };
    const Integer& n = layout.n.value();
    label(doc.rects.front(), "p = " + to_string(layout.p));
    label(to_px("small", layout.small_square(0)), "q = " + to_string(layout.q));
    if (!overlaps.empty() && overlaps.front().square.side > 0)
      label(to_px("overlap", overlaps.front().square),
            "(nq-p)/(n-1) = " + detail::ratio_label(n * layout.q - layout.p, layout.scale));
    if (!gaps.empty())
      label(to_px("gap", gaps.back().square),
            "(p-q)/(n-1) = " + detail::ratio_label(layout.p - layout.q, layout.scale));
  }
  os << "</svg>\n";
  doc.text = os.str();
  return doc;
}

/// One outlined p-square, "=", then n filled q-squares joined by "+".
inline SvgDocument render_equation_banner(const Radicand& n, const Candidate& c, const FigureStyle& style) {
  detail::check_style(style);
  if (c.p < 1 || c.q < 1) throw precondition_error("banner requires p >= 1 and q >= 1");
  const Integer& u = style.unit_scale;
  const Integer glyph = 30;
  const Integer big = c.p * u;
  const Integer small = c.q * u;
  const Integer tall = big > small ? big : small;
  const auto terms = static_cast<std::size_t>(n.value());

  SvgDocument doc;
  doc.width = 2 * kSvgMargin + big + glyph + small * terms + glyph * (terms - 1);
  doc.height = 2 * kSvgMargin + tall;

  std::ostringstream os;
  detail::header(os, doc.width, doc.height);
  std::vector<std::pair<Integer, std::string>> glyphs;
  Integer x = kSvgMargin;
  doc.rects.push_back(SvgRect{"big", x, kSvgMargin + (tall - big) / 2, big});
  x += big;
  glyphs.emplace_back(x + glyph / 2, "=");
  x += glyph;
  for (std::size_t i = 0; i < terms; ++i) {
    if (i > 0) {
      glyphs.emplace_back(x + glyph / 2, "+");
      x += glyph;
    }
    doc.rects.push_back(SvgRect{"term", x, kSvgMargin + (tall - small) / 2, small});
    x += small;
  }
  for (const SvgRect& r : doc.rects) {
    if (r.role == "big")
      detail::rect(os, r, "none", "1", style.stroke_width);
    else
      detail::rect(os, r, style.small_fill, style.small_opacity, style.stroke_width);
  }
  const Integer mid = kSvgMargin + tall / 2;
  for (const auto& [gx, body] : glyphs) detail::text(os, gx, mid, "middle", body);
  if (style.labels) {
    detail::text(os, kSvgMargin + big / 2, mid, "middle", "p = " + to_string(c.p));
    detail::text(os, doc.rects.back().x + small / 2, mid, "middle", "q = " + to_string(c.q));
  }
  os << "</svg>\n";
  doc.text = os.str();
  return doc;
}

}  // namespace tennenbaum

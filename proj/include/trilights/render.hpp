#pragma once

#include <optional>
#include <string>

#include "trilights/engine.hpp"
#include "trilights/matchings.hpp"
#include "trilights/propagation.hpp"

namespace trilights {

/// Geometry and palette for SVG output. Button (r, k) is centred at
/// x = (k - r/2) * spacing, y = r * row_height (plus margin).
struct SvgStyle {
  double spacing = 24.0;
  double row_height = 20.784609690826528;  // spacing * sqrt(3) / 2
  double radius = 10.0;
  double margin = 12.0;
  const char* on_fill = "#f5b700";
  const char* off_fill = "#ffffff";
  const char* stroke = "#333333";
  const char* block_fills[2] = {"#cfe3ff", "#ffd9cf"};  // upright, inverted
};

struct SvgOptions {
  SvgStyle style{};
  bool show_ids = false;
  std::string title;
};

/// n lines; line r is left-padded by n - r spaces and holds r glyphs
/// ('●' for 1, '○' for 0) separated by single spaces.
std::string to_text(const gf2::BitVector& v, int n);
inline std::string to_text(const Configuration& c) { return to_text(c.bits(), c.size()); }
inline std::string to_text(const PressSet& x) { return to_text(x.bits(), x.size()); }

std::string to_svg(const gf2::BitVector& v, int n, const SvgOptions& options = {});
inline std::string to_svg(const Configuration& c, const SvgOptions& o = {}) { return to_svg(c.bits(), c.size(), o); }
inline std::string to_svg(const PressSet& x, const SvgOptions& o = {}) { return to_svg(x.bits(), x.size(), o); }
/// Every part gets a pill-shaped outline (a ring for singletons).
std::string to_svg(const Covering& cov, const SvgOptions& options = {});
/// Blocks shaded by orientation, separators left blank, optional pressed overlay.
std::string to_svg(const BlockLayout& layout, const std::optional<PressSet>& overlay = std::nullopt,
                   const SvgOptions& options = {});

}  // namespace trilights

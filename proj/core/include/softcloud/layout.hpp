#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softcloud/tagmodel.hpp"

namespace softcloud {

enum class LayoutMode { typewriter, spiral };

std::optional<LayoutMode> layout_mode_from_name(std::string_view name);
std::string_view layout_mode_name(LayoutMode mode);

/// Weight-to-font-size mapping. literal uses the weight itself as points;
/// linear interpolates [set-min, set-max] onto [min_size, max_size].
struct FontScale {
  enum class Mode { literal, linear };

  Mode mode = Mode::linear;
  double min_size = 10.0;
  double max_size = 72.0;

  bool operator==(const FontScale&) const = default;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  bool operator==(const Rgb&) const = default;
};

/// "#rrggbb" (lowercase hex).
std::string rgb_hex(Rgb c);
std::optional<Rgb> rgb_from_hex(std::string_view hex);

struct PlacedTag {
  std::string text;  // display-cased
  std::uint64_t weight = 0;
  double x = 0, y = 0;          // top-left of the bounding box
  double width = 0, height = 0;
  double font_size = 0;
  Rgb color;

  bool operator==(const PlacedTag&) const = default;
};

struct PlacedCloud {
  std::vector<PlacedTag> tags;
  double canvas_width = 0;
  double canvas_height = 0;
  LayoutMode mode = LayoutMode::typewriter;

  bool operator==(const PlacedCloud&) const = default;
};

/// Knobs with paper-silent defaults: 1-unit padding gutter, first-letter
/// display capitalization, Archimedean r = 2*theta sampled every 0.1 rad.
struct LayoutTuning {
  double padding = 1.0;
  bool capitalize = true;
  double spiral_radial_rate = 2.0;
  double spiral_theta_step = 0.1;

  bool operator==(const LayoutTuning&) const = default;
};

// Fixed font-metric model; boxes and SVG renders share it.
double text_width(std::size_t letter_count, double font_size);
double text_height(double font_size);
double text_ascent(double font_size);

/// literal: size = weight (clamped below at 1). linear: interpolates, with a
/// degenerate set-min == set-max range mapping to max_size.
double font_size_for(std::uint64_t weight, const FontScale& scale,
                     std::uint64_t set_min, std::uint64_t set_max);

/// Rows left to right, top to bottom, wrapping when a tag no longer fits;
/// the canvas height grows as needed. Throws LayoutError when a single tag
/// is wider than the canvas.
PlacedCloud layout_typewriter(std::span<const Tag> tags, double canvas_width,
                              const FontScale& scale, const LayoutTuning& tuning = {});

/// First tag centered; each next tag takes the first collision-free spot
/// walking outward along the spiral. Throws LayoutError when a tag cannot
/// be placed inside the canvas.
PlacedCloud layout_spiral(std::span<const Tag> tags, double canvas_width,
                          double canvas_height, const FontScale& scale,
                          const LayoutTuning& tuning = {});

/// Deterministic per-(text, seed) colors from a fixed readable palette.
void assign_colors(std::vector<PlacedTag>& tags, std::uint64_t palette_seed);
void assign_colors(PlacedCloud& cloud, std::uint64_t palette_seed);

/// The palette assign_colors draws from; every entry keeps at least 4.5:1
/// contrast against a white background.
std::span<const Rgb> color_palette();

}  // namespace softcloud

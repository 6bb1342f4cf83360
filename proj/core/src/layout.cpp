#include "softcloud/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "softcloud/errors.hpp"

namespace softcloud {

std::optional<LayoutMode> layout_mode_from_name(std::string_view name) {
  if (name == "typewriter") return LayoutMode::typewriter;
  if (name == "spiral") return LayoutMode::spiral;
  return std::nullopt;
}

std::string_view layout_mode_name(LayoutMode mode) {
  return mode == LayoutMode::typewriter ? "typewriter" : "spiral";
}

std::string rgb_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::optional<Rgb> rgb_from_hex(std::string_view hex) {
  if (hex.size() == 7 && hex.front() == '#') hex.remove_prefix(1);
  if (hex.size() != 6) return std::nullopt;
  std::uint32_t value = 0;
  for (char c : hex) {
    value <<= 4;
    if (c >= '0' && c <= '9') value |= static_cast<std::uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') value |= static_cast<std::uint32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') value |= static_cast<std::uint32_t>(c - 'A' + 10);
    else return std::nullopt;
  }
  return Rgb{static_cast<std::uint8_t>(value >> 16),
             static_cast<std::uint8_t>(value >> 8),
             static_cast<std::uint8_t>(value)};
}

// Fixed-aspect glyph model. Every box and every SVG coordinate derives
// from these three formulas, so renders always match layout boxes.
double text_width(std::size_t letter_count, double font_size) {
  return 0.6 * font_size * static_cast<double>(letter_count);
}

double text_height(double font_size) { return 1.2 * font_size; }

double text_ascent(double font_size) { return 0.9 * font_size; }

double font_size_for(std::uint64_t weight, const FontScale& scale,
                     std::uint64_t set_min, std::uint64_t set_max) {
  if (scale.mode == FontScale::Mode::literal) {
    return weight < 1 ? 1.0 : static_cast<double>(weight);
  }
  if (set_min >= set_max) return scale.max_size;
  double t = static_cast<double>(weight - set_min) /
             static_cast<double>(set_max - set_min);
  return scale.min_size + t * (scale.max_size - scale.min_size);
}

namespace {

struct Box {
  double x = 0, y = 0, w = 0, h = 0;
};

// Non-overlap rule: inflating one box of a pair by the padding must not
// strictly intersect the other. Touching at exactly the gutter is fine.
bool padded_overlap(const Box& a, const Box& b, double padding) {
  return a.x - padding < b.x + b.w && b.x < a.x + a.w + padding &&
         a.y - padding < b.y + b.h && b.y < a.y + a.h + padding;
}

bool inside_canvas(const Box& b, double cw, double ch) {
  return b.x >= 0 && b.y >= 0 && b.x + b.w <= cw && b.y + b.h <= ch;
}

std::string display_text(const std::string& text, bool capitalize) {
  std::string out = text;
  if (capitalize && !out.empty() && out.front() >= 'a' && out.front() <= 'z') {
    out.front() = static_cast<char>(out.front() - 'a' + 'A');
  }
  return out;
}

struct Sized {
  double font_size = 0, w = 0, h = 0;
};

std::vector<Sized> size_tags(std::span<const Tag> tags, const FontScale& scale) {
  std::uint64_t set_min = 0, set_max = 0;
  if (!tags.empty()) {
    set_min = set_max = tags[0].weight;
    for (const Tag& t : tags) {
      set_min = std::min(set_min, t.weight);
      set_max = std::max(set_max, t.weight);
    }
  }
  std::vector<Sized> sized;
  sized.reserve(tags.size());
  for (const Tag& t : tags) {
    double fs = font_size_for(t.weight, scale, set_min, set_max);
    sized.push_back({fs, text_width(t.text.size(), fs), text_height(fs)});
  }
  return sized;
}

PlacedTag make_placed(const Tag& tag, const Sized& s, double x, double y,
                      bool capitalize) {
  PlacedTag placed;
  placed.text = display_text(tag.text, capitalize);
  placed.weight = tag.weight;
  placed.x = x;
  placed.y = y;
  placed.width = s.w;
  placed.height = s.h;
  placed.font_size = s.font_size;
  return placed;
}

}  // namespace

PlacedCloud layout_typewriter(std::span<const Tag> tags, double canvas_width,
                              const FontScale& scale, const LayoutTuning& tuning) {
  PlacedCloud cloud;
  cloud.canvas_width = canvas_width;
  cloud.canvas_height = 0;
  cloud.mode = LayoutMode::typewriter;

  std::vector<Sized> sized = size_tags(tags, scale);
  double x = 0, y = 0, row_height = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Sized& s = sized[i];
    if (s.w > canvas_width) {
      throw LayoutError("tag \"" + tags[i].text + "\" is wider (" +
                        std::to_string(s.w) + ") than the canvas (" +
                        std::to_string(canvas_width) + ")");
    }
    if (x > 0 && x + s.w > canvas_width) {
      // Wrap. Rows are top-aligned and advance by the tallest tag plus
      // the padding gutter.
      y += row_height + tuning.padding;
      x = 0;
      row_height = 0;
    }
    cloud.tags.push_back(make_placed(tags[i], s, x, y, tuning.capitalize));
    x += s.w + tuning.padding;
    row_height = std::max(row_height, s.h);
    cloud.canvas_height = std::max(cloud.canvas_height, y + s.h);
  }
  return cloud;
}

PlacedCloud layout_spiral(std::span<const Tag> tags, double canvas_width,
                          double canvas_height, const FontScale& scale,
                          const LayoutTuning& tuning) {
  PlacedCloud cloud;
  cloud.canvas_width = canvas_width;
  cloud.canvas_height = canvas_height;
  cloud.mode = LayoutMode::spiral;

  std::vector<Sized> sized = size_tags(tags, scale);
  const double cx = canvas_width / 2, cy = canvas_height / 2;
  // Once the radius clears the diagonal no point of the walk can put any
  // part of a box back inside the canvas.
  const double max_radius = std::hypot(canvas_width, canvas_height);
  std::vector<Box> placed;

  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Sized& s = sized[i];
    std::optional<Box> spot;
    double theta = 0;
    while (true) {
      double r = tuning.spiral_radial_rate * theta;
      Box candidate{cx + r * std::cos(theta) - s.w / 2,
                    cy + r * std::sin(theta) - s.h / 2, s.w, s.h};
      if (inside_canvas(candidate, canvas_width, canvas_height)) {
        bool collides = false;
        for (const Box& other : placed) {
          if (padded_overlap(candidate, other, tuning.padding)) {
            collides = true;
            break;
          }
        }
        if (!collides) {
          spot = candidate;
          break;
        }
      }
      if (r > max_radius) break;
      theta += tuning.spiral_theta_step;
    }
    if (!spot) {
      throw LayoutError("no room for tag \"" + tags[i].text +
                        "\"; try a larger canvas");
    }
    placed.push_back(*spot);
    cloud.tags.push_back(make_placed(tags[i], s, spot->x, spot->y, tuning.capitalize));
  }
  return cloud;
}

namespace {

// Ten darks, each at least 4.5:1 against white.
constexpr Rgb kPalette[] = {
    {0x1f, 0x3a, 0x93}, {0x78, 0x28, 0x1f}, {0x14, 0x5a, 0x32},
    {0x6c, 0x34, 0x83}, {0xa0, 0x40, 0x00}, {0x17, 0x20, 0x2a},
    {0x7d, 0x66, 0x08}, {0x0e, 0x66, 0x55}, {0x4a, 0x23, 0x5a},
    {0x1a, 0x52, 0x76},
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::span<const Rgb> color_palette() { return kPalette; }

void assign_colors(std::vector<PlacedTag>& tags, std::uint64_t palette_seed) {
  for (PlacedTag& tag : tags) {
    std::uint64_t h = mix(fnv1a(tag.text) ^ mix(palette_seed));
    tag.color = kPalette[h % std::size(kPalette)];
  }
}

void assign_colors(PlacedCloud& cloud, std::uint64_t palette_seed) {
  assign_colors(cloud.tags, palette_seed);
}

}  // namespace softcloud

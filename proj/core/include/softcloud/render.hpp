#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "softcloud/layout.hpp"
#include "softcloud/tagmodel.hpp"

namespace softcloud {

enum class OutputFormat { svg, html, json };

std::optional<OutputFormat> output_format_from_name(std::string_view name);
std::string_view output_format_name(OutputFormat format);

struct RenderConfig {
  Rgb background{255, 255, 255};
  bool show_counts = false;  // weight beside each tag, half its font size
  std::string font_family = "sans-serif";
  OutputFormat format = OutputFormat::svg;

  bool operator==(const RenderConfig&) const = default;
};

/// SVG 1.1 with one text element per tag in cloud order. Byte-deterministic:
/// fixed attribute order, 2-decimal coordinates, LF newlines, no timestamps.
std::string render_svg(const PlacedCloud& cloud, const RenderConfig& cfg);

/// Self-contained HTML page embedding the exact render_svg bytes inline.
std::string render_html(const PlacedCloud& cloud, const RenderConfig& cfg);

/// JSON array of {"tag","weight","rank"} under the given order, LF-terminated.
std::string export_json(const TagSet& set, const OrderSpec& order);

/// Parses an export_json document back into a TagSet. Throws IoError on
/// malformed input.
TagSet parse_tagset_json(const std::string& text);

}  // namespace softcloud

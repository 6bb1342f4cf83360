#include "softcloud/render.hpp"

#include <cstdio>

#include <json.hpp>

#include "softcloud/errors.hpp"

namespace softcloud {

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "svg") return OutputFormat::svg;
  if (name == "html") return OutputFormat::html;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string_view output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::svg: return "svg";
    case OutputFormat::html: return "html";
    case OutputFormat::json: return "json";
  }
  return "svg";
}

namespace {

// All coordinates print with two decimals; the renderer is the only
// formatter so output bytes cannot drift between call sites.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void append_text_element(std::string& svg, double x, double baseline_y,
                         double font_size, const std::string& font_family,
                         Rgb color, std::string_view content) {
  svg += "<text x=\"" + num(x) + "\" y=\"" + num(baseline_y) +
         "\" font-family=\"" + xml_escape(font_family) + "\" font-size=\"" +
         num(font_size) + "\" fill=\"" + rgb_hex(color) + "\">" +
         xml_escape(content) + "</text>\n";
}

}  // namespace

std::string render_svg(const PlacedCloud& cloud, const RenderConfig& cfg) {
  // No XML declaration: the same bytes embed verbatim in the HTML page.
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(cloud.canvas_width) + "\" height=\"" + num(cloud.canvas_height) +
         "\" viewBox=\"0 0 " + num(cloud.canvas_width) + " " +
         num(cloud.canvas_height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(cloud.canvas_width) +
         "\" height=\"" + num(cloud.canvas_height) + "\" fill=\"" +
         rgb_hex(cfg.background) + "\"/>\n";
  for (const PlacedTag& tag : cloud.tags) {
    double baseline = tag.y + text_ascent(tag.font_size);
    append_text_element(svg, tag.x, baseline, tag.font_size, cfg.font_family,
                        tag.color, tag.text);
    if (cfg.show_counts) {
      append_text_element(svg, tag.x + tag.width, baseline, tag.font_size / 2,
                          cfg.font_family, tag.color, std::to_string(tag.weight));
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_html(const PlacedCloud& cloud, const RenderConfig& cfg) {
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n";
  html += "<meta charset=\"utf-8\">\n<title>tag cloud</title>\n";
  html += "</head>\n<body>\n";
  html += render_svg(cloud, cfg);
  html += "</body>\n</html>\n";
  return html;
}

namespace {

std::string json_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

}  // namespace

std::string export_json(const TagSet& set, const OrderSpec& order) {
  std::vector<Tag> tags = order_tags(set, order);
  if (tags.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    out += "  {\"tag\": \"" + json_escape(tags[i].text) +
           "\", \"weight\": " + std::to_string(tags[i].weight) +
           ", \"rank\": " + std::to_string(i + 1) + "}";
    out += (i + 1 < tags.size()) ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

TagSet parse_tagset_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw IoError("tag JSON is not a well-formed array");
  }
  TagSet set;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("tag") || !entry.contains("weight") ||
        !entry["tag"].is_string() || !entry["weight"].is_number_unsigned()) {
      throw IoError("tag JSON entries need a \"tag\" string and a non-negative \"weight\"");
    }
    set.add(entry["tag"].get<std::string>(), entry["weight"].get<std::uint64_t>());
  }
  return set;
}

}  // namespace softcloud

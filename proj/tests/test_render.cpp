#include <doctest.h>

#include <cmath>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "softcloud/errors.hpp"
#include "softcloud/render.hpp"
#include "test_util.hpp"

using namespace softcloud;

namespace {

struct SvgText {
  double x, y, font_size;
  std::string font_family, fill, content;
};

// Recovers every <text> element with a plain regex; intentionally knows
// nothing about how the emitter builds its strings.
std::vector<SvgText> parse_text_elements(const std::string& svg) {
  static const std::regex text_re(
      "<text x=\"([0-9.]+)\" y=\"([0-9.]+)\" font-family=\"([^\"]*)\" "
      "font-size=\"([0-9.]+)\" fill=\"(#[0-9a-f]{6})\">([^<]*)</text>");
  std::vector<SvgText> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text_re);
       it != std::sregex_iterator(); ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[4]),
                   (*it)[3], (*it)[5], (*it)[6]});
  }
  return out;
}

// Minimal well-formedness check: every opened element closes in order.
bool tags_balanced(const std::string& doc) {
  static const std::set<std::string> voids = {"meta", "br", "hr", "img", "link"};
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = doc.find('<', i)) != std::string::npos) {
    std::size_t close = doc.find('>', i);
    if (close == std::string::npos) return false;
    std::string inner = doc.substr(i + 1, close - i - 1);
    i = close + 1;
    if (inner.empty() || inner.front() == '!') continue;
    if (inner.back() == '/') continue;  // self-closing
    bool closing = inner.front() == '/';
    std::string name = inner.substr(closing ? 1 : 0);
    name = name.substr(0, name.find_first_of(" \t\n"));
    if (voids.contains(name)) continue;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

PlacedCloud sample_cloud() {
  testutil::Gen gen(67);
  std::vector<Tag> tags;
  std::set<std::string> seen;
  while (tags.size() < 12) {
    std::string text = gen.lowercase_word(2, 9);
    if (seen.insert(text).second) tags.push_back({text, gen.weight(1, 15)});
  }
  PlacedCloud cloud = layout_typewriter(tags, 700, FontScale{});
  assign_colors(cloud, 3);
  return cloud;
}

}  // namespace

TEST_CASE("empty cloud renders to a background-only document") {
  PlacedCloud cloud;
  cloud.canvas_width = 800;
  cloud.canvas_height = 600;
  std::string svg = render_svg(cloud, RenderConfig{});
  CHECK(svg ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800.00\" "
        "height=\"600.00\" viewBox=\"0 0 800.00 600.00\">\n"
        "<rect x=\"0\" y=\"0\" width=\"800.00\" height=\"600.00\" "
        "fill=\"#ffffff\"/>\n"
        "</svg>\n");
}

TEST_CASE("single tag renders at its box position plus ascent") {
  PlacedCloud cloud;
  cloud.canvas_width = 200;
  cloud.canvas_height = 100;
  PlacedTag tag;
  tag.text = "Parse";
  tag.weight = 5;
  tag.x = 10;
  tag.y = 20;
  tag.font_size = 30;
  tag.width = text_width(5, 30);
  tag.height = text_height(30);
  tag.color = {0x14, 0x5a, 0x32};
  cloud.tags.push_back(tag);

  auto elements = parse_text_elements(render_svg(cloud, RenderConfig{}));
  REQUIRE(elements.size() == 1);
  CHECK(elements[0].content == "Parse");
  CHECK(elements[0].x == doctest::Approx(10.0));
  CHECK(elements[0].y == doctest::Approx(20.0 + text_ascent(30)));
  CHECK(elements[0].font_size == doctest::Approx(30.0));
  CHECK(elements[0].fill == "#145a32");
  CHECK(elements[0].font_family == "sans-serif");
}

TEST_CASE("svg round-trip recovers every placed tag") {
  PlacedCloud cloud = sample_cloud();
  std::string svg = render_svg(cloud, RenderConfig{});
  auto elements = parse_text_elements(svg);

  REQUIRE(elements.size() == cloud.tags.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const PlacedTag& tag = cloud.tags[i];
    CHECK(elements[i].content == tag.text);
    CHECK(elements[i].fill == rgb_hex(tag.color));
    // 2-decimal serialization bounds the recovery error at half a cent.
    CHECK(std::abs(elements[i].x - tag.x) <= 0.005);
    CHECK(std::abs(elements[i].y - (tag.y + text_ascent(tag.font_size))) <= 0.005);
    CHECK(std::abs(elements[i].font_size - tag.font_size) <= 0.005);
  }
  CHECK(svg.find('\r') == std::string::npos);
}

TEST_CASE("rendering twice gives identical bytes") {
  PlacedCloud cloud = sample_cloud();
  RenderConfig cfg;
  CHECK(render_svg(cloud, cfg) == render_svg(cloud, cfg));
  CHECK(render_html(cloud, cfg) == render_html(cloud, cfg));
  cfg.show_counts = true;
  CHECK(render_svg(cloud, cfg) == render_svg(cloud, cfg));
}

TEST_CASE("html embeds the exact svg bytes and stays balanced") {
  PlacedCloud cloud = sample_cloud();
  RenderConfig cfg;
  std::string svg = render_svg(cloud, cfg);
  std::string html = render_html(cloud, cfg);
  CHECK(html.find(svg) != std::string::npos);
  CHECK(tags_balanced(html));
  CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);

  PlacedCloud empty;
  empty.canvas_width = 10;
  empty.canvas_height = 10;
  CHECK(tags_balanced(render_html(empty, cfg)));
}

TEST_CASE("show-counts appends a half-size weight label per tag") {
  PlacedCloud cloud = sample_cloud();
  RenderConfig cfg;
  cfg.show_counts = true;
  auto elements = parse_text_elements(render_svg(cloud, cfg));

  REQUIRE(elements.size() == cloud.tags.size() * 2);
  for (std::size_t i = 0; i < cloud.tags.size(); ++i) {
    const PlacedTag& tag = cloud.tags[i];
    const SvgText& label = elements[2 * i + 1];
    CHECK(label.content == std::to_string(tag.weight));
    CHECK(std::abs(label.x - (tag.x + tag.width)) <= 0.005);
    CHECK(std::abs(label.font_size - tag.font_size / 2) <= 0.005);
  }
}

TEST_CASE("markup characters in tag text are escaped") {
  PlacedCloud cloud;
  cloud.canvas_width = 300;
  cloud.canvas_height = 100;
  PlacedTag tag;
  tag.text = "a<b>&\"c";
  tag.font_size = 10;
  tag.width = text_width(tag.text.size(), 10);
  tag.height = text_height(10);
  cloud.tags.push_back(tag);

  std::string svg = render_svg(cloud, RenderConfig{});
  CHECK(svg.find("a&lt;b&gt;&amp;&quot;c") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
  CHECK(tags_balanced(svg));
}

TEST_CASE("json export of one tag matches the documented shape") {
  TagSet set;
  set.add("exception", 10);
  CHECK(export_json(set, {OrderMode::frequency, 0}) ==
        "[\n  {\"tag\": \"exception\", \"weight\": 10, \"rank\": 1}\n]\n");
  CHECK(export_json(TagSet{}, {OrderMode::alphabetical, 0}) == "[]\n");
}

TEST_CASE("json ranks follow the requested order") {
  TagSet set;
  set.add("exception", 10);
  set.add("java", 7);
  set.add("line", 6);
  set.add("get", 4);
  set.add("from", 2);

  std::string json = export_json(set, {OrderMode::frequency, 0});
  std::vector<std::string> expected = {"exception", "java", "line", "get", "from"};
  std::size_t pos = 0;
  for (std::size_t rank = 1; rank <= expected.size(); ++rank) {
    std::string entry = "{\"tag\": \"" + expected[rank - 1] +
                        "\", \"weight\": " + std::to_string(set.weight_of(expected[rank - 1])) +
                        ", \"rank\": " + std::to_string(rank) + "}";
    std::size_t found = json.find(entry, pos);
    CHECK(found != std::string::npos);
    pos = found + 1;
  }
  CHECK(json.back() == '\n');
  CHECK(json.find('\r') == std::string::npos);
}

TEST_CASE("tag json round-trips through the parser") {
  TagSet set;
  set.add("alpha", 3);
  set.add("beta", 1);
  set.add("quote\"in\"tag", 2);
  TagSet parsed = parse_tagset_json(export_json(set, {OrderMode::alphabetical, 0}));
  CHECK(parsed == set);
}

TEST_CASE("malformed tag json is an io error") {
  CHECK_THROWS_AS(parse_tagset_json("not json"), IoError);
  CHECK_THROWS_AS(parse_tagset_json("{\"tag\": \"a\"}"), IoError);
  CHECK_THROWS_AS(parse_tagset_json("[{\"tag\": \"a\"}]"), IoError);
  CHECK_THROWS_AS(parse_tagset_json("[{\"tag\": 3, \"weight\": 1}]"), IoError);
  CHECK_THROWS_AS(parse_tagset_json("[{\"tag\": \"a\", \"weight\": -2}]"), IoError);
  CHECK_THROWS_AS(parse_tagset_json("[1, 2]"), IoError);
  CHECK(parse_tagset_json("[]").empty());
}

TEST_CASE("output format names round-trip") {
  for (auto format : {OutputFormat::svg, OutputFormat::html, OutputFormat::json}) {
    auto name = output_format_name(format);
    REQUIRE(output_format_from_name(name).has_value());
    CHECK(*output_format_from_name(name) == format);
  }
  CHECK_FALSE(output_format_from_name("png").has_value());
}

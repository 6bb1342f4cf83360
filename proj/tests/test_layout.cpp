#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "softcloud/errors.hpp"
#include "softcloud/layout.hpp"
#include "test_util.hpp"

using namespace softcloud;

namespace {

std::vector<Tag> make_tags(std::initializer_list<std::pair<const char*, std::uint64_t>> pairs) {
  std::vector<Tag> tags;
  for (const auto& [text, weight] : pairs) tags.push_back({text, weight});
  return tags;
}

std::vector<Tag> random_tags(testutil::Gen& gen, std::size_t count) {
  std::set<std::string> seen;
  std::vector<Tag> tags;
  while (tags.size() < count) {
    std::string text = gen.lowercase_word(1, 10);
    if (seen.insert(text).second) tags.push_back({text, gen.weight(1, 30)});
  }
  return tags;
}

// Reading order: sort placed tags by row, then by column.
std::vector<std::string> reading_order(const PlacedCloud& cloud) {
  std::vector<PlacedTag> sorted = cloud.tags;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PlacedTag& a, const PlacedTag& b) {
                     if (a.y != b.y) return a.y < b.y;
                     return a.x < b.x;
                   });
  std::vector<std::string> texts;
  for (const auto& tag : sorted) texts.push_back(tag.text);
  return texts;
}

std::vector<std::string> display_texts(std::span<const Tag> tags, bool capitalize) {
  std::vector<std::string> out;
  for (const Tag& tag : tags) {
    std::string text = tag.text;
    if (capitalize && !text.empty() && text.front() >= 'a' && text.front() <= 'z') {
      text.front() = static_cast<char>(text.front() - 'a' + 'A');
    }
    out.push_back(text);
  }
  return out;
}

}  // namespace

TEST_CASE("font size mapping") {
  FontScale literal{FontScale::Mode::literal, 10, 72};
  CHECK(font_size_for(13, literal, 1, 20) == doctest::Approx(13.0));
  CHECK(font_size_for(0, literal, 0, 20) == doctest::Approx(1.0));

  FontScale linear{FontScale::Mode::linear, 10, 72};
  CHECK(font_size_for(6, linear, 1, 11) == doctest::Approx(41.0));
  CHECK(font_size_for(1, linear, 1, 11) == doctest::Approx(10.0));
  CHECK(font_size_for(11, linear, 1, 11) == doctest::Approx(72.0));
  CHECK(font_size_for(5, linear, 5, 5) == doctest::Approx(72.0));
}

TEST_CASE("font size is monotone in weight under both modes") {
  testutil::Gen gen(7);
  for (auto mode : {FontScale::Mode::literal, FontScale::Mode::linear}) {
    FontScale scale{mode, 8, 64};
    for (int round = 0; round < 200; ++round) {
      std::uint64_t lo = gen.weight(1, 50);
      std::uint64_t hi = lo + gen.weight(0, 50);
      std::uint64_t a = lo + gen.weight(0, hi - lo);
      std::uint64_t b = lo + gen.weight(0, hi - lo);
      double fa = font_size_for(a, scale, lo, hi);
      double fb = font_size_for(b, scale, lo, hi);
      if (a > b) CHECK(fa >= fb);
      CHECK(fa > 0);
    }
  }
}

TEST_CASE("typewriter keeps one row when everything fits") {
  auto tags = make_tags({{"one", 3}, {"two", 2}, {"three", 1}});
  PlacedCloud cloud = layout_typewriter(tags, 2000, FontScale{});

  REQUIRE(cloud.tags.size() == 3);
  CHECK(cloud.tags[0].x == doctest::Approx(0.0));
  CHECK(cloud.tags[0].y == doctest::Approx(0.0));
  for (const auto& tag : cloud.tags) CHECK(tag.y == doctest::Approx(0.0));
  CHECK(cloud.tags[0].x < cloud.tags[1].x);
  CHECK(cloud.tags[1].x < cloud.tags[2].x);
  CHECK(cloud.mode == LayoutMode::typewriter);
  CHECK_FALSE(testutil::cloud_has_overlap(cloud, 1.0));
  CHECK(testutil::cloud_inside_canvas(cloud));
}

TEST_CASE("typewriter wraps and preserves reading order") {
  testutil::Gen gen(17);
  auto tags = random_tags(gen, 18);
  PlacedCloud cloud = layout_typewriter(tags, 500, FontScale{FontScale::Mode::linear, 10, 28});

  CHECK(reading_order(cloud) == display_texts(tags, true));

  double max_bottom = 0;
  std::set<double> rows;
  for (const auto& tag : cloud.tags) {
    rows.insert(tag.y);
    max_bottom = std::max(max_bottom, tag.y + tag.height);
  }
  CHECK(rows.size() > 1);
  CHECK(cloud.canvas_height == doctest::Approx(max_bottom));
  CHECK_FALSE(testutil::cloud_has_overlap(cloud, 1.0));
  CHECK(testutil::cloud_inside_canvas(cloud));
}

TEST_CASE("typewriter rejects a tag wider than the canvas") {
  auto tags = make_tags({{"short", 2}, {"unreasonablylongtagname", 9}});
  CHECK_THROWS_WITH_AS(layout_typewriter(tags, 40, FontScale{}),
                       doctest::Contains("unreasonablylongtagname"), LayoutError);
}

TEST_CASE("typewriter of nothing is an empty cloud") {
  PlacedCloud cloud = layout_typewriter({}, 300, FontScale{});
  CHECK(cloud.tags.empty());
  CHECK(cloud.canvas_height == doctest::Approx(0.0));
}

TEST_CASE("spiral centers the first tag") {
  auto tags = make_tags({{"core", 5}});
  PlacedCloud cloud = layout_spiral(tags, 400, 300, FontScale{});
  REQUIRE(cloud.tags.size() == 1);
  const PlacedTag& tag = cloud.tags[0];
  CHECK(std::abs(tag.x + tag.width / 2 - 200.0) <= 1.0);
  CHECK(std::abs(tag.y + tag.height / 2 - 150.0) <= 1.0);
  CHECK(cloud.mode == LayoutMode::spiral);
}

TEST_CASE("spiral places a second tag adjacent and disjoint") {
  auto tags = make_tags({{"first", 9}, {"second", 4}});
  PlacedCloud cloud = layout_spiral(tags, 600, 400, FontScale{});
  REQUIRE(cloud.tags.size() == 2);
  CHECK_FALSE(testutil::cloud_has_overlap(cloud, 1.0));
  CHECK(testutil::cloud_inside_canvas(cloud));

  // Adjacency: the second box's center stays within a quarter canvas of
  // the first (the walk stops at the first free spot, not the rim).
  double dx = (cloud.tags[1].x + cloud.tags[1].width / 2) -
              (cloud.tags[0].x + cloud.tags[0].width / 2);
  double dy = (cloud.tags[1].y + cloud.tags[1].height / 2) -
              (cloud.tags[0].y + cloud.tags[0].height / 2);
  CHECK(std::hypot(dx, dy) < 150.0);
}

TEST_CASE("spiral packs fifty tags without overlap") {
  testutil::Gen gen(29);
  auto tags = random_tags(gen, 50);
  PlacedCloud cloud = layout_spiral(tags, 1600, 1200, FontScale{FontScale::Mode::linear, 10, 40});
  REQUIRE(cloud.tags.size() == 50);
  CHECK_FALSE(testutil::cloud_has_overlap(cloud, 1.0));
  CHECK(testutil::cloud_inside_canvas(cloud));
}

TEST_CASE("spiral reports the tag that ran out of room") {
  auto tags = make_tags({{"giant", 50}, {"alsogiant", 50}, {"third", 50}});
  CHECK_THROWS_WITH_AS(
      layout_spiral(tags, 180, 120, FontScale{FontScale::Mode::literal, 1, 1}),
      doctest::Contains("larger canvas"), LayoutError);
}

TEST_CASE("layouts are deterministic field for field") {
  testutil::Gen gen(37);
  auto tags = random_tags(gen, 12);
  CHECK(layout_typewriter(tags, 700, FontScale{}) ==
        layout_typewriter(tags, 700, FontScale{}));
  CHECK(layout_spiral(tags, 900, 700, FontScale{}) ==
        layout_spiral(tags, 900, 700, FontScale{}));
}

TEST_CASE("random clouds satisfy the layout invariants in both modes") {
  testutil::Gen gen(43);
  FontScale scale{FontScale::Mode::linear, 9, 36};
  LayoutTuning tuning;

  for (int round = 0; round < 120; ++round) {
    auto tags = random_tags(gen, 1 + gen.index(16));
    PlacedCloud cloud = (round % 2 == 0)
                            ? layout_typewriter(tags, 1800, scale, tuning)
                            : layout_spiral(tags, 1800, 1400, scale, tuning);

    REQUIRE(cloud.tags.size() == tags.size());
    CHECK_FALSE(testutil::cloud_has_overlap(cloud, tuning.padding));
    CHECK(testutil::cloud_inside_canvas(cloud));

    // Boxes follow the shared metric model.
    for (std::size_t i = 0; i < tags.size(); ++i) {
      const PlacedTag& placed = cloud.tags[i];
      CHECK(placed.width == doctest::Approx(text_width(placed.text.size(), placed.font_size)));
      CHECK(placed.height == doctest::Approx(text_height(placed.font_size)));
      CHECK(placed.weight == tags[i].weight);
    }

    if (cloud.mode == LayoutMode::typewriter) {
      CHECK(reading_order(cloud) == display_texts(tags, tuning.capitalize));
    } else {
      const PlacedTag& first = cloud.tags[0];
      CHECK(std::abs(first.x + first.width / 2 - 900.0) <= 1.0);
      CHECK(std::abs(first.y + first.height / 2 - 700.0) <= 1.0);
    }
  }
}

TEST_CASE("capitalization is a display concern only") {
  auto tags = make_tags({{"parse", 4}, {"$var", 2}});
  LayoutTuning plain;
  plain.capitalize = false;
  PlacedCloud capped = layout_typewriter(tags, 400, FontScale{});
  PlacedCloud raw = layout_typewriter(tags, 400, FontScale{}, plain);
  CHECK(capped.tags[0].text == "Parse");
  CHECK(capped.tags[1].text == "$var");
  CHECK(raw.tags[0].text == "parse");
}

TEST_CASE("colors are deterministic and layout-independent") {
  testutil::Gen gen(59);
  auto tags = random_tags(gen, 20);
  PlacedCloud a = layout_typewriter(tags, 900, FontScale{});
  PlacedCloud b = layout_spiral(tags, 900, 900, FontScale{});
  assign_colors(a, 5);
  assign_colors(b, 5);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    CHECK(a.tags[i].color == b.tags[i].color);
  }

  PlacedCloud c = layout_typewriter(tags, 900, FontScale{});
  assign_colors(c, 6);
  bool any_color_differs = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    any_color_differs = any_color_differs || !(c.tags[i].color == a.tags[i].color);
    CHECK(c.tags[i].x == a.tags[i].x);  // palette seed never moves a box
  }
  CHECK(any_color_differs);
}

TEST_CASE("every palette entry is reachable and readable") {
  auto palette = color_palette();
  REQUIRE(palette.size() >= 8);
  for (const Rgb& color : palette) {
    CHECK(testutil::contrast_vs_white(color) >= 4.5);
  }

  testutil::Gen gen(61);
  std::set<std::string> seen_hex;
  std::vector<PlacedTag> tags(1000);
  for (auto& tag : tags) tag.text = gen.lowercase_word(1, 12);
  assign_colors(tags, 0);
  for (const auto& tag : tags) {
    seen_hex.insert(rgb_hex(tag.color));
    bool in_palette = std::any_of(palette.begin(), palette.end(),
                                  [&](Rgb p) { return p == tag.color; });
    CHECK(in_palette);
  }
  CHECK(seen_hex.size() == palette.size());
}

TEST_CASE("hex color round-trip") {
  CHECK(rgb_hex({0x1f, 0x3a, 0x93}) == "#1f3a93");
  REQUIRE(rgb_from_hex("#1f3a93").has_value());
  CHECK(*rgb_from_hex("#1f3a93") == Rgb{0x1f, 0x3a, 0x93});
  CHECK(*rgb_from_hex("ffffff") == Rgb{0xff, 0xff, 0xff});
  CHECK_FALSE(rgb_from_hex("#12345").has_value());
  CHECK_FALSE(rgb_from_hex("#12345g").has_value());
}

TEST_CASE("layout mode names round-trip") {
  CHECK(layout_mode_from_name("typewriter") == LayoutMode::typewriter);
  CHECK(layout_mode_from_name("spiral") == LayoutMode::spiral);
  CHECK_FALSE(layout_mode_from_name("packed").has_value());
  CHECK(layout_mode_name(LayoutMode::spiral) == "spiral");
}

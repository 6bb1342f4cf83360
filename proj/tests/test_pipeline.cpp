#include <doctest.h>

#include <string>
#include <vector>

#include "softcloud/errors.hpp"
#include "softcloud/pipeline.hpp"
#include "test_util.hpp"

using namespace softcloud;

namespace {

PipelineConfig fixture_config(const std::string& name) {
  PipelineConfig cfg;
  cfg.inputs.emplace_back(testutil::fixture_path(name), std::nullopt);
  return cfg;
}

}  // namespace

TEST_CASE("config serialization round-trips every field") {
  PipelineConfig cfg;
  cfg.inputs.emplace_back("a.java", ArtifactKind::java_source);
  cfg.inputs.emplace_back("notes.txt", std::nullopt);
  cfg.order = {OrderMode::random, 77};
  cfg.filters.min_weight = 3;
  cfg.filters.top_n = 40;
  cfg.filters.max_letters = 8;
  cfg.layout = LayoutMode::spiral;
  cfg.canvas_width = 1024.5;
  cfg.canvas_height = 512.25;
  cfg.scale = {FontScale::Mode::literal, 6, 90};
  cfg.tuning.padding = 2.5;
  cfg.tuning.capitalize = false;
  cfg.tuning.spiral_radial_rate = 3.5;
  cfg.tuning.spiral_theta_step = 0.05;
  cfg.palette_seed = 11;
  cfg.render.background = {0x11, 0x22, 0x33};
  cfg.render.show_counts = true;
  cfg.render.font_family = "Courier";
  cfg.render.format = OutputFormat::html;
  cfg.out = "cloud.html";
  cfg.words_out = "words.txt";
  cfg.stop_words_path = "stops.txt";
  cfg.stem_exceptions_path = "stems.tsv";
  cfg.report_path = "report.json";
  cfg.cloud_in = "cloud.json";

  PipelineConfig parsed = parse_config(serialize_config(cfg));
  CHECK(parsed == cfg);
}

TEST_CASE("defaults survive an empty config") {
  PipelineConfig parsed = parse_config("");
  CHECK(parsed == PipelineConfig{});
  CHECK(parsed.layout == LayoutMode::typewriter);
  CHECK(parsed.order.mode == OrderMode::alphabetical);
  CHECK(parsed.render.format == OutputFormat::svg);
  CHECK(parsed.out == "-");
}

TEST_CASE("config files layer over a base") {
  PipelineConfig base;
  base.order = {OrderMode::frequency, 5};
  base.inputs.emplace_back("first.txt", std::nullopt);

  PipelineConfig layered = parse_config(
      "seed = 9\n"
      "# comments and blank lines are ignored\n"
      "\n"
      "input = java-source:second.java\n"
      "canvas = 400x300\n",
      base);

  CHECK(layered.order.mode == OrderMode::frequency);  // inherited
  CHECK(layered.order.seed == 9);                     // overridden
  REQUIRE(layered.inputs.size() == 2);                // inputs append
  CHECK(layered.inputs[1].first == "second.java");
  CHECK(layered.inputs[1].second == ArtifactKind::java_source);
  CHECK(layered.canvas_width == doctest::Approx(400.0));
  CHECK(layered.canvas_height == doctest::Approx(300.0));

  // Later keys win within one file.
  PipelineConfig last = parse_config("seed=1\nseed=2\n");
  CHECK(last.order.seed == 2);
}

TEST_CASE("config parse errors name the problem") {
  CHECK_THROWS_AS(parse_config("no-such-key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed = banana\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("order = chaotic\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("canvas = 400\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("canvas = -4x300\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("min-freq = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("max-letters = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("padding = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("background = #12345z\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("format = png\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just-a-word\n"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/softcloud.conf"), IoError);
}

TEST_CASE("generate produces deterministic bytes per format") {
  PipelineConfig cfg = fixture_config("xmlparse_javadoc.txt");
  cfg.order.mode = OrderMode::frequency;

  for (auto format : {OutputFormat::svg, OutputFormat::html, OutputFormat::json}) {
    cfg.render.format = format;
    GenerateResult first = run_generate(cfg);
    GenerateResult second = run_generate(cfg);
    CHECK(first.output_bytes == second.output_bytes);
    CHECK_FALSE(first.output_bytes.empty());
    CHECK(first.distinct_tags == second.distinct_tags);
  }

  cfg.order = {OrderMode::random, 1234};
  cfg.render.format = OutputFormat::svg;
  CHECK(run_generate(cfg).output_bytes == run_generate(cfg).output_bytes);
}

TEST_CASE("generate over the reference fixture ranks exception first") {
  PipelineConfig cfg = fixture_config("xmlparse_javadoc.txt");
  cfg.order.mode = OrderMode::frequency;
  cfg.render.format = OutputFormat::json;

  GenerateResult result = run_generate(cfg);
  TagSet exported = parse_tagset_json(result.output_bytes);
  CHECK(result.output_bytes.find("{\"tag\": \"exception\"") <
        result.output_bytes.find("{\"tag\": \"java\""));
  CHECK(exported.weight_of("trace") == 4);
  CHECK(result.distinct_tags == exported.distinct_count());
  CHECK(result.total_occurrences == exported.total_occurrences());
}

TEST_CASE("generate writes the words file on request") {
  PipelineConfig cfg;
  std::string input = testutil::write_temp("wordsrc.java", "int fooBar = bazQux;");
  std::string words_path = (testutil::temp_dir() / "mined_words.txt").string();
  cfg.inputs.emplace_back(input, std::nullopt);
  cfg.words_out = words_path;

  run_generate(cfg);
  CHECK(read_file(words_path) == "fooBar\nbazQux\n");
}

TEST_CASE("generate honors filters and stop word files end to end") {
  std::string input = testutil::write_temp(
      "filtered.txt", "alpha alpha alpha beta beta the the the the gamma");
  std::string stops = testutil::write_temp("filter_stops.txt", "the\n");

  PipelineConfig cfg;
  cfg.inputs.emplace_back(input, std::nullopt);
  cfg.stop_words_path = stops;
  cfg.filters.min_weight = 2;
  cfg.render.format = OutputFormat::json;

  TagSet exported = parse_tagset_json(run_generate(cfg).output_bytes);
  CHECK(exported.weight_of("alpha") == 3);
  CHECK(exported.weight_of("beta") == 2);
  CHECK(exported.weight_of("the") == 0);
  CHECK(exported.weight_of("gamma") == 0);
}

TEST_CASE("generate rejects an empty input list and bad font ranges") {
  PipelineConfig cfg;
  CHECK_THROWS_AS(run_generate(cfg), ConfigError);

  cfg = fixture_config("prose.txt");
  cfg.scale.min_size = 50;
  cfg.scale.max_size = 20;
  CHECK_THROWS_AS(run_generate(cfg), ConfigError);
}

TEST_CASE("generate surfaces layout failures") {
  PipelineConfig cfg = fixture_config("xmlparse_javadoc.txt");
  cfg.canvas_width = 30;
  cfg.canvas_height = 20;
  CHECK_THROWS_AS(run_generate(cfg), LayoutError);
}

TEST_CASE("eval of a self-built cloud is perfect on every fixture") {
  for (const char* name : {"xmlparse_javadoc.txt", "sample.java",
                           "prose.txt", "nanoxml_doc.html"}) {
    PipelineConfig cfg = fixture_config(name);
    EvalResult result = run_eval(cfg);
    CHECK_MESSAGE(result.report.all_perfect(), name);
    CHECK(result.table.find("perfect") != std::string::npos);
  }
}

TEST_CASE("eval against a doctored cloud lists the offender") {
  PipelineConfig cfg = fixture_config("prose.txt");
  cfg.render.format = OutputFormat::json;
  TagSet honest = parse_tagset_json(run_generate(cfg).output_bytes);

  TagSet doctored = honest;
  doctored.add("vocabulary", 5);
  std::string cloud_path = testutil::write_temp(
      "doctored_cloud.json", export_json(doctored, {OrderMode::alphabetical, 0}));
  std::string report_path = (testutil::temp_dir() / "doctored_report.json").string();

  cfg.cloud_in = cloud_path;
  cfg.report_path = report_path;
  EvalResult result = run_eval(cfg);

  CHECK_FALSE(result.report.all_perfect());
  CHECK(result.table.find("vocabulary") != std::string::npos);
  CHECK(read_file(report_path).find("vocabulary") != std::string::npos);
}

TEST_CASE("eval respects the filter chain when judging") {
  // With a min-weight filter the cloud legitimately drops rare tags; the
  // oracle must apply the same filters or every rare tag would look missed.
  std::string input = testutil::write_temp(
      "rare.txt", "common common common common rare");
  PipelineConfig cfg;
  cfg.inputs.emplace_back(input, std::nullopt);
  cfg.filters.min_weight = 2;

  EvalResult result = run_eval(cfg);
  CHECK(result.report.all_perfect());
}

TEST_CASE("file helpers read back what they write") {
  std::string path = (testutil::temp_dir() / "roundtrip.bin").string();
  std::string payload = "line1\nline2\0binary";
  payload.resize(18);
  write_file(path, payload);
  CHECK(read_file(path) == payload);
  CHECK_THROWS_AS(read_file("/nonexistent/file.txt"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file.txt", "x"), IoError);
}

#include "softcloud/pipeline.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "softcloud/errors.hpp"
#include "softcloud/wordpipe.hpp"

namespace softcloud {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failure on " + path);
}

namespace {

// Shortest representation that parses back to the same double.
std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

void put(std::string& out, std::string_view key, std::string_view value) {
  out += key;
  out += " = ";
  out += value;
  out += '\n';
}

[[noreturn]] void bad_value(std::string_view key, const std::string& value) {
  throw ConfigError("bad value for " + std::string(key) + ": " + value);
}

std::uint64_t parse_u64(std::string_view key, const std::string& value) {
  std::uint64_t parsed = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || p != value.data() + value.size()) bad_value(key, value);
  return parsed;
}

double parse_double(std::string_view key, const std::string& value) {
  double parsed = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || p != value.data() + value.size()) bad_value(key, value);
  return parsed;
}

bool parse_bool(std::string_view key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  bad_value(key, value);
}

}  // namespace

std::string serialize_config(const PipelineConfig& cfg) {
  std::string out;
  for (const auto& [path, kind] : cfg.inputs) {
    if (kind) {
      put(out, "input", std::string(artifact_kind_name(*kind)) + ":" + path);
    } else {
      put(out, "input", path);
    }
  }
  put(out, "order", order_mode_name(cfg.order.mode));
  put(out, "seed", std::to_string(cfg.order.seed));
  put(out, "palette-seed", std::to_string(cfg.palette_seed));
  put(out, "min-freq", std::to_string(cfg.filters.min_weight));
  if (cfg.filters.top_n) put(out, "top", std::to_string(*cfg.filters.top_n));
  if (cfg.filters.max_letters) put(out, "max-letters", std::to_string(*cfg.filters.max_letters));
  if (cfg.stop_words_path) put(out, "stop-words", *cfg.stop_words_path);
  if (cfg.stem_exceptions_path) put(out, "stem-exceptions", *cfg.stem_exceptions_path);
  put(out, "layout", layout_mode_name(cfg.layout));
  put(out, "canvas", fmt_double(cfg.canvas_width) + "x" + fmt_double(cfg.canvas_height));
  put(out, "font-scale", cfg.scale.mode == FontScale::Mode::literal ? "literal" : "linear");
  put(out, "font-min", fmt_double(cfg.scale.min_size));
  put(out, "font-max", fmt_double(cfg.scale.max_size));
  put(out, "padding", fmt_double(cfg.tuning.padding));
  put(out, "capitalize", fmt_bool(cfg.tuning.capitalize));
  put(out, "spiral-rate", fmt_double(cfg.tuning.spiral_radial_rate));
  put(out, "spiral-step", fmt_double(cfg.tuning.spiral_theta_step));
  put(out, "background", rgb_hex(cfg.render.background));
  put(out, "show-counts", fmt_bool(cfg.render.show_counts));
  put(out, "font-family", cfg.render.font_family);
  put(out, "format", output_format_name(cfg.render.format));
  put(out, "out", cfg.out);
  if (cfg.words_out) put(out, "words-out", *cfg.words_out);
  if (cfg.report_path) put(out, "report", *cfg.report_path);
  if (cfg.cloud_in) put(out, "cloud-in", *cfg.cloud_in);
  return out;
}

PipelineConfig parse_config(const std::string& text, PipelineConfig base) {
  PipelineConfig cfg = std::move(base);
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    auto trim = [&](std::size_t begin, std::size_t end) {
      while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
      while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t')) --end;
      return line.substr(begin, end - begin);
    };
    std::string key = trim(0, eq);
    std::string value = trim(eq + 1, line.size());

    if (key == "input") {
      std::optional<ArtifactKind> kind;
      std::string path = value;
      if (std::size_t colon = value.find(':'); colon != std::string::npos) {
        if (auto k = artifact_kind_from_name(value.substr(0, colon))) {
          kind = k;
          path = value.substr(colon + 1);
        }
      }
      if (path.empty()) bad_value(key, value);
      cfg.inputs.emplace_back(std::move(path), kind);
    } else if (key == "order") {
      auto mode = order_mode_from_name(value);
      if (!mode) bad_value(key, value);
      cfg.order.mode = *mode;
    } else if (key == "seed") {
      cfg.order.seed = parse_u64(key, value);
    } else if (key == "palette-seed") {
      cfg.palette_seed = parse_u64(key, value);
    } else if (key == "min-freq") {
      cfg.filters.min_weight = parse_u64(key, value);
      if (cfg.filters.min_weight < 1) bad_value(key, value);
    } else if (key == "top") {
      cfg.filters.top_n = parse_u64(key, value);
    } else if (key == "max-letters") {
      cfg.filters.max_letters = parse_u64(key, value);
      if (*cfg.filters.max_letters < 1) bad_value(key, value);
    } else if (key == "stop-words") {
      cfg.stop_words_path = value;
    } else if (key == "stem-exceptions") {
      cfg.stem_exceptions_path = value;
    } else if (key == "layout") {
      auto mode = layout_mode_from_name(value);
      if (!mode) bad_value(key, value);
      cfg.layout = *mode;
    } else if (key == "canvas") {
      std::size_t x = value.find('x');
      if (x == std::string::npos) bad_value(key, value);
      cfg.canvas_width = parse_double(key, value.substr(0, x));
      cfg.canvas_height = parse_double(key, value.substr(x + 1));
      if (cfg.canvas_width <= 0 || cfg.canvas_height <= 0) bad_value(key, value);
    } else if (key == "font-scale") {
      if (value == "literal") cfg.scale.mode = FontScale::Mode::literal;
      else if (value == "linear") cfg.scale.mode = FontScale::Mode::linear;
      else bad_value(key, value);
    } else if (key == "font-min") {
      cfg.scale.min_size = parse_double(key, value);
      if (cfg.scale.min_size <= 0) bad_value(key, value);
    } else if (key == "font-max") {
      cfg.scale.max_size = parse_double(key, value);
      if (cfg.scale.max_size <= 0) bad_value(key, value);
    } else if (key == "padding") {
      cfg.tuning.padding = parse_double(key, value);
      if (cfg.tuning.padding < 0) bad_value(key, value);
    } else if (key == "capitalize") {
      cfg.tuning.capitalize = parse_bool(key, value);
    } else if (key == "spiral-rate") {
      cfg.tuning.spiral_radial_rate = parse_double(key, value);
      if (cfg.tuning.spiral_radial_rate <= 0) bad_value(key, value);
    } else if (key == "spiral-step") {
      cfg.tuning.spiral_theta_step = parse_double(key, value);
      if (cfg.tuning.spiral_theta_step <= 0) bad_value(key, value);
    } else if (key == "background") {
      auto rgb = rgb_from_hex(value);
      if (!rgb) bad_value(key, value);
      cfg.render.background = *rgb;
    } else if (key == "show-counts") {
      cfg.render.show_counts = parse_bool(key, value);
    } else if (key == "font-family") {
      cfg.render.font_family = value;
    } else if (key == "format") {
      auto format = output_format_from_name(value);
      if (!format) bad_value(key, value);
      cfg.render.format = *format;
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "words-out") {
      cfg.words_out = value;
    } else if (key == "report") {
      cfg.report_path = value;
    } else if (key == "cloud-in") {
      cfg.cloud_in = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  return cfg;
}

PipelineConfig load_config_file(const std::string& path, PipelineConfig base) {
  return parse_config(read_file(path), std::move(base));
}

namespace {

struct Prepared {
  Stemmer stemmer;
  FilterSpec filters;
};

Prepared prepare(const PipelineConfig& cfg) {
  // Cross-field checks live here so they also catch CLI overrides merged
  // on top of a parsed config file.
  if (cfg.scale.max_size <= cfg.scale.min_size) {
    throw ConfigError("font-max must exceed font-min");
  }
  Prepared p;
  if (cfg.stem_exceptions_path) p.stemmer.load_exceptions(*cfg.stem_exceptions_path);
  p.filters = cfg.filters;
  if (cfg.stop_words_path) {
    auto loaded = load_stop_words(*cfg.stop_words_path);
    p.filters.stop_words.insert(loaded.begin(), loaded.end());
  }
  return p;
}

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

WordList ingest_inputs(const PipelineConfig& cfg) {
  if (cfg.inputs.empty()) throw ConfigError("no input artifacts given");
  WordList combined;
  for (const auto& [path, kind] : cfg.inputs) {
    combined.append(ingest(path, kind));
  }
  return combined;
}

}  // namespace

GenerateResult run_generate(const PipelineConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Prepared p = prepare(cfg);

  WordList words = ingest_inputs(cfg);
  if (cfg.words_out) write_file(*cfg.words_out, words_file(words));

  TagSet counted = count_tags(pipeline(words, p.stemmer));
  TagSet filtered = apply_filters(counted, p.filters);

  GenerateResult result;
  if (cfg.render.format == OutputFormat::json) {
    result.output_bytes = export_json(filtered, cfg.order);
  } else {
    std::vector<Tag> ordered = order_tags(filtered, cfg.order);
    PlacedCloud cloud =
        cfg.layout == LayoutMode::typewriter
            ? layout_typewriter(ordered, cfg.canvas_width, cfg.scale, cfg.tuning)
            : layout_spiral(ordered, cfg.canvas_width, cfg.canvas_height,
                            cfg.scale, cfg.tuning);
    assign_colors(cloud, cfg.palette_seed);
    result.output_bytes = cfg.render.format == OutputFormat::svg
                              ? render_svg(cloud, cfg.render)
                              : render_html(cloud, cfg.render);
  }
  result.distinct_tags = filtered.distinct_count();
  result.total_occurrences = filtered.total_occurrences();
  result.elapsed_ms = ms_since(start);
  return result;
}

EvalResult run_eval(const PipelineConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Prepared p = prepare(cfg);

  WordList words = ingest_inputs(cfg);
  TagSet cloud = cfg.cloud_in
                     ? parse_tagset_json(read_file(*cfg.cloud_in))
                     : apply_filters(count_tags(pipeline(words, p.stemmer)), p.filters);

  EvalResult result;
  result.report = evaluate_cloud(words, cloud, p.stemmer, p.filters);
  result.table = format_report(result.report);
  if (cfg.report_path) write_file(*cfg.report_path, report_json(result.report));
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace softcloud

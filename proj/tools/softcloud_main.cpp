#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softcloud/errors.hpp"
#include "softcloud/pipeline.hpp"

using namespace softcloud;

namespace {

struct Flags {
  std::vector<std::string> inputs;
  std::string config_path, kind, order, layout, canvas, font_scale, format;
  std::string stop_words, stem_exceptions, out = "-", words_out, report, cloud_in;
  std::uint64_t seed = 0, palette_seed = 0, min_freq = 1, top = 0, max_letters = 0;
  double font_min = 10, font_max = 72;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_kind = nullptr;
  CLI::Option* o_order = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_palette_seed = nullptr;
  CLI::Option* o_min_freq = nullptr;
  CLI::Option* o_top = nullptr;
  CLI::Option* o_max_letters = nullptr;
  CLI::Option* o_stop_words = nullptr;
  CLI::Option* o_stem_exceptions = nullptr;
  CLI::Option* o_layout = nullptr;
  CLI::Option* o_canvas = nullptr;
  CLI::Option* o_font_scale = nullptr;
  CLI::Option* o_font_min = nullptr;
  CLI::Option* o_font_max = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_words_out = nullptr;
  CLI::Option* o_report = nullptr;
  CLI::Option* o_cloud_in = nullptr;
};

void register_flags(CLI::App* sub, Flags& f, bool eval_mode) {
  sub->add_option("paths", f.inputs, "artifact files to mine");
  f.o_config = sub->add_option("--config", f.config_path,
                               "key=value settings file (flags override it)");
  f.o_kind = sub->add_option(
      "--kind", f.kind,
      "treat every input as this kind: java-source, javadoc-html or plain-text");
  f.o_order = sub->add_option("--order", f.order, "tag order: alpha, freq or random");
  f.o_seed = sub->add_option("--seed", f.seed, "shuffle seed for random order");
  f.o_palette_seed = sub->add_option("--palette-seed", f.palette_seed,
                                     "color assignment seed");
  f.o_min_freq = sub->add_option("--min-freq", f.min_freq,
                                 "drop tags lighter than this weight");
  f.o_top = sub->add_option("--top", f.top, "keep only the n heaviest tags");
  f.o_max_letters = sub->add_option("--max-letters", f.max_letters,
                                    "truncate tag text to this many letters");
  f.o_stop_words = sub->add_option("--stop-words", f.stop_words,
                                   "file of words to drop, one per line");
  f.o_stem_exceptions = sub->add_option(
      "--stem-exceptions", f.stem_exceptions,
      "extra word-to-root pairs, one tab-separated pair per line");
  f.o_layout = sub->add_option("--layout", f.layout, "typewriter or spiral");
  f.o_canvas = sub->add_option("--canvas", f.canvas, "canvas size as WIDTHxHEIGHT");
  f.o_font_scale = sub->add_option("--font-scale", f.font_scale,
                                   "literal (size = weight) or linear");
  f.o_font_min = sub->add_option("--font-min", f.font_min,
                                 "smallest font size under linear scaling");
  f.o_font_max = sub->add_option("--font-max", f.font_max,
                                 "largest font size under linear scaling");
  f.o_format = sub->add_option("--format", f.format, "output format: svg, html or json");
  f.o_out = sub->add_option("--out", f.out, "output path, - for stdout");
  if (eval_mode) {
    f.o_report = sub->add_option("--report", f.report, "write a JSON metrics report here");
    f.o_cloud_in = sub->add_option("--cloud-in", f.cloud_in,
                                   "score this exported tag JSON instead of a fresh count");
  } else {
    f.o_words_out = sub->add_option("--words-out", f.words_out,
                                    "also dump the mined words, one per line");
  }
}

[[noreturn]] void bad_flag(std::string_view flag, const std::string& value) {
  throw ConfigError("bad value for " + std::string(flag) + ": " + value);
}

std::uint64_t parse_u64_or(std::string_view flag, const std::string& value) {
  std::uint64_t parsed = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || p != value.data() + value.size()) bad_flag(flag, value);
  return parsed;
}

void apply_flags(const Flags& f, PipelineConfig& cfg) {
  if (f.o_order->count()) {
    auto mode = order_mode_from_name(f.order);
    if (!mode) bad_flag("--order", f.order);
    cfg.order.mode = *mode;
  }
  if (f.o_seed->count()) cfg.order.seed = f.seed;
  if (f.o_palette_seed->count()) cfg.palette_seed = f.palette_seed;
  if (f.o_min_freq->count()) {
    if (f.min_freq < 1) bad_flag("--min-freq", std::to_string(f.min_freq));
    cfg.filters.min_weight = f.min_freq;
  }
  if (f.o_top->count()) cfg.filters.top_n = f.top;
  if (f.o_max_letters->count()) {
    if (f.max_letters < 1) bad_flag("--max-letters", std::to_string(f.max_letters));
    cfg.filters.max_letters = f.max_letters;
  }
  if (f.o_stop_words->count()) cfg.stop_words_path = f.stop_words;
  if (f.o_stem_exceptions->count()) cfg.stem_exceptions_path = f.stem_exceptions;
  if (f.o_layout->count()) {
    auto mode = layout_mode_from_name(f.layout);
    if (!mode) bad_flag("--layout", f.layout);
    cfg.layout = *mode;
  }
  if (f.o_canvas->count()) {
    std::size_t x = f.canvas.find('x');
    if (x == std::string::npos) bad_flag("--canvas", f.canvas);
    try {
      cfg.canvas_width = std::stod(f.canvas.substr(0, x));
      cfg.canvas_height = std::stod(f.canvas.substr(x + 1));
    } catch (const std::exception&) {
      bad_flag("--canvas", f.canvas);
    }
    if (cfg.canvas_width <= 0 || cfg.canvas_height <= 0) bad_flag("--canvas", f.canvas);
  }
  if (f.o_font_scale->count()) {
    if (f.font_scale == "literal") cfg.scale.mode = FontScale::Mode::literal;
    else if (f.font_scale == "linear") cfg.scale.mode = FontScale::Mode::linear;
    else bad_flag("--font-scale", f.font_scale);
  }
  if (f.o_font_min->count()) cfg.scale.min_size = f.font_min;
  if (f.o_font_max->count()) cfg.scale.max_size = f.font_max;
  if (f.o_format->count()) {
    auto format = output_format_from_name(f.format);
    if (!format) bad_flag("--format", f.format);
    cfg.render.format = *format;
  }
  if (f.o_out->count()) cfg.out = f.out;
  if (f.o_words_out && f.o_words_out->count()) cfg.words_out = f.words_out;
  if (f.o_report && f.o_report->count()) cfg.report_path = f.report;
  if (f.o_cloud_in && f.o_cloud_in->count()) cfg.cloud_in = f.cloud_in;

  std::optional<ArtifactKind> kind;
  if (f.o_kind->count()) {
    kind = artifact_kind_from_name(f.kind);
    if (!kind) bad_flag("--kind", f.kind);
  }
  for (const std::string& path : f.inputs) cfg.inputs.emplace_back(path, kind);
}

// The config file's own format key must beat the extension rule, so the
// already-validated text is scanned once for the bare key.
bool config_sets_key(const std::string& text, std::string_view key) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string_view line(text.data() + pos, nl - pos);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line.substr(first, key.size()) == key) {
      std::size_t after = line.find_first_not_of(" \t", first + key.size());
      if (after != std::string_view::npos && line[after] == '=') return true;
    }
    pos = nl + 1;
  }
  return false;
}

void resolve_format_from_out(PipelineConfig& cfg, bool format_explicit) {
  if (format_explicit || cfg.out == "-") return;
  std::size_t dot = cfg.out.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : cfg.out.substr(dot + 1);
  auto format = output_format_from_name(ext);
  if (!format) {
    throw ConfigError("cannot infer output format from " + cfg.out + "; pass --format");
  }
  cfg.render.format = *format;
}

PipelineConfig build_config(const Flags& f, bool generate) {
  PipelineConfig cfg;
  if (const char* env = std::getenv("SOFTCLOUD_SEED")) {
    cfg.order.seed = parse_u64_or("SOFTCLOUD_SEED", env);
  }
  bool file_sets_format = false;
  if (f.o_config->count()) {
    std::string text = read_file(f.config_path);
    cfg = parse_config(text, std::move(cfg));
    file_sets_format = config_sets_key(text, "format");
  }
  apply_flags(f, cfg);
  if (generate) {
    resolve_format_from_out(cfg, f.o_format->count() > 0 || file_sets_format);
  }
  return cfg;
}

int do_generate(CLI::App* sub, const Flags& f) {
  PipelineConfig cfg = build_config(f, true);
  if (cfg.inputs.empty()) {
    std::cerr << "error: no input artifacts given\n\n" << sub->help();
    return 2;
  }
  GenerateResult result = run_generate(cfg);
  if (cfg.out == "-") {
    std::cout << result.output_bytes;
  } else {
    write_file(cfg.out, result.output_bytes);
  }
  std::cerr << result.distinct_tags << " tags, " << result.elapsed_ms << " ms\n";
  return 0;
}

int do_eval(CLI::App* sub, const Flags& f) {
  PipelineConfig cfg = build_config(f, false);
  if (cfg.inputs.empty()) {
    std::cerr << "error: no input artifacts given\n\n" << sub->help();
    return 2;
  }
  EvalResult result = run_eval(cfg);
  std::cout << result.table;
  std::cerr << result.report.rows.size() << " tags, " << result.elapsed_ms << " ms\n";
  return result.report.all_perfect() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softcloud: tag clouds mined from software artifacts"};
  app.set_version_flag("--version", "softcloud 0.1.0");
  CLI::App* gen = app.add_subcommand("generate", "mine an artifact and render its tag cloud");
  CLI::App* ev = app.add_subcommand("eval", "recount tags with a brute-force oracle and score the cloud");
  app.require_subcommand(1);

  Flags fg, fe;
  register_flags(gen, fg, false);
  register_flags(ev, fe, true);

  if (argc <= 1) {
    std::cerr << "error: no input artifacts given\n\n" << app.help();
    return 2;
  }

  // generate is the default subcommand; top-level help and version stay
  // at the top level.
  std::vector<const char*> args;
  args.push_back(argv[0]);
  std::string_view first = argv[1];
  bool top_level = first == "generate" || first == "eval" || first == "-h" ||
                   first == "--help" || first == "--version";
  if (!top_level) args.push_back("generate");
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);

  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return gen->parsed() ? do_generate(gen, fg) : do_eval(ev, fe);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const LayoutError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

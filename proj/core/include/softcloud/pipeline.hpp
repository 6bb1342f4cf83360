#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softcloud/artifact.hpp"
#include "softcloud/eval.hpp"
#include "softcloud/layout.hpp"
#include "softcloud/render.hpp"
#include "softcloud/tagmodel.hpp"

namespace softcloud {

/// Everything one run depends on. Serializable to a key=value config file;
/// equal configs over equal input bytes produce byte-identical outputs.
struct PipelineConfig {
  std::vector<std::pair<std::string, std::optional<ArtifactKind>>> inputs;

  OrderSpec order;
  FilterSpec filters;

  LayoutMode layout = LayoutMode::typewriter;
  double canvas_width = 800.0;
  double canvas_height = 600.0;
  FontScale scale;
  LayoutTuning tuning;
  std::uint64_t palette_seed = 0;

  RenderConfig render;
  std::string out = "-";
  std::optional<std::string> words_out;
  std::optional<std::string> stop_words_path;
  std::optional<std::string> stem_exceptions_path;
  std::optional<std::string> report_path;   // eval: JSON metrics report
  std::optional<std::string> cloud_in;      // eval: pre-built cloud JSON

  bool operator==(const PipelineConfig&) const = default;
};

/// key=value serialization, one field per line, unset optionals omitted.
std::string serialize_config(const PipelineConfig& cfg);

/// Parses serialize_config output (or a hand-written file of the same
/// shape). Keys override the base config, so callers can stack defaults,
/// environment, file, and flags in precedence order; input lines append.
/// Unknown keys and malformed values throw ConfigError.
PipelineConfig parse_config(const std::string& text, PipelineConfig base = {});
PipelineConfig load_config_file(const std::string& path, PipelineConfig base = {});

struct GenerateResult {
  std::string output_bytes;          // rendered artifact
  std::size_t distinct_tags = 0;     // post-filter
  std::uint64_t total_occurrences = 0;
  std::int64_t elapsed_ms = 0;
};

struct EvalResult {
  MetricsReport report;
  std::string table;       // printable metrics table
  std::int64_t elapsed_ms = 0;
};

/// ingest -> pipeline -> count -> filter -> order -> layout -> colors ->
/// render. Writes words_out when set; the rendered bytes come back to the
/// caller (the CLI decides between stdout and a file).
GenerateResult run_generate(const PipelineConfig& cfg);

/// Rebuilds the cloud (or loads cloud_in) and judges it against the
/// independent oracle count. Writes report_path when set.
EvalResult run_eval(const PipelineConfig& cfg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace softcloud

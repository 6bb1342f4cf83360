#include "softcloud/eval.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <unordered_map>

namespace softcloud {

TagJudgment TagJudgment::make(std::string tag, std::uint64_t relevant,
                              std::uint64_t retrieved) {
  TagJudgment j;
  j.tag = std::move(tag);
  j.relevant = relevant;
  j.retrieved = retrieved;
  j.correct = std::min(relevant, retrieved);
  return j;
}

std::optional<double> precision(const TagJudgment& j) {
  if (j.retrieved == 0) return std::nullopt;
  return static_cast<double>(j.correct) / static_cast<double>(j.retrieved);
}

std::optional<double> recall(const TagJudgment& j) {
  if (j.relevant == 0) return std::nullopt;
  return static_cast<double>(j.correct) / static_cast<double>(j.relevant);
}

double f_measure(double p, double r) {
  if (p == 0.0 && r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

bool MetricsRow::perfect() const {
  return precision && *precision == 1.0 && recall && *recall == 1.0;
}

bool MetricsReport::all_perfect() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const MetricsRow& r) { return r.perfect(); });
}

std::vector<MetricsRow> MetricsReport::imperfect() const {
  std::vector<MetricsRow> out;
  for (const MetricsRow& r : rows) {
    if (!r.perfect()) out.push_back(r);
  }
  return out;
}

namespace {

MetricsRow judge(TagJudgment j) {
  MetricsRow row;
  row.precision = precision(j);
  row.recall = recall(j);
  if (row.precision && row.recall) {
    row.f_measure = f_measure(*row.precision, *row.recall);
  }
  row.judgment = std::move(j);
  return row;
}

std::optional<double> mean_of(const std::vector<MetricsRow>& rows,
                              std::optional<double> MetricsRow::* field) {
  double sum = 0;
  std::size_t n = 0;
  for (const MetricsRow& r : rows) {
    if (r.*field) {
      sum += *(r.*field);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace

MetricsReport evaluate_cloud(const WordList& artifact, const TagSet& cloud,
                             const Stemmer& stemmer, const FilterSpec& filters) {
  // Brute-force reference count. Deliberately a flat single-pass hash
  // counter rather than TagSet so the bookkeeping under test is not the
  // bookkeeping doing the judging.
  std::unordered_map<std::string, std::uint64_t> oracle;
  for (const RawWord& raw : artifact.words) {
    for (const std::string& fragment : split_word(raw.text)) {
      ++oracle[stemmer.stem(fragment)];
    }
  }

  // A cloud built under filters legitimately drops or truncates tags; the
  // reference counts pass through the same declared filter spec so only
  // counting disagreements surface. The counting itself stays independent.
  if (!(filters == FilterSpec{})) {
    TagSet counted;
    for (const auto& [tag, weight] : oracle) counted.add(tag, weight);
    TagSet filtered = apply_filters(counted, filters);
    oracle.clear();
    for (const auto& [tag, weight] : filtered.tags()) {
      oracle.emplace(tag, weight);
    }
  }

  std::map<std::string, TagJudgment> judgments;
  for (const auto& [tag, relevant] : oracle) {
    judgments.emplace(tag, TagJudgment::make(tag, relevant, cloud.weight_of(tag)));
  }
  for (const auto& [tag, retrieved] : cloud.tags()) {
    if (!judgments.contains(tag)) {
      judgments.emplace(tag, TagJudgment::make(tag, 0, retrieved));
    }
  }

  MetricsReport report;
  report.rows.reserve(judgments.size());
  for (auto& [_, j] : judgments) {
    report.rows.push_back(judge(std::move(j)));
  }
  report.mean_precision = mean_of(report.rows, &MetricsRow::precision);
  report.mean_recall = mean_of(report.rows, &MetricsRow::recall);
  report.mean_f_measure = mean_of(report.rows, &MetricsRow::f_measure);
  return report;
}

std::string format_metric(std::optional<double> value) {
  if (!value) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *value);
  std::string out = buf;
  if (out.size() > 2 && out.compare(out.size() - 2, 2, ".0") == 0) {
    out.erase(out.size() - 2);
  }
  return out;
}

namespace {

void append_row(std::string& out, const std::array<std::string, 7>& cells,
                const std::array<std::size_t, 7>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += cells[i];
    if (i + 1 < cells.size()) {
      out.append(widths[i] - cells[i].size() + 2, ' ');
    }
  }
  out += '\n';
}

std::array<std::string, 7> row_cells(const MetricsRow& r) {
  return {r.judgment.tag,
          std::to_string(r.judgment.relevant),
          std::to_string(r.judgment.correct),
          std::to_string(r.judgment.retrieved),
          format_metric(r.precision),
          format_metric(r.recall),
          format_metric(r.f_measure)};
}

}  // namespace

std::string format_report(const MetricsReport& report, bool all_rows) {
  std::vector<MetricsRow> rows = all_rows ? report.rows : report.imperfect();

  const std::array<std::string, 7> header = {"tag",       "relevant", "correct",
                                             "retrieved", "precision", "recall",
                                             "f-measure"};
  const std::array<std::string, 7> means = {"(mean)", "", "", "",
                                            format_metric(report.mean_precision),
                                            format_metric(report.mean_recall),
                                            format_metric(report.mean_f_measure)};
  std::array<std::size_t, 7> widths{};
  for (std::size_t i = 0; i < 7; ++i) widths[i] = std::max(header[i].size(), means[i].size());
  std::vector<std::array<std::string, 7>> body;
  body.reserve(rows.size());
  for (const MetricsRow& r : rows) {
    body.push_back(row_cells(r));
    for (std::size_t i = 0; i < 7; ++i) widths[i] = std::max(widths[i], body.back()[i].size());
  }

  std::string out;
  append_row(out, header, widths);
  for (const auto& cells : body) append_row(out, cells, widths);
  if (!all_rows && body.empty()) {
    out += "(all " + std::to_string(report.rows.size()) + " tags perfect)\n";
  }
  append_row(out, means, widths);
  return out;
}

namespace {

std::string json_number(std::optional<double> value) {
  if (!value) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", *value);
  return buf;
}

}  // namespace

std::string report_json(const MetricsReport& report) {
  std::string out = "{\n  \"tags\": [";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const MetricsRow& r = report.rows[i];
    out += (i == 0) ? "\n" : ",\n";
    out += "    {\"tag\": \"" + r.judgment.tag +
           "\", \"relevant\": " + std::to_string(r.judgment.relevant) +
           ", \"correct\": " + std::to_string(r.judgment.correct) +
           ", \"retrieved\": " + std::to_string(r.judgment.retrieved) +
           ", \"precision\": " + json_number(r.precision) +
           ", \"recall\": " + json_number(r.recall) +
           ", \"f_measure\": " + json_number(r.f_measure) + "}";
  }
  out += report.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"mean_precision\": " + json_number(report.mean_precision) + ",\n";
  out += "  \"mean_recall\": " + json_number(report.mean_recall) + ",\n";
  out += "  \"mean_f_measure\": " + json_number(report.mean_f_measure) + "\n";
  out += "}\n";
  return out;
}

}  // namespace softcloud

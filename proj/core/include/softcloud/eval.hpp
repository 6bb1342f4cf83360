#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softcloud/artifact.hpp"
#include "softcloud/tagmodel.hpp"
#include "softcloud/wordpipe.hpp"

namespace softcloud {

/// Per-tag comparison of the oracle count (relevant) against the cloud
/// count (retrieved); correct is their agreement, min(relevant, retrieved).
struct TagJudgment {
  std::string tag;
  std::uint64_t relevant = 0;
  std::uint64_t retrieved = 0;
  std::uint64_t correct = 0;

  static TagJudgment make(std::string tag, std::uint64_t relevant,
                          std::uint64_t retrieved);

  bool operator==(const TagJudgment&) const = default;
};

/// correct / retrieved; nullopt (reported as N/A) when retrieved == 0.
std::optional<double> precision(const TagJudgment& j);

/// correct / relevant; nullopt when relevant == 0.
std::optional<double> recall(const TagJudgment& j);

/// Harmonic mean 2pr/(p+r); defined as 0 when p == r == 0.
double f_measure(double p, double r);

struct MetricsRow {
  TagJudgment judgment;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f_measure;

  bool perfect() const;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;  // every tag on either side, sorted by text
  std::optional<double> mean_precision;
  std::optional<double> mean_recall;
  std::optional<double> mean_f_measure;

  bool all_perfect() const;
  std::vector<MetricsRow> imperfect() const;
};

/// Recomputes tag frequencies with a single-pass oracle counter that shares
/// no aggregation code with count_tags, then judges every tag found on
/// either side. When the cloud was built under filters, pass the same spec
/// so the reference counts drop and truncate identically.
MetricsReport evaluate_cloud(const WordList& artifact, const TagSet& cloud,
                             const Stemmer& stemmer = default_stemmer(),
                             const FilterSpec& filters = {});

/// Formats a metric the way the paper's tables print them: one decimal,
/// integers without the trailing ".0", N/A when undefined.
std::string format_metric(std::optional<double> value);

/// Human-readable table; imperfect rows only unless everything is listed
/// via all_rows. Full-precision values go to report_json instead.
std::string format_report(const MetricsReport& report, bool all_rows = false);

/// Machine-readable report with full-precision metrics (null when N/A).
std::string report_json(const MetricsReport& report);

}  // namespace softcloud

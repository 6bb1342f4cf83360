#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace softcloud {

/// A root word and its occurrence count across the artifact.
struct Tag {
  std::string text;
  std::uint64_t weight = 0;

  bool operator==(const Tag&) const = default;
};

/// Multiset of tags for one artifact.
class TagSet {
 public:
  void add(const std::string& root, std::uint64_t count = 1);

  std::uint64_t weight_of(const std::string& root) const;  // 0 when absent
  std::size_t distinct_count() const { return tags_.size(); }
  std::uint64_t total_occurrences() const { return total_; }
  bool empty() const { return tags_.empty(); }

  const std::map<std::string, std::uint64_t>& tags() const { return tags_; }

  bool operator==(const TagSet&) const = default;

 private:
  std::map<std::string, std::uint64_t> tags_;
  std::uint64_t total_ = 0;
};

enum class OrderMode { alphabetical, frequency, random };

std::optional<OrderMode> order_mode_from_name(std::string_view name);
std::string_view order_mode_name(OrderMode mode);

/// Ordering request; the seed matters only in random mode.
struct OrderSpec {
  OrderMode mode = OrderMode::alphabetical;
  std::uint64_t seed = 0;

  bool operator==(const OrderSpec&) const = default;
};

/// Tag filters, applied in the fixed order
/// stop-words -> min-weight -> top-n -> max-letters truncation.
struct FilterSpec {
  std::uint64_t min_weight = 1;
  std::optional<std::size_t> top_n;
  std::set<std::string> stop_words;
  std::optional<std::size_t> max_letters;

  bool operator==(const FilterSpec&) const = default;
};

/// Exact multiplicity count of every root.
TagSet count_tags(const std::vector<std::string>& roots);

/// alphabetical: ascending text. frequency: descending weight, ties by
/// ascending text. random: a permutation fully determined by the seed.
std::vector<Tag> order_tags(const TagSet& set, const OrderSpec& spec);

/// Applies the filters; max-letters truncation merges collisions by
/// summing their weights.
TagSet apply_filters(const TagSet& set, const FilterSpec& spec);

/// Loads a stop-word file, one word per line, case-folded.
std::set<std::string> load_stop_words(const std::string& path);

}  // namespace softcloud

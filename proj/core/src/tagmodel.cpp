#include "softcloud/tagmodel.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "softcloud/errors.hpp"

namespace softcloud {

void TagSet::add(const std::string& root, std::uint64_t count) {
  if (count == 0) return;
  tags_[root] += count;
  total_ += count;
}

std::uint64_t TagSet::weight_of(const std::string& root) const {
  auto it = tags_.find(root);
  return it == tags_.end() ? 0 : it->second;
}

std::optional<OrderMode> order_mode_from_name(std::string_view name) {
  if (name == "alpha" || name == "alphabetical") return OrderMode::alphabetical;
  if (name == "freq" || name == "frequency") return OrderMode::frequency;
  if (name == "random") return OrderMode::random;
  return std::nullopt;
}

std::string_view order_mode_name(OrderMode mode) {
  switch (mode) {
    case OrderMode::alphabetical: return "alpha";
    case OrderMode::frequency: return "freq";
    case OrderMode::random: return "random";
  }
  return "alpha";
}

TagSet count_tags(const std::vector<std::string>& roots) {
  TagSet set;
  for (const std::string& root : roots) set.add(root);
  return set;
}

namespace {

// Frequency rule: heavier first, equal weights alphabetical.
bool freq_less(const Tag& a, const Tag& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.text < b.text;
}

}  // namespace

std::vector<Tag> order_tags(const TagSet& set, const OrderSpec& spec) {
  std::vector<Tag> tags;
  tags.reserve(set.distinct_count());
  for (const auto& [text, weight] : set.tags()) {
    tags.push_back(Tag{text, weight});  // map iteration is already a-z
  }
  switch (spec.mode) {
    case OrderMode::alphabetical:
      break;
    case OrderMode::frequency:
      std::sort(tags.begin(), tags.end(), freq_less);
      break;
    case OrderMode::random: {
      // Hand-rolled Fisher-Yates: std::shuffle's draw sequence is not
      // pinned by the standard, and clouds must reproduce cross-platform.
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = tags.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(tags[i - 1], tags[j]);
      }
      break;
    }
  }
  return tags;
}

TagSet apply_filters(const TagSet& set, const FilterSpec& spec) {
  TagSet survivors;
  for (const auto& [text, weight] : set.tags()) {
    if (spec.stop_words.contains(text)) continue;
    if (weight < spec.min_weight) continue;
    survivors.add(text, weight);
  }

  if (spec.top_n) {
    std::vector<Tag> ranked = order_tags(survivors, {OrderMode::frequency, 0});
    if (ranked.size() > *spec.top_n) ranked.resize(*spec.top_n);
    TagSet top;
    for (const Tag& t : ranked) top.add(t.text, t.weight);
    survivors = std::move(top);
  }

  if (spec.max_letters) {
    TagSet truncated;
    for (const auto& [text, weight] : survivors.tags()) {
      truncated.add(text.substr(0, *spec.max_letters), weight);
    }
    survivors = std::move(truncated);
  }
  return survivors;
}

std::set<std::string> load_stop_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read stop-word file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (char& c : line) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    words.insert(line);
  }
  return words;
}

}  // namespace softcloud

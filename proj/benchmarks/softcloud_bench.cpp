#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "softcloud/artifact.hpp"
#include "softcloud/layout.hpp"
#include "softcloud/render.hpp"
#include "softcloud/tagmodel.hpp"
#include "softcloud/wordpipe.hpp"

using namespace softcloud;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::string word;
  for (std::size_t i = 0; i < len; ++i) word.push_back(static_cast<char>('a' + rng() % 26));
  return word;
}

std::string random_identifier(std::mt19937_64& rng) {
  std::string ident = random_word(rng, 2, 8);
  std::size_t parts = rng() % 4;
  for (std::size_t i = 0; i < parts; ++i) {
    std::string part = random_word(rng, 2, 8);
    part.front() = static_cast<char>(part.front() - 'a' + 'A');
    ident += part;
  }
  return ident;
}

std::vector<std::string> identifier_corpus(std::size_t count) {
  std::mt19937_64 rng(12345);
  std::vector<std::string> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) words.push_back(random_identifier(rng));
  return words;
}

std::string java_source(std::size_t identifier_count) {
  std::string source = "class Bench {\nvoid body() {\n";
  for (const auto& ident : identifier_corpus(identifier_count)) source += ident + ";\n";
  source += "}\n}\n";
  return source;
}

std::vector<Tag> tag_sample(std::size_t count) {
  std::mt19937_64 rng(777);
  TagSet set;
  while (set.distinct_count() < count) set.add(random_word(rng, 2, 10), 1 + rng() % 30);
  return order_tags(set, {OrderMode::frequency, 0});
}

void bm_split_word(benchmark::State& state) {
  auto words = identifier_corpus(1000);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_word(words[i++ % words.size()]));
  }
}
BENCHMARK(bm_split_word);

void bm_stem(benchmark::State& state) {
  const Stemmer& st = default_stemmer();
  const std::vector<std::string> samples = {"synchronized", "interfaces", "parsing",
                                            "occurred",     "running",    "mozilla",
                                            "exceptions",   "documents"};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(st.stem(samples[i++ % samples.size()]));
  }
}
BENCHMARK(bm_stem);

void bm_extract_java(benchmark::State& state) {
  std::string source = java_source(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_words_java(source));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * source.size()));
}
BENCHMARK(bm_extract_java)->Arg(1000)->Arg(10000);

void bm_count_tags(benchmark::State& state) {
  WordList list;
  for (auto& ident : identifier_corpus(static_cast<std::size_t>(state.range(0)))) {
    RawWord w;
    w.text = std::move(ident);
    w.ordinal = list.words.size();
    list.words.push_back(std::move(w));
  }
  auto roots = pipeline(list);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_tags(roots));
  }
}
BENCHMARK(bm_count_tags)->Arg(1000)->Arg(10000);

void bm_layout_typewriter(benchmark::State& state) {
  auto tags = tag_sample(static_cast<std::size_t>(state.range(0)));
  FontScale scale{FontScale::Mode::linear, 8, 40};
  for (auto _ : state) {
    benchmark::DoNotOptimize(layout_typewriter(tags, 4000, scale));
  }
}
BENCHMARK(bm_layout_typewriter)->Arg(100)->Arg(1000);

void bm_layout_spiral(benchmark::State& state) {
  auto tags = tag_sample(static_cast<std::size_t>(state.range(0)));
  FontScale scale{FontScale::Mode::linear, 8, 40};
  for (auto _ : state) {
    benchmark::DoNotOptimize(layout_spiral(tags, 6000, 6000, scale));
  }
}
BENCHMARK(bm_layout_spiral)->Arg(50)->Arg(200);

void bm_end_to_end(benchmark::State& state) {
  std::string source = java_source(static_cast<std::size_t>(state.range(0)));
  FontScale scale{FontScale::Mode::linear, 8, 32};
  for (auto _ : state) {
    TagSet tags = count_tags(pipeline(extract_words_java(source)));
    auto ordered = order_tags(tags, {OrderMode::frequency, 0});
    PlacedCloud cloud = layout_typewriter(ordered, 6000, scale);
    assign_colors(cloud, 0);
    benchmark::DoNotOptimize(render_svg(cloud, RenderConfig{}));
  }
}
BENCHMARK(bm_end_to_end)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();

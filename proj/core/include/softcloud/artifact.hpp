#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softcloud {

enum class ArtifactKind { java_source, javadoc_html, plain_text };

/// Parses "java-source" / "javadoc-html" / "plain-text"; nullopt otherwise.
std::optional<ArtifactKind> artifact_kind_from_name(std::string_view name);
std::string_view artifact_kind_name(ArtifactKind kind);

/// One unsplit word exactly as it appeared in the artifact.
struct RawWord {
  std::string text;
  ArtifactKind source = ArtifactKind::plain_text;
  std::size_t ordinal = 0;

  bool operator==(const RawWord&) const = default;
};

/// The ordered words mined from one artifact (or several, concatenated).
struct WordList {
  std::vector<RawWord> words;
  std::string artifact_path;

  /// Appends another list, renumbering its ordinals to stay contiguous.
  void append(const WordList& other);
};

/// Mines identifiers, dotted package paths, and comment words from Java
/// source. String/char literal contents, numeric literals, and reserved
/// words are excluded; one RawWord per occurrence.
WordList extract_words_java(std::string_view source_text);

/// Strips markup, scripts, and styles from HTML and tokenizes the visible
/// text. Interior '.', '_' and '$' survive inside identifier-shaped tokens
/// so "java.lang.String" stays whole; sentence periods are trimmed.
WordList extract_words_javadoc_html(std::string_view html_text);

/// Tokenizes prose on whitespace and punctuation, keeping intra-token
/// '.', '_' and '-' ("use-case" stays whole for the splitter stage).
WordList extract_words_text(std::string_view text);

/// Reads one file and dispatches on its resolved kind. With no explicit
/// kind: .java -> java-source, .html/.htm -> javadoc-html, known text
/// extensions (or none) -> plain-text, anything else -> ConfigError.
WordList ingest(const std::string& path, std::optional<ArtifactKind> kind = {});

/// Ingests several files and concatenates their word lists in argument order.
WordList ingest_all(const std::vector<std::string>& paths,
                    std::optional<ArtifactKind> kind = {});

/// Serializes a word list one word per line, LF newlines (the words file).
std::string words_file(const WordList& list);

/// True when the token equals a Java reserved word (incl. true/false/null).
bool is_java_keyword(std::string_view token);

}  // namespace softcloud

#include "softcloud/artifact.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "softcloud/errors.hpp"

namespace softcloud {

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Java identifier charset; '.' keeps dotted package paths whole so
// "org.mozilla.classfile" survives as one word.
bool ident_start(char c) { return is_letter(c) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || is_digit(c) || c == '.'; }

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

void push_word(WordList& list, std::string text, ArtifactKind kind) {
  RawWord w;
  w.text = std::move(text);
  w.source = kind;
  w.ordinal = list.words.size();
  list.words.push_back(std::move(w));
}

// The 50 reserved words of the language plus the three literal keywords.
const std::unordered_set<std::string_view>& java_keywords() {
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert",   "boolean",  "break",      "byte",      "case",
      "catch",    "char",     "class",    "const",      "continue",  "default",
      "do",       "double",   "else",     "enum",       "extends",   "final",
      "finally",  "float",    "for",      "goto",       "if",        "implements",
      "import",   "instanceof", "int",    "interface",  "long",      "native",
      "new",      "package",  "private",  "protected",  "public",    "return",
      "short",    "static",   "strictfp", "super",      "switch",    "synchronized",
      "this",     "throw",    "throws",   "transient",  "try",       "void",
      "volatile", "while",    "true",     "false",      "null"};
  return kw;
}

}  // namespace

bool is_java_keyword(std::string_view token) {
  return java_keywords().contains(token);
}

std::optional<ArtifactKind> artifact_kind_from_name(std::string_view name) {
  if (name == "java-source") return ArtifactKind::java_source;
  if (name == "javadoc-html") return ArtifactKind::javadoc_html;
  if (name == "plain-text") return ArtifactKind::plain_text;
  return std::nullopt;
}

std::string_view artifact_kind_name(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::java_source: return "java-source";
    case ArtifactKind::javadoc_html: return "javadoc-html";
    case ArtifactKind::plain_text: return "plain-text";
  }
  return "plain-text";
}

void WordList::append(const WordList& other) {
  words.reserve(words.size() + other.words.size());
  for (const RawWord& w : other.words) {
    RawWord copy = w;
    copy.ordinal = words.size();
    words.push_back(std::move(copy));
  }
  if (artifact_path.empty()) artifact_path = other.artifact_path;
}

WordList extract_words_java(std::string_view source_text) {
  WordList list;
  const std::size_t n = source_text.size();
  std::size_t i = 0;

  // Identifier-shaped tokens are mined uniformly from code and comment
  // text; only literal contents are opaque.
  auto scan_token = [&](std::size_t pos) {
    std::size_t end = pos + 1;
    while (end < n && ident_part(source_text[end])) ++end;
    std::string token(source_text.substr(pos, end - pos));
    if (!is_java_keyword(token)) push_word(list, std::move(token), ArtifactKind::java_source);
    return end;
  };

  enum class State { code, line_comment, block_comment };
  State state = State::code;

  while (i < n) {
    char c = source_text[i];
    switch (state) {
      case State::code:
        if (c == '/' && i + 1 < n && source_text[i + 1] == '/') {
          state = State::line_comment;
          i += 2;
        } else if (c == '/' && i + 1 < n && source_text[i + 1] == '*') {
          state = State::block_comment;
          i += 2;
        } else if (c == '"' || c == '\'') {
          // Literal contents are data, not vocabulary. Skip to the
          // matching close quote, honoring backslash escapes.
          char quote = c;
          ++i;
          while (i < n && source_text[i] != quote) {
            i += (source_text[i] == '\\' && i + 1 < n) ? 2 : 1;
          }
          if (i < n) ++i;
        } else if (ident_start(c)) {
          i = scan_token(i);
        } else if (is_digit(c)) {
          // Numeric literal: consume the whole alphanumeric run so "16"
          // and "0x1F" vanish but "putInt16" (letter-led) is untouched.
          ++i;
          while (i < n && ident_part(source_text[i])) ++i;
        } else {
          ++i;
        }
        break;
      case State::line_comment:
        if (c == '\n') {
          state = State::code;
          ++i;
        } else if (ident_start(c)) {
          i = scan_token(i);
        } else {
          ++i;
        }
        break;
      case State::block_comment:
        if (c == '*' && i + 1 < n && source_text[i + 1] == '/') {
          state = State::code;
          i += 2;
        } else if (ident_start(c)) {
          i = scan_token(i);
        } else {
          ++i;
        }
        break;
    }
  }
  return list;
}

WordList extract_words_javadoc_html(std::string_view html_text) {
  if (html_text.find('\0') != std::string_view::npos) {
    throw IoError("binary content where HTML was expected");
  }

  WordList list;
  const std::size_t n = html_text.size();
  std::size_t i = 0;
  std::string current;

  auto flush = [&] {
    // Sentence punctuation clings to tokens; identifier dots are interior.
    std::size_t begin = 0, end = current.size();
    while (begin < end && current[begin] == '.') ++begin;
    while (end > begin && current[end - 1] == '.') --end;
    if (end > begin) {
      push_word(list, current.substr(begin, end - begin), ArtifactKind::javadoc_html);
    }
    current.clear();
  };

  // A '<' only opens markup before a letter, '/', '!' or '?' (lone
  // less-than signs in prose survive as separators).
  auto opens_tag = [&](std::size_t pos) {
    if (pos + 1 >= n) return false;
    char next = html_text[pos + 1];
    return is_letter(next) || next == '/' || next == '!' || next == '?';
  };

  auto skip_ci = [&](std::size_t pos, std::string_view word) {
    if (pos + word.size() > n) return false;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (ascii_lower(html_text[pos + k]) != word[k]) return false;
    }
    return true;
  };

  while (i < n) {
    char c = html_text[i];
    if (c == '<' && opens_tag(i)) {
      flush();
      if (skip_ci(i + 1, "script") || skip_ci(i + 1, "style")) {
        // Non-visible content: drop everything through the closing tag.
        std::string_view name = skip_ci(i + 1, "script") ? "script" : "style";
        std::string close = "</" + std::string(name);
        std::size_t pos = i + 1;
        while (pos < n) {
          if (html_text[pos] == '<' && skip_ci(pos, close)) break;
          ++pos;
        }
        i = (pos < n) ? html_text.find('>', pos) : std::string_view::npos;
        i = (i == std::string_view::npos) ? n : i + 1;
      } else if (skip_ci(i + 1, "!--")) {
        std::size_t close = html_text.find("-->", i + 4);
        i = (close == std::string_view::npos) ? n : close + 3;
      } else {
        std::size_t close = html_text.find('>', i + 1);
        i = (close == std::string_view::npos) ? n : close + 1;
      }
    } else if (c == '&') {
      // Entities decode to punctuation or whitespace in practice; treat
      // every entity as a separator so each token stays a contiguous
      // substring of the input.
      std::size_t semi = html_text.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 10 && semi > i + 1) {
        flush();
        i = semi + 1;
      } else {
        flush();
        ++i;
      }
    } else if (is_letter(c) || is_digit(c) || c == '.' || c == '_' || c == '$') {
      current.push_back(c);
      ++i;
    } else {
      flush();
      ++i;
    }
  }
  flush();
  return list;
}

WordList extract_words_text(std::string_view text) {
  WordList list;
  std::string current;
  auto flush = [&] {
    auto trimmed_char = [](char c) { return c == '.' || c == '-' || c == '_'; };
    std::size_t begin = 0, end = current.size();
    while (begin < end && trimmed_char(current[begin])) ++begin;
    while (end > begin && trimmed_char(current[end - 1])) --end;
    if (end > begin) {
      push_word(list, current.substr(begin, end - begin), ArtifactKind::plain_text);
    }
    current.clear();
  };
  for (char c : text) {
    if (is_letter(c) || is_digit(c) || c == '.' || c == '_' || c == '-') {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return list;
}

namespace {

std::string lower_extension(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return "";
  return lower_copy(std::string_view(path).substr(dot + 1));
}

ArtifactKind resolve_kind(const std::string& path) {
  std::string ext = lower_extension(path);
  if (ext == "java") return ArtifactKind::java_source;
  if (ext == "html" || ext == "htm") return ArtifactKind::javadoc_html;
  static const std::unordered_set<std::string_view> text_exts = {
      "", "txt", "md", "markdown", "rst", "text", "adoc", "log"};
  if (text_exts.contains(ext)) return ArtifactKind::plain_text;
  throw ConfigError("cannot infer artifact kind of " + path +
                    " (extension ." + ext + "); pass --kind");
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return std::move(buf).str();
}

}  // namespace

WordList ingest(const std::string& path, std::optional<ArtifactKind> kind) {
  // Read first: a missing file is an io-error even when its kind is odd.
  std::string bytes = read_all(path);
  ArtifactKind resolved = kind ? *kind : resolve_kind(path);
  WordList list;
  switch (resolved) {
    case ArtifactKind::java_source: list = extract_words_java(bytes); break;
    case ArtifactKind::javadoc_html: list = extract_words_javadoc_html(bytes); break;
    case ArtifactKind::plain_text: list = extract_words_text(bytes); break;
  }
  list.artifact_path = path;
  return list;
}

WordList ingest_all(const std::vector<std::string>& paths,
                    std::optional<ArtifactKind> kind) {
  WordList combined;
  for (const std::string& path : paths) {
    combined.append(ingest(path, kind));
  }
  return combined;
}

std::string words_file(const WordList& list) {
  std::string out;
  for (const RawWord& w : list.words) {
    out += w.text;
    out += '\n';
  }
  return out;
}

}  // namespace softcloud

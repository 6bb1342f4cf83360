#include "softcloud/wordpipe.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "softcloud/errors.hpp"
#include "wordlist_data.hpp"

namespace softcloud {

namespace {

bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
char to_lower(char c) { return ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

// Any of a, e, i, o, u, y. A stem candidate without one is never a word
// worth validating (catches acronym junk in the embedded list).
bool has_vowel(std::string_view s) {
  for (char c : s) {
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y') return true;
  }
  return false;
}

const std::unordered_set<std::string_view>& word_list() {
  static const std::unordered_set<std::string_view> words = [] {
    std::unordered_set<std::string_view> set;
    std::string_view data = detail::embedded_word_list;
    std::size_t pos = 0;
    while (pos < data.size()) {
      std::size_t nl = data.find('\n', pos);
      if (nl == std::string_view::npos) nl = data.size();
      if (nl > pos) set.insert(data.substr(pos, nl - pos));
      pos = nl + 1;
    }
    return set;
  }();
  return words;
}

// Candidate roots must be real words, not just plausible letter runs.
bool valid_root(const std::string& c) {
  return c.size() >= 3 && has_vowel(c) && word_list().contains(c);
}

// Irregular inflections the suffix rules cannot reach, plus irregular
// plurals. Seeded into every Stemmer; user exception files override.
constexpr std::array<std::pair<std::string_view, std::string_view>, 141> kIrregular{{
    {"thrown", "throw"},   {"threw", "throw"},     {"went", "go"},
    {"goes", "go"},        {"going", "go"},        {"gone", "go"},
    {"does", "do"},        {"did", "do"},          {"done", "do"},
    {"doing", "do"},       {"is", "be"},           {"are", "be"},
    {"was", "be"},         {"were", "be"},         {"been", "be"},
    {"being", "be"},       {"am", "be"},           {"used", "use"},
    {"using", "use"},      {"has", "have"},        {"had", "have"},
    {"got", "get"},        {"gotten", "get"},      {"died", "die"},
    {"dying", "die"},      {"tied", "tie"},        {"tying", "tie"},
    {"lied", "lie"},       {"lying", "lie"},       {"made", "make"},
    {"said", "say"},       {"saw", "see"},         {"seen", "see"},
    {"ran", "run"},        {"came", "come"},       {"gave", "give"},
    {"given", "give"},     {"taken", "take"},      {"took", "take"},
    {"found", "find"},     {"kept", "keep"},       {"meant", "mean"},
    {"felt", "feel"},      {"met", "meet"},        {"paid", "pay"},
    {"sent", "send"},      {"told", "tell"},       {"thought", "think"},
    {"brought", "bring"},  {"bought", "buy"},      {"caught", "catch"},
    {"taught", "teach"},   {"built", "build"},     {"lost", "lose"},
    {"held", "hold"},      {"heard", "hear"},      {"led", "lead"},
    {"fed", "feed"},       {"stood", "stand"},     {"understood", "understand"},
    {"won", "win"},        {"wrote", "write"},     {"written", "write"},
    {"drawn", "draw"},     {"drew", "draw"},       {"known", "know"},
    {"knew", "know"},      {"grown", "grow"},      {"grew", "grow"},
    {"shown", "show"},     {"chosen", "choose"},   {"chose", "choose"},
    {"broken", "break"},   {"broke", "break"},     {"spoken", "speak"},
    {"spoke", "speak"},    {"driven", "drive"},    {"drove", "drive"},
    {"fallen", "fall"},    {"fell", "fall"},       {"flown", "fly"},
    {"flew", "fly"},       {"frozen", "freeze"},   {"froze", "freeze"},
    {"hidden", "hide"},    {"hid", "hide"},        {"risen", "rise"},
    {"eaten", "eat"},      {"ate", "eat"},         {"beaten", "beat"},
    {"began", "begin"},    {"begun", "begin"},     {"swam", "swim"},
    {"swum", "swim"},      {"sang", "sing"},       {"sung", "sing"},
    {"rang", "ring"},      {"rung", "ring"},       {"sank", "sink"},
    {"sunk", "sink"},      {"sat", "sit"},         {"slept", "sleep"},
    {"spent", "spend"},    {"lent", "lend"},       {"bent", "bend"},
    {"struck", "strike"},  {"stole", "steal"},     {"stolen", "steal"},
    {"tore", "tear"},      {"torn", "tear"},       {"wore", "wear"},
    {"worn", "wear"},      {"woke", "wake"},       {"woken", "wake"},
    {"shook", "shake"},    {"shaken", "shake"},    {"children", "child"},
    {"men", "man"},        {"women", "woman"},     {"feet", "foot"},
    {"teeth", "tooth"},    {"mice", "mouse"},      {"geese", "goose"},
    {"indices", "index"},  {"vertices", "vertex"}, {"matrices", "matrix"},
    {"appendices", "appendix"}, {"criteria", "criterion"}, {"phenomena", "phenomenon"},
    {"halves", "half"},    {"knives", "knife"},    {"wives", "wife"},
    {"selves", "self"},    {"wolves", "wolf"},     {"shelves", "shelf"},
}};

}  // namespace

std::vector<std::string> split_word(std::string_view word) {
  std::vector<std::string> fragments;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      fragments.push_back(std::move(current));
      current.clear();
    }
  };
  for (char c : word) {
    if (ascii_upper(c)) {
      // Every capital starts a fragment; consecutive capitals therefore
      // split one letter each, and a following lowercase run joins the
      // last capital (XMLParse -> x, m, l, parse).
      flush();
      current.push_back(to_lower(c));
    } else if (ascii_lower(c)) {
      current.push_back(c);
    } else {
      // Digits and separators cut and are consumed.
      flush();
    }
  }
  flush();
  return fragments;
}

Stemmer::Stemmer() {
  exceptions_.reserve(kIrregular.size());
  for (const auto& [word, root] : kIrregular) {
    exceptions_.emplace(word, root);
  }
}

void Stemmer::add_exception(std::string word, std::string root) {
  exceptions_[std::move(word)] = std::move(root);
}

void Stemmer::load_exceptions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read stem exceptions file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected <word>TAB<root>");
    }
    add_exception(line.substr(0, tab), line.substr(tab + 1));
  }
}

std::string Stemmer::stem_once(const std::string& word) const {
  if (auto it = exceptions_.find(word); it != exceptions_.end()) return it->second;

  auto ends_with = [&](std::string_view suffix) {
    return word.size() >= suffix.size() &&
           std::string_view(word).substr(word.size() - suffix.size()) == suffix;
  };

  // Plural.
  if (ends_with("ies")) {
    std::string c = word.substr(0, word.size() - 3) + "y";
    if (valid_root(c)) return c;
  }
  if (ends_with("s") && !ends_with("ss")) {
    // Bare strip first so silent-e plurals keep their e (cases -> case).
    std::string c = word.substr(0, word.size() - 1);
    if (valid_root(c)) return c;
    if (ends_with("es")) {
      c = word.substr(0, word.size() - 2);
      if (valid_root(c)) return c;
    }
  }

  // Past.
  if (ends_with("ied")) {
    std::string c = word.substr(0, word.size() - 3) + "y";
    if (valid_root(c)) return c;
  }
  if (ends_with("ed") && word.size() >= 5) {
    std::string base = word.substr(0, word.size() - 2);
    if (std::string c = base + "e"; valid_root(c)) return c;
    if (valid_root(base)) return base;
    std::size_t n = base.size();
    if (n >= 2 && base[n - 1] == base[n - 2] && !has_vowel(base.substr(n - 1, 1))) {
      std::string c = base.substr(0, n - 1);
      if (valid_root(c)) return c;
    }
  }

  // Gerund.
  if (ends_with("ing") && word.size() >= 6) {
    std::string base = word.substr(0, word.size() - 3);
    if (std::string c = base + "e"; valid_root(c)) return c;
    if (valid_root(base)) return base;
    std::size_t n = base.size();
    if (n >= 2 && base[n - 1] == base[n - 2] && !has_vowel(base.substr(n - 1, 1))) {
      std::string c = base.substr(0, n - 1);
      if (valid_root(c)) return c;
    }
  }

  return word;
}

std::string Stemmer::stem(std::string_view fragment) const {
  std::string word(fragment);
  for (char& c : word) c = to_lower(c);
  // Iterate to a fixpoint so stem(stem(x)) == stem(x) holds by
  // construction (meetings -> meeting -> meet).
  for (int round = 0; round < 8; ++round) {
    std::string next = stem_once(word);
    if (next == word) break;
    word = std::move(next);
  }
  return word;
}

const Stemmer& default_stemmer() {
  static const Stemmer stemmer;
  return stemmer;
}

std::vector<std::string> pipeline(const WordList& words, const Stemmer& stemmer) {
  std::vector<std::string> roots;
  roots.reserve(words.words.size());
  for (const RawWord& raw : words.words) {
    for (const std::string& fragment : split_word(raw.text)) {
      roots.push_back(stemmer.stem(fragment));
    }
  }
  return roots;
}

std::vector<std::string> pipeline(const WordList& words) {
  return pipeline(words, default_stemmer());
}

}  // namespace softcloud

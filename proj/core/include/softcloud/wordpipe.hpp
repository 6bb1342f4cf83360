#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "softcloud/artifact.hpp"

namespace softcloud {

/// Splits a mined word into lowercase letter fragments.
///
/// Cuts happen at lowercase-to-uppercase boundaries, at every separator
/// character (anything that is not an ASCII letter or digit), and at digit
/// runs; separators and digits are consumed. Runs of consecutive uppercase
/// letters split one letter per fragment, except that an uppercase letter
/// followed by lowercase starts the next fragment ("XMLParse" -> x, m, l,
/// parse). A word with no letters yields an empty list.
std::vector<std::string> split_word(std::string_view word);

/// Reduces inflected English fragments to their roots.
///
/// Resolution order per step: the irregular-form table, then plural
/// (-ies/-s/-es), past (-ied/-ed with silent-e restore and consonant-doubling
/// undo) and gerund (-ing, same restores) suffix rules. A rule's candidate is
/// accepted only when the embedded word list contains it; otherwise the next
/// rule is tried, and a fragment with no accepted candidate is returned
/// unchanged. Steps repeat until a fixpoint, so stemming is idempotent.
class Stemmer {
 public:
  Stemmer();

  /// Overrides or extends the irregular table; later calls win.
  void add_exception(std::string word, std::string root);

  /// Loads a two-column exceptions file (word TAB root, one pair per line).
  void load_exceptions(const std::string& path);

  std::string stem(std::string_view fragment) const;

 private:
  std::string stem_once(const std::string& word) const;

  std::unordered_map<std::string, std::string> exceptions_;
};

/// Shared default stemmer with the built-in tables only.
const Stemmer& default_stemmer();

/// split_word then stem over every mined word, preserving artifact order.
std::vector<std::string> pipeline(const WordList& words, const Stemmer& stemmer);
std::vector<std::string> pipeline(const WordList& words);

}  // namespace softcloud

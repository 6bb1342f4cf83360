#include <doctest.h>

#include <string>
#include <vector>

#include "softcloud/errors.hpp"
#include "softcloud/wordpipe.hpp"
#include "test_util.hpp"

using namespace softcloud;

namespace {

using Frags = std::vector<std::string>;

std::string letters_lowercased(std::string_view word) {
  std::string out;
  for (char c : word) {
    if (c >= 'a' && c <= 'z') out.push_back(c);
    else if (c >= 'A' && c <= 'Z') out.push_back(static_cast<char>(c - 'A' + 'a'));
  }
  return out;
}

}  // namespace

TEST_CASE("camel splitting golden rows") {
  CHECK(split_word("NanoXML") == Frags{"nano", "x", "m", "l"});
  CHECK(split_word("ParseException") == Frags{"parse", "exception"});
  CHECK(split_word("getLocalizedMessage") == Frags{"get", "localized", "message"});
  CHECK(split_word("printStackTrace") == Frags{"print", "stack", "trace"});
  CHECK(split_word("getLineNr") == Frags{"get", "line", "nr"});
  CHECK(split_word("fillInStackTrace") == Frags{"fill", "in", "stack", "trace"});
  CHECK(split_word("org.mozilla") == Frags{"org", "mozilla"});
  CHECK(split_word("itsFlags") == Frags{"its", "flags"});
  CHECK(split_word("addField") == Frags{"add", "field"});
  CHECK(split_word("putInt16") == Frags{"put", "int"});
  CHECK(split_word("unHex") == Frags{"un", "hex"});
  CHECK(split_word("find_split") == Frags{"find", "split"});
  CHECK(split_word("getMaximumInterpreterStackDepth") ==
        Frags{"get", "maximum", "interpreter", "stack", "depth"});
}

TEST_CASE("splitting degenerate inputs") {
  CHECK(split_word("word") == Frags{"word"});
  CHECK(split_word("XMLParse") == Frags{"x", "m", "l", "parse"});
  CHECK(split_word("1234").empty());
  CHECK(split_word("___").empty());
  CHECK(split_word("").empty());
  CHECK(split_word("a1b2c") == Frags{"a", "b", "c"});
  CHECK(split_word("org.mozilla.classfile") == Frags{"org", "mozilla", "classfile"});
  // Mixed-mode words split mechanically, without any repair heuristic.
  CHECK(split_word("SeTStandardS") == Frags{"se", "t", "standard", "s"});
}

TEST_CASE("splitting conserves letters in order") {
  testutil::Gen gen(41);
  for (int round = 0; round < 300; ++round) {
    std::string word;
    switch (gen.index(3)) {
      case 0: word = gen.camel_identifier(); break;
      case 1: word = gen.dotted_path(); break;
      default:
        word = gen.camel_identifier() + std::to_string(gen.index(100)) +
               gen.lowercase_word(1, 4);
        break;
    }
    std::string joined;
    for (const auto& frag : split_word(word)) {
      CHECK_FALSE(frag.empty());
      for (char c : frag) CHECK((c >= 'a' && c <= 'z'));
      joined += frag;
    }
    CHECK(joined == letters_lowercased(word));
  }
}

TEST_CASE("stemming golden pairs") {
  const Stemmer& st = default_stemmer();
  CHECK(st.stem("synchronized") == "synchronize");
  CHECK(st.stem("interfaces") == "interface");
  CHECK(st.stem("reserved") == "reserve");
  CHECK(st.stem("parameters") == "parameter");
  CHECK(st.stem("arguments") == "argument");
  CHECK(st.stem("indicates") == "indicate");
  CHECK(st.stem("extends") == "extend");
  CHECK(st.stem("thrown") == "throw");
  CHECK(st.stem("parsing") == "parse");
  CHECK(st.stem("occurred") == "occur");
  CHECK(st.stem("protected") == "protect");

  CHECK(st.stem("parse") == "parse");
  CHECK(st.stem("parses") == "parse");
  CHECK(st.stem("parsed") == "parse");
}

TEST_CASE("stemming falls back to the fragment itself") {
  const Stemmer& st = default_stemmer();
  CHECK(st.stem("nr") == "nr");
  CHECK(st.stem("xqzt") == "xqzt");
  CHECK(st.stem("mozilla") == "mozilla");
  // "str" has no vowel, so "strings" must not stop there.
  CHECK(st.stem("string") == "string");
  CHECK(st.stem("strings") == "string");
}

TEST_CASE("stemming handles doubling, silent e, and irregular forms") {
  const Stemmer& st = default_stemmer();
  CHECK(st.stem("stopped") == "stop");
  CHECK(st.stem("running") == "run");
  CHECK(st.stem("classes") == "class");
  CHECK(st.stem("tries") == "try");
  CHECK(st.stem("went") == "go");
  CHECK(st.stem("mice") == "mouse");
  CHECK(st.stem("children") == "child");
  CHECK(st.stem("indices") == "index");
  CHECK(st.stem("Parsing") == "parse");
}

TEST_CASE("stemming is idempotent and never lengthens regular words") {
  const Stemmer& st = default_stemmer();
  std::vector<std::string> samples = {
      "synchronized", "interfaces", "parameters", "occurred", "parsing",
      "classes", "running", "stopped", "tries", "exceptions", "documents",
      "signals", "creates", "malformed", "localized", "happening"};
  testutil::Gen gen(79);
  for (int i = 0; i < 300; ++i) samples.push_back(gen.lowercase_word(1, 12));

  for (const auto& word : samples) {
    std::string root = st.stem(word);
    CHECK_FALSE(root.empty());
    CHECK(st.stem(root) == root);
    CHECK(root.size() <= word.size());
  }
}

TEST_CASE("user exceptions override the built-in table") {
  Stemmer st;
  st.add_exception("nr", "number");
  CHECK(st.stem("nr") == "number");
  st.add_exception("nr", "numeric");
  CHECK(st.stem("nr") == "numeric");
  CHECK(default_stemmer().stem("nr") == "nr");
}

TEST_CASE("exceptions file load") {
  std::string good = testutil::write_temp("stems_good.tsv",
                                          "# project jargon\n"
                                          "\n"
                                          "nr\tnumber\n"
                                          "impl\timplementation\n");
  Stemmer st;
  st.load_exceptions(good);
  CHECK(st.stem("nr") == "number");
  CHECK(st.stem("impl") == "implementation");

  std::string bad = testutil::write_temp("stems_bad.tsv", "nr\tnumber\nhalfline\n");
  Stemmer broken;
  CHECK_THROWS_AS(broken.load_exceptions(bad), ConfigError);
  CHECK_THROWS_AS(Stemmer{}.load_exceptions("/nonexistent/stems.tsv"), IoError);
}

TEST_CASE("pipeline composes splitting and stemming in artifact order") {
  WordList list;
  auto add = [&](std::string text) {
    RawWord w;
    w.text = std::move(text);
    w.ordinal = list.words.size();
    list.words.push_back(std::move(w));
  };

  add("getLineNr");
  CHECK(pipeline(list) == Frags{"get", "line", "nr"});

  list.words.clear();
  add("XMLParseException");
  CHECK(pipeline(list) == Frags{"x", "m", "l", "parse", "exception"});

  list.words.clear();
  CHECK(pipeline(list).empty());

  add("printStackTrace");
  add("parsing");
  add("org.mozilla");
  CHECK(pipeline(list) ==
        Frags{"print", "stack", "trace", "parse", "org", "mozilla"});
}

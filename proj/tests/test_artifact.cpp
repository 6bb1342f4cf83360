#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "softcloud/artifact.hpp"
#include "softcloud/errors.hpp"
#include "test_util.hpp"

using namespace softcloud;

namespace {

std::vector<std::string> texts(const WordList& list) {
  std::vector<std::string> out;
  out.reserve(list.words.size());
  for (const RawWord& w : list.words) out.push_back(w.text);
  return out;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(testutil::fixture_path(name), std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("java extraction keeps identifiers and dotted paths") {
  auto words = texts(extract_words_java("package org.mozilla.classfile;"));
  CHECK(words == std::vector<std::string>{"org.mozilla.classfile"});

  words = texts(extract_words_java("private int itsExceptionTableTop;"));
  CHECK(words == std::vector<std::string>{"itsExceptionTableTop"});

  CHECK(extract_words_java("").words.empty());
}

TEST_CASE("java extraction drops literals and numbers, mines comments") {
  auto words = texts(extract_words_java(
      "// resets the public counter\n"
      "int n = 16;\n"
      "String s = \"hidden words here\" + other;\n"
      "/* block notes survive */\n"));
  CHECK(words == std::vector<std::string>{"resets", "the", "counter", "n",
                                          "String", "s", "other", "block",
                                          "notes", "survive"});
}

TEST_CASE("java extraction skips escaped quotes and char literals") {
  auto words = texts(extract_words_java(
      "char c = 'x'; String t = \"a \\\" b\"; use(c, t);"));
  CHECK(words == std::vector<std::string>{"c", "String", "t", "use", "c", "t"});
}

TEST_CASE("java fixture matches an independent regex scan") {
  std::string source = read_fixture("sample.java");
  auto mined = texts(extract_words_java(source));
  auto oracle = testutil::java_token_oracle(source);
  CHECK(mined == oracle);
  CHECK(contains(mined, "TokenSampler"));
  CHECK(contains(mined, "samples.add"));
  CHECK(contains(mined, "$dirty"));
  CHECK_FALSE(contains(mined, "16"));
  CHECK_FALSE(contains(mined, "sampler"));
}

TEST_CASE("extraction invariants hold on the java fixture") {
  std::string source = read_fixture("sample.java");
  WordList list = extract_words_java(source);

  for (const RawWord& w : list.words) {
    CHECK(source.find(w.text) != std::string::npos);
    CHECK_FALSE(is_java_keyword(w.text));
  }
  for (std::size_t i = 0; i < list.words.size(); ++i) {
    CHECK(list.words[i].ordinal == i);
  }

  WordList again = extract_words_java(source);
  CHECK(texts(list) == texts(again));
}

TEST_CASE("concatenating single-file ingests equals multi-file ingest") {
  std::string a = testutil::write_temp("concat_a.java", "class A { int alphaOne; }");
  std::string b = testutil::write_temp("concat_b.java", "class B { int betaTwo; }");

  WordList joined = ingest_all({a, b}, std::nullopt);
  WordList first = ingest(a, std::nullopt);
  first.append(ingest(b, std::nullopt));

  CHECK(texts(joined) == texts(first));
  CHECK(texts(joined) == std::vector<std::string>{"A", "alphaOne", "B", "betaTwo"});
  for (std::size_t i = 0; i < joined.words.size(); ++i) {
    CHECK(joined.words[i].ordinal == i);
  }
}

TEST_CASE("html extraction strips markup and keeps visible words") {
  auto words = texts(extract_words_javadoc_html("<h2>Class XMLParseException</h2>"));
  CHECK(words == std::vector<std::string>{"Class", "XMLParseException"});

  words = texts(extract_words_javadoc_html("<p>creates an exception.</p>"));
  CHECK(words == std::vector<std::string>{"creates", "an", "exception"});

  CHECK(extract_words_javadoc_html("<script>var x=1;</script>").words.empty());
  CHECK(extract_words_javadoc_html("<style>.cls { color: red; }</style>").words.empty());
}

TEST_CASE("html extraction handles entities, comments, and stray brackets") {
  auto words = texts(extract_words_javadoc_html("rock&amp;roll"));
  CHECK(words == std::vector<std::string>{"rock", "roll"});

  words = texts(extract_words_javadoc_html("<!-- skip this -->kept"));
  CHECK(words == std::vector<std::string>{"kept"});

  words = texts(extract_words_javadoc_html("x < y and y > z"));
  CHECK(words == std::vector<std::string>{"x", "y", "and", "y", "z"});

  words = texts(extract_words_javadoc_html("java.lang.String rocks."));
  CHECK(words == std::vector<std::string>{"java.lang.String", "rocks"});
}

TEST_CASE("html fixture yields the visible token sequence") {
  std::string html = read_fixture("nanoxml_doc.html");
  auto words = texts(extract_words_javadoc_html(html));
  std::vector<std::string> expected = {
      "XMLParseException", "Class", "XMLParseException", "An",
      "XMLParseException", "signals", "a", "malformed", "document",
      "creates", "an", "exception", "getLineNr", "Where", "the",
      "error", "occurred", "See", "also", "nanoxml.XMLElement", "friends"};
  CHECK(words == expected);
}

TEST_CASE("html extraction rejects binary input") {
  CHECK_THROWS_AS(extract_words_javadoc_html(std::string_view("ok\0bad", 6)), IoError);
}

TEST_CASE("text extraction tokenizes on whitespace and punctuation") {
  auto words = texts(extract_words_text("Software artifacts visualization helps"));
  CHECK(words == std::vector<std::string>{"Software", "artifacts",
                                          "visualization", "helps"});

  words = texts(extract_words_text("use-case diagram"));
  CHECK(words == std::vector<std::string>{"use-case", "diagram"});

  words = texts(extract_words_text("ends here. -dash- stays_put"));
  CHECK(words == std::vector<std::string>{"ends", "here", "dash", "stays_put"});

  CHECK(extract_words_text("").words.empty());
  CHECK(extract_words_text("...---").words.empty());
}

TEST_CASE("prose fixture matches the single-pass token counter") {
  std::string prose = read_fixture("prose.txt");
  WordList list = extract_words_text(prose);
  auto counted = testutil::multiset_oracle(texts(list));

  auto oracle = testutil::text_count_oracle(prose);
  std::map<std::string, std::uint64_t> expected(oracle.begin(), oracle.end());
  CHECK(counted == expected);
  CHECK(counted.at("use-case") == 1);
}

TEST_CASE("ingest dispatches on extension and honors overrides") {
  std::string java = testutil::write_temp("disp.java", "int fooBar = 1;");
  std::string html = testutil::write_temp("disp.html", "<p>alpha beta</p>");
  std::string notes = testutil::write_temp("disp.md", "gamma delta");

  CHECK(texts(ingest(java, std::nullopt)) == std::vector<std::string>{"fooBar"});
  CHECK(texts(ingest(html, std::nullopt)) == std::vector<std::string>{"alpha", "beta"});
  CHECK(texts(ingest(notes, std::nullopt)) == std::vector<std::string>{"gamma", "delta"});

  // Forcing plain-text on a .java file keeps keywords: the lexer is bypassed.
  auto forced = texts(ingest(java, ArtifactKind::plain_text));
  CHECK(contains(forced, "int"));

  CHECK(ingest(java, std::nullopt).artifact_path == java);
}

TEST_CASE("ingest reports readable errors") {
  std::string odd = testutil::write_temp("blob.dat", "payload");
  CHECK_THROWS_AS(ingest(odd, std::nullopt), ConfigError);
  CHECK(texts(ingest(odd, ArtifactKind::plain_text)) ==
        std::vector<std::string>{"payload"});

  CHECK_THROWS_AS(ingest(testutil::temp_dir().string() + "/no_such_file.txt",
                         std::nullopt),
                  IoError);
  // Missing file stays an io-error even when the extension is unknown.
  CHECK_THROWS_AS(ingest(testutil::temp_dir().string() + "/no_such_file.zzz",
                         std::nullopt),
                  IoError);
}

TEST_CASE("words file lists one raw word per line") {
  WordList list = extract_words_java("int firstWord = secondWord;");
  CHECK(words_file(list) == "firstWord\nsecondWord\n");
  CHECK(words_file(WordList{}) == "");
}

TEST_CASE("artifact kind names round-trip") {
  for (auto kind : {ArtifactKind::java_source, ArtifactKind::javadoc_html,
                    ArtifactKind::plain_text}) {
    auto name = artifact_kind_name(kind);
    REQUIRE(artifact_kind_from_name(name).has_value());
    CHECK(*artifact_kind_from_name(name) == kind);
  }
  CHECK_FALSE(artifact_kind_from_name("cobol").has_value());
}

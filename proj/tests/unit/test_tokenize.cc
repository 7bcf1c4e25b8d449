#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "cleantables/error.h"
#include "cleantables/tokenize.h"
#include "cleantables/unicode.h"
#include "tempdir.h"

using namespace cleantables;

namespace {

const char *kAdams =
    "The regular early morning yell of horror was the sound of Authur\n"
    "Dent waking up and suddenly remembering where he was. It wasn't\n"
    "just that the cave was cold, it wasn't just that it was damp and\n"
    "smelly. It was the fact that the cave was in the middle of\n"
    "Islington and there wasn't a bus due for two million years.\n";

std::vector<std::pair<std::string, size_t>> Tokens(std::string_view text) {
  const auto abbrev = Abbreviations::Default();
  std::vector<std::pair<std::string, size_t>> out;
  for (const auto &span : SegmentSentences(text, abbrev)) {
    for (const auto &t : TokenizeSentence(text, span, abbrev)) out.emplace_back(t.word, t.start);
  }
  return out;
}

}  // namespace

TEST_CASE("sentence segmentation") {
  const auto abbrev = Abbreviations::Default();
  SUBCASE("two sentences") {
    const auto spans = SegmentSentences(std::string_view("It was damp. It was cold."), abbrev);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].start == 0);
    CHECK(spans[1].start == 13);
  }
  SUBCASE("empty") { CHECK(SegmentSentences(std::string_view(""), abbrev).empty()); }
  SUBCASE("abbreviation") {
    CHECK(SegmentSentences(std::string_view("Mr. Smith left."), abbrev).size() == 1);
  }
  SUBCASE("closing quote after the terminator") {
    const auto spans =
        SegmentSentences(std::string_view("He said \"stop.\" Then left!"), abbrev);
    REQUIRE(spans.size() == 2);
    CHECK(spans[1].start == 16);
  }
  SUBCASE("unterminated tail") {
    CHECK(SegmentSentences(std::string_view("One. two"), abbrev).size() == 2);
  }
}

TEST_CASE("sentence tokenization") {
  const auto abbrev = Abbreviations::Default();
  SUBCASE("cold, it") {
    const std::string text = "cold, it";
    const auto toks = TokenizeSentence(std::string_view(text), {0, text.size()}, abbrev);
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].word == "cold");
    CHECK(toks[0].start == 0);
    CHECK(toks[1].word == ",");
    CHECK(toks[1].start == 4);
    CHECK(toks[2].word == "it");
    CHECK(toks[2].start == 6);
  }
  SUBCASE("internal apostrophe") {
    const auto toks = TokenizeSentence(std::string_view("wasn't"), {0, 6}, abbrev);
    REQUIRE(toks.size() == 1);
    CHECK(toks[0].word == "wasn't");
  }
  SUBCASE("single word") {
    const auto toks = TokenizeSentence(std::string_view("Hi"), {0, 2}, abbrev);
    REQUIRE(toks.size() == 1);
    CHECK(toks[0].word == "Hi");
    CHECK(toks[0].start == 0);
  }
  SUBCASE("abbreviation keeps its period") {
    const auto toks = Tokens("Ask Dr. Who.");
    REQUIRE(toks.size() == 4);
    CHECK(toks[1].first == "Dr.");
    CHECK(toks[3].first == ".");
  }
  SUBCASE("leading and trailing punctuation") {
    const auto toks = Tokens("(\"Yes!\")");
    std::vector<std::string> words;
    for (const auto &t : toks) words.push_back(t.first);
    CHECK(words == std::vector<std::string>{"(", "\"", "Yes", "!", "\"", ")"});
  }
  SUBCASE("offsets count code points") {
    const auto toks = Tokens("café au lait. naïve!");
    REQUIRE(toks.size() == 6);
    CHECK(toks[1].second == 5);
    CHECK(toks[4].first == "naïve");
    CHECK(toks[4].second == 14);
  }
}

TEST_CASE("tokenizer back end") {
  SUBCASE("hello world") {
    AnnotationSet a = RunTokenizerBackend({{"a.txt", "Hello world."}}, nullptr, {});
    REQUIRE(a.document().size() == 1);
    REQUIRE(a.token().size() == 3);
    CHECK(a.token()[0].word == "Hello");
    CHECK(a.token()[1].word == "world");
    CHECK(a.token()[2].word == ".");
    CHECK(a.token()[0].cid == 0);
    CHECK(a.token()[1].cid == 6);
    CHECK(a.token()[2].cid == 11);
    CHECK(a.token()[2].sid == 1);
    CHECK_FALSE(a.token()[0].lemma.has_value());
  }
  SUBCASE("the Adams passage") {
    AnnotationSet a = RunTokenizerBackend({{"adams.txt", kAdams}}, nullptr, {});
    // Hand count: 22 + 19 + 24 tokens over three sentences.
    REQUIRE(a.token().size() == 65);
    CHECK(a.token().back().sid == 3);
    const std::vector<std::pair<std::string, int64_t>> first = {
        {"The", 0},  {"regular", 4}, {"early", 12}, {"morning", 18}, {"yell", 26},
        {"of", 31},  {"horror", 34}, {"was", 41},   {"the", 45},     {"sound", 49}};
    for (size_t i = 0; i < first.size(); ++i) {
      CHECK(a.token()[i].word == first[i].first);
      CHECK(a.token()[i].cid == first[i].second);
      CHECK(a.token()[i].tid == static_cast<int64_t>(i + 1));
    }
    int64_t per[4] = {0, 0, 0, 0};
    for (const auto &t : a.token()) ++per[t.sid];
    CHECK(per[1] == 22);
    CHECK(per[2] == 19);
    CHECK(per[3] == 24);
  }
  SUBCASE("empty corpus") {
    AnnotationSet a = RunTokenizerBackend({}, nullptr, {});
    CHECK(a.document().empty());
  }
  SUBCASE("CRLF is normalized before offsets") {
    AnnotationSet a = RunTokenizerBackend({{"x", "A b.\r\nC d."}}, nullptr, {});
    REQUIRE(a.token().size() == 6);
    CHECK(a.token()[3].word == "C");
    CHECK(a.token()[3].cid == 5);
    CHECK(a.raw_text().at(1) == "A b.\nC d.");
  }
  SUBCASE("invalid UTF-8") {
    try {
      RunTokenizerBackend({{"bad.txt", "ok \xff"}}, nullptr, {});
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kInvalidUtf8);
      CHECK(std::string(e.what()).find("bad.txt") != std::string::npos);
    }
  }
  SUBCASE("metadata row count") {
    Frame meta;
    meta.Add("year", {"2001"});
    CHECK_THROWS_AS(RunTokenizerBackend({{"a", "x"}, {"b", "y"}}, &meta, {}), Error);
  }
}

TEST_CASE("abbreviation list from a file and the environment") {
  testgen::TempDir dir;
  {
    std::ofstream out(dir / "abbrev.txt");
    out << "# custom\n\nApprox.\n";
  }
  const auto custom = Abbreviations::FromFile(dir / "abbrev.txt");
  CHECK(SegmentSentences(std::string_view("Approx. ten. Mr. X."), custom).size() == 3);

  ::setenv("CLEANTABLES_ABBREV", (dir / "abbrev.txt").c_str(), 1);
  const auto env = Abbreviations::FromEnvironment();
  ::unsetenv("CLEANTABLES_ABBREV");
  CHECK(env.Contains(U"Approx."));
  CHECK_FALSE(env.Contains(U"Mr."));
  CHECK(Abbreviations::FromEnvironment().Contains(U"Mr."));
  CHECK_THROWS_AS(Abbreviations::FromFile(dir / "missing.txt"), Error);
}

TEST_CASE("utf-8 decoding") {
  CHECK(DecodeUtf8("\xc3\xa9") == U"é");
  CHECK_FALSE(TryDecodeUtf8("\xc0\xaf").has_value());      // overlong
  CHECK_FALSE(TryDecodeUtf8("\xed\xa0\x80").has_value());  // surrogate
  CHECK_FALSE(TryDecodeUtf8("\xf4\x90\x80\x80").has_value());
  CHECK(EncodeUtf8(U"\U0001F600") == "\xf0\x9f\x98\x80");
  CHECK(NormalizeNewlines("a\r\nb\rc\n") == "a\nb\nc\n");
}

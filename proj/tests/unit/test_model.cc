#include "doctest.h"

#include "cleantables/error.h"
#include "cleantables/frame.h"
#include "cleantables/model.h"

using namespace cleantables;

namespace {

DocumentRow Doc(int64_t id) {
  DocumentRow d;
  d.id = id;
  d.version = "0.1.0";
  d.language = "en";
  d.uri = "doc" + std::to_string(id);
  return d;
}

TokenRow Tok(int64_t id, int64_t sid, int64_t tid, std::string word) {
  TokenRow t;
  t.id = id;
  t.sid = sid;
  t.tid = tid;
  t.word = std::move(word);
  return t;
}

std::vector<ViolationCode> Codes(const ValidationReport &r) {
  std::vector<ViolationCode> out;
  for (const auto &v : r.violations) out.push_back(v.code);
  return out;
}

}  // namespace

TEST_CASE("new annotation") {
  SUBCASE("zero documents") {
    AnnotationSet a = NewAnnotation({});
    CHECK(a.document().empty());
    CHECK(a.token().empty());
    CHECK(Validate(a).ok());
  }
  SUBCASE("two documents") {
    AnnotationSet a = NewAnnotation({Doc(1), Doc(2)});
    CHECK(a.document().size() == 2);
    CHECK(a.token().empty());
    CHECK(Validate(a).ok());
  }
  SUBCASE("duplicate ids") {
    try {
      NewAnnotation({Doc(1), Doc(1)});
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kDuplicateDocId);
      CHECK(std::string(e.what()).rfind("DUPLICATE_DOC_ID", 0) == 0);
    }
  }
  SUBCASE("bad id") {
    CHECK_THROWS_AS(NewAnnotation({Doc(0)}), Error);
    try {
      NewAnnotation({Doc(1), Doc(3)});
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kBadDocId);
    }
    DocumentRow bad = Doc(1);
    bad.language = "english";
    CHECK_THROWS_AS(NewAnnotation({bad}), ValidationError);
  }
}

TEST_CASE("validate empty set") { CHECK(Validate(AnnotationSet{}).ok()); }

TEST_CASE("dependency into a missing token is one FK violation") {
  AnnotationTables t;
  t.document = {Doc(1)};
  t.token = {Tok(1, 1, 1, "a"), Tok(1, 1, 2, "b"), Tok(1, 1, 3, "c")};
  t.dependency = {{1, 1, 0, 1, "root", std::nullopt}, {1, 1, 1, 2, "dep", std::nullopt},
                  {1, 1, 1, 3, "dep", std::nullopt}};
  CHECK(Validate(AnnotationSet(t)).ok());
  t.dependency.push_back({1, 1, 2, 5, "dep", std::nullopt});
  const auto report = Validate(AnnotationSet(t));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].code == ViolationCode::kFkViolation);
  CHECK(report.violations[0].table == "dependency");
}

TEST_CASE("coreference class without its canonical mention") {
  AnnotationTables t;
  t.document = {Doc(1)};
  t.token = {Tok(1, 1, 1, "It"), Tok(1, 1, 2, "rained")};
  CoreferenceRow m;
  m.id = 1;
  m.rid = 3;
  m.mention = "It";
  m.mention_type = "PRONOMINAL";
  m.number = "SINGULAR";
  m.gender = "NEUTRAL";
  m.animacy = "INANIMATE";
  m.sid = 1;
  m.tid = m.tid_end = m.tid_head = 1;
  m.mid = 4;
  t.coreference.push_back(m);
  m.mid = 5;
  t.coreference.push_back(m);
  const auto report = Validate(AnnotationSet(t));
  CHECK(Codes(report) == std::vector{ViolationCode::kCanonicalMissing});

  m.mid = 3;
  t.coreference.push_back(m);
  CHECK(Validate(AnnotationSet(t)).ok());
}

TEST_CASE("tables are kept in primary key order") {
  AnnotationTables t;
  t.document = {Doc(2), Doc(1)};
  t.token = {Tok(2, 1, 1, "x"), Tok(1, 2, 1, "b"), Tok(1, 1, 2, "a2"), Tok(1, 1, 1, "a1")};
  AnnotationSet a(t);
  CHECK(a.document()[0].id == 1);
  CHECK(a.token()[0].word == "a1");
  CHECK(a.token()[1].word == "a2");
  CHECK(a.token()[2].word == "b");
  CHECK(a.token()[3].word == "x");
}

TEST_CASE("validator reports each rule") {
  AnnotationTables base;
  base.document = {Doc(1)};
  base.token = {Tok(1, 1, 1, "Hi"), Tok(1, 1, 2, "there")};

  SUBCASE("token gap") {
    AnnotationTables t = base;
    t.token.push_back(Tok(1, 1, 4, "gap"));
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kRange});
  }
  SUBCASE("two roots") {
    AnnotationTables t = base;
    t.dependency = {{1, 1, 0, 1, "root", {}}, {1, 1, 0, 2, "root", {}}};
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kRange});
  }
  SUBCASE("entity span backwards") {
    AnnotationTables t = base;
    t.entity = {{1, 1, 2, 1, "GPE", "there", {}}};
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kBadSpan});
  }
  SUBCASE("sentiment range") {
    AnnotationTables t = base;
    t.sentence = {{1, 1, 5}};
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kRange});
  }
  SUBCASE("offsets are checked against raw text") {
    AnnotationTables t = base;
    t.raw_text[1] = "Hi there";
    t.token[0].cid = 0;
    t.token[1].cid = 3;
    CHECK(Validate(AnnotationSet(t)).ok());
    t.token[1].cid = 2;
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kOffsetMismatch});
  }
  SUBCASE("vector rows follow tokens") {
    AnnotationTables t = base;
    t.vector = VectorMatrix{{{1, 1, 1}, {1, 1, 2}}, 1, {0.5, 1.5}};
    CHECK(Validate(AnnotationSet(t)).ok());
    std::swap(t.vector->keys[0], t.vector->keys[1]);
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kVectorKeyMismatch});
  }
  SUBCASE("language code") {
    AnnotationTables t = base;
    t.document[0].language = "english";
    CHECK(Codes(Validate(AnnotationSet(t))) == std::vector{ViolationCode::kRange});
  }
}

TEST_CASE("RequireValid throws a ValidationError carrying the report") {
  AnnotationTables t;
  t.token = {Tok(7, 1, 1, "orphan")};
  try {
    RequireValid(AnnotationSet(t));
    FAIL("expected ValidationError");
  } catch (const ValidationError &e) {
    CHECK(e.report().violations.size() == 1);
    CHECK(std::string(e.what()).find("FK_VIOLATION") != std::string::npos);
  }
}

TEST_CASE("timestamps") {
  const Timestamp t = ParseTimestamp("2017-05-21T09:27:55Z");
  CHECK(FormatTimestamp(t) == "2017-05-21T09:27:55Z");
  CHECK(FormatTimestamp(Timestamp{}) == "1970-01-01T00:00:00Z");
  CHECK_THROWS_AS(ParseTimestamp("2017-05-21 09:27:55"), Error);
  CHECK_THROWS_AS(ParseTimestamp("2017-13-01T00:00:00Z"), Error);
  CHECK_THROWS_AS(ParseTimestamp("2017-02-30T00:00:00Z"), Error);
}

TEST_CASE("document table from metadata") {
  Frame meta;
  meta.Add("year", {"2009", "2010"});
  const auto docs = BuildDocumentTable({"2009.txt", "2010.txt"}, &meta, "en", Timestamp{});
  REQUIRE(docs.size() == 2);
  CHECK(docs[1].id == 2);
  CHECK(docs[1].uri == "2010.txt");
  REQUIRE(docs[1].Extra("year") != nullptr);
  CHECK(*docs[1].Extra("year") == "2010");
  CHECK(docs[1].Extra("party") == nullptr);

  try {
    BuildDocumentTable({"only.txt"}, &meta, "en", Timestamp{});
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMetaLengthMismatch);
  }
}

TEST_CASE("eight yearly documents") {
  std::vector<std::string> uris;
  for (int y = 2009; y <= 2016; ++y) uris.push_back(std::to_string(y) + ".txt");
  const auto docs = BuildDocumentTable(uris, nullptr, "en", Timestamp{});
  AnnotationSet a = NewAnnotation(docs);
  REQUIRE(a.document().size() == 8);
  CHECK(a.document().front().uri == "2009.txt");
  CHECK(a.document().back().uri == "2016.txt");
}

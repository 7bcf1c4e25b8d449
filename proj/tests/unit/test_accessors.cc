#include "doctest.h"

#include <sstream>

#include "cleantables/accessors.h"
#include "cleantables/error.h"
#include "cleantables/ingest.h"
#include "cleantables/tokenize.h"

using namespace cleantables;

namespace {

const char *kMadam =
    "1\tMadam\tmadam\tPROPN\tNNP\t_\t2\tcompound\t_\t_\n"
    "2\tSpeaker\tspeaker\tPROPN\tNNP\t_\t0\troot\t_\t_\n"
    "\n"
    "1\tThank\tthank\tVERB\tVB\t_\t0\troot\t_\t_\n"
    "2\tyou\tyou\tPRON\tPRP\t_\t1\tdobj\t_\t_\n"
    "3\t.\t.\tPUNCT\t.\t_\t1\tpunct\t_\t_\n"
    "\n";

AnnotationSet Madam() {
  return ConllToAnnotation(SplitConlluDocuments("obama.conllu", ParseConlluString(kMadam)),
                           nullptr);
}

}  // namespace

TEST_CASE("token accessor") {
  const AnnotationSet a = RunTokenizerBackend({{"adams.txt", "The regular early morning."}},
                                              nullptr, {});
  const auto toks = GetToken(a);
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].id == 1);
  CHECK(toks[0].sid == 1);
  CHECK(toks[0].tid == 1);
  CHECK(toks[0].word == "The");
  CHECK(toks[0].cid == 0);

  SUBCASE("with ROOT rows") {
    const AnnotationSet m = Madam();
    const auto with_root = GetToken(m, true);
    REQUIRE(with_root.size() == m.token().size() + 2);
    CHECK(with_root[0].tid == 0);
    CHECK(with_root[0].word == "ROOT");
    CHECK(with_root[0].lemma == "ROOT");
    CHECK_FALSE(with_root[0].upos.has_value());
    CHECK(with_root[1].word == "Madam");
    CHECK(with_root[3].sid == 2);
    CHECK(with_root[3].tid == 0);
  }
}

TEST_CASE("dependencies joined to tokens") {
  const AnnotationSet a = Madam();
  const auto joined = GetDependencyJoined(a);
  REQUIRE(joined.size() == a.dependency().size());
  for (size_t i = 0; i < joined.size(); ++i) CHECK(joined[i].dep == a.dependency()[i]);

  const auto compound = std::find_if(joined.begin(), joined.end(), [](const auto &r) {
    return r.dep.relation == "compound";
  });
  REQUIRE(compound != joined.end());
  CHECK(compound->word == "Speaker");
  CHECK(compound->lemma == "speaker");
  CHECK(compound->word_target == "Madam");
  CHECK(compound->lemma_target == "madam");

  const auto root = std::find_if(joined.begin(), joined.end(), [](const auto &r) {
    return r.dep.tid == 0 && r.dep.sid == 1;
  });
  REQUIRE(root != joined.end());
  CHECK(root->word == "ROOT");
  CHECK(root->lemma == "ROOT");
  CHECK(root->word_target == "Speaker");
}

TEST_CASE("frames carry the schema column names") {
  const AnnotationSet a = Madam();
  CHECK(GetTable(a, "dependency").names ==
        std::vector<std::string>{"id", "sid", "tid", "tid_target", "relation", "relation_full"});
  CHECK(GetTable(a, "dependency", false, true).names ==
        std::vector<std::string>{"id", "sid", "tid", "tid_target", "relation", "relation_full",
                                 "word", "lemma", "word_target", "lemma_target"});
  CHECK(GetTable(a, "token").names ==
        std::vector<std::string>{"id", "sid", "tid", "word", "lemma", "upos", "pos", "cid"});
  CHECK(GetTable(a, "token", true).rows() == 7);
  CHECK(GetTable(a, "document").names ==
        std::vector<std::string>{"id", "time", "version", "language", "uri"});
  const Frame tokens = GetTable(a, "token");
  CHECK((*tokens.Find("cid"))[0] == std::nullopt);
  CHECK((*tokens.Find("word"))[0] == "Madam");
  CHECK_THROWS_AS(GetTable(a, "tokens"), Error);
}

TEST_CASE("sentence and vector accessors") {
  AnnotationSet a = Madam();
  std::istringstream tsv("id\tsid\tsentiment\n1\t1\t1\n1\t2\t3\n");
  a = LoadSidecar(a, SidecarKind::kSentence, tsv);
  REQUIRE(GetSentence(a).size() == 2);
  CHECK(GetSentence(a)[0] == SentenceRow{1, 1, 1});

  CHECK(GetVector(a).rows() == 0);
  CHECK(GetVector(a).dim == 0);
  std::istringstream emb("madam 1 2 3 4 5\nthank 0 0 0 0 1\n");
  a = AttachVectors(a, LoadEmbeddings(emb));
  const Frame v = GetTable(a, "vector");
  CHECK(v.rows() == 5);
  CHECK(v.cols() == 8);
  CHECK(v.names.back() == "v5");
  CHECK((*v.Find("v2"))[0] == "2");
}

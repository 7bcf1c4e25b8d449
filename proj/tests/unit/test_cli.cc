#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cleantables/cli.h"
#include "cleantables/storage.h"
#include "tempdir.h"

using namespace cleantables;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cleantables");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = CliDispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void WriteFile(const std::string &path, const std::string &text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("annotate then query") {
  testgen::TempDir dir;
  WriteFile(dir / "2009.txt", "Madam Speaker, thank you. We meet tonight.\n");
  WriteFile(dir / "2010.txt", "Thank you all.\n");
  WriteFile(dir / "meta.csv", "year,president\n2009,Barack Obama\n2010,Barack Obama\n");
  const Run r = Cli({"annotate", "--backend", "tokenizers", "--meta", dir / "meta.csv",
                     "--fixed-time", "2017-05-21T09:27:55Z", "--out", dir / "corpus",
                     dir / "2009.txt", dir / "2010.txt"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const AnnotationSet a = ReadAnnotation(dir / "corpus");
  CHECK(a.document().size() == 2);
  CHECK(*a.document()[1].Extra("president") == "Barack Obama");

  const Run doc = Cli({"export", "--in", dir / "corpus", "--table", "document"});
  CHECK(doc.code == 0);
  CHECK(doc.out.rfind("id,time,version,language,uri,year,president\n", 0) == 0);
  CHECK(doc.out.find("2017-05-21T09:27:55Z") != std::string::npos);

  const Run q = Cli({"stats", "sentence-lengths", "--in", dir / "corpus", "--probs", "0,0.5,1"});
  CHECK(q.code == 0);
  CHECK(q.out == "prob,quantile\n0,4\n0.5,4\n1,6\n");

  const Run tf = Cli({"tfidf", "--in", dir / "corpus", "--token-var", "word", "--type", "tf"});
  CHECK(tf.code == 0);
  CHECK(tf.out.rfind("doc,term,value\n", 0) == 0);
  CHECK(tf.out.find("\n2,Thank,1\n") != std::string::npos);

  SUBCASE("refuses an existing output") {
    const Run again = Cli({"annotate", "--out", dir / "corpus", dir / "2009.txt"});
    CHECK(again.code == 2);
    CHECK(again.err.find("REFUSE_OVERWRITE") != std::string::npos);
  }
}

TEST_CASE("tfidf and pca on a parsed corpus") {
  testgen::TempDir dir;
  const std::string data = CLEANTABLES_DATA_DIR;
  Run r = Cli({"ingest-conllu", "--meta", data + "/meta.csv", "--out", dir / "c",
               data + "/minicorpus.conllu"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  r = Cli({"tfidf", "--in", dir / "c", "--filter-pos", "NN", "--min-df", "0.05", "--max-df",
           "0.95", "--type", "tfidf", "--tf-weight", "dnorm", "--out", dir / "m"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(std::filesystem::exists(dir / "m/matrix.mtx"));
  r = Cli({"pca", "--in", dir / "c", "--filter-pos", "NN", "--min-df", "0.05", "--max-df",
           "0.95", "--tf-weight", "dnorm", "--k", "2"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.rfind("id,time,version,language,uri,year,speaker,PC1,PC2\n", 0) == 0);

  r = Cli({"stats", "sentence-lengths", "--in", dir / "c"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n0.30000000000000004,") != std::string::npos);
}

TEST_CASE("usage and data errors") {
  CHECK(Cli({}).code == 1);
  CHECK(Cli({"frobnicate"}).code == 1);
  CHECK(Cli({"--help"}).code == 0);
  CHECK(Cli({"--version"}).code == 0);
  const Run missing = Cli({"export", "--table", "token"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("--in") != std::string::npos);
  CHECK(Cli({"annotate", "--backend", "spacy", "--out", "/tmp/never", "x.txt"}).code == 1);

  testgen::TempDir dir;
  const Run io = Cli({"export", "--in", dir / "absent", "--table", "token"});
  CHECK(io.code == 2);
  CHECK(io.err.find("IO_ERROR") != std::string::npos);

  WriteFile(dir / "bad.conllu", "1\tx\n\n");
  const Run bad = Cli({"ingest-conllu", "--out", dir / "c", dir / "bad.conllu"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("MALFORMED_LINE") != std::string::npos);
}

TEST_CASE("validate writes a report") {
  testgen::TempDir dir;
  WriteFile(dir / "a.txt", "One two.\n");
  REQUIRE(Cli({"annotate", "--out", dir / "c", dir / "a.txt"}).code == 0);
  Run r = Cli({"validate", "--in", dir / "c"});
  CHECK(r.code == 0);
  CHECK(r.out == "code,table,row,message\n");

  WriteFile(dir / "c/sentence.csv", "id,sid,sentiment\n1,1,9\n");
  r = Cli({"validate", "--in", dir / "c"});
  CHECK(r.code == 2);
  CHECK(r.out.find("RANGE,sentence,1,") != std::string::npos);
}

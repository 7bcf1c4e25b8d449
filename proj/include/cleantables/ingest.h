#ifndef CLEANTABLES_INGEST_H_
#define CLEANTABLES_INGEST_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cleantables/frame.h"
#include "cleantables/model.h"

namespace cleantables {

// ---------------------------------------------------------------------------
// CoNLL-U

struct ConlluWord {
  int64_t tid = 0;
  std::string form;
  std::optional<std::string> lemma;
  std::optional<std::string> upos;
  std::optional<std::string> xpos;
  std::optional<int64_t> head;  // absent when HEAD is '_'
  std::optional<std::string> deprel;

  bool operator==(const ConlluWord &) const = default;
};

struct ConlluSentence {
  int64_t sent_index = 0;  // 1-based position in the stream
  std::vector<ConlluWord> rows;
  std::vector<std::string> comments;  // text after '#', leading blanks removed

  bool operator==(const ConlluSentence &) const = default;
};

// Reads blank-line separated sentences of 10 tab-separated columns.
// Multiword-token ranges ("1-2") and empty nodes ("5.1") are skipped.
// Throws Error(kMalformedLine) and Error(kBadHead), both naming the line.
std::vector<ConlluSentence> ParseConllu(std::istream &in);
std::vector<ConlluSentence> ParseConlluString(std::string_view text);

struct ConlluDocument {
  std::string uri;
  std::vector<ConlluSentence> sentences;
};

// One file is one document unless it contains "# newdoc" comments, in which
// case each such comment starts a new document. Documents opened by
// "# newdoc id = X" get the uri "<uri>#X"; otherwise "<uri>#<n>".
std::vector<ConlluDocument> SplitConlluDocuments(
    const std::string &uri, std::vector<ConlluSentence> sentences);

struct ConllOptions {
  std::string language = "en";
  std::optional<Timestamp> time;
};

// Token and dependency tables from parsed sentences. DEPREL is split on its
// first ':' into relation and relation_full. Throws ValidationError if the
// result does not validate.
AnnotationSet ConllToAnnotation(const std::vector<ConlluDocument> &docs,
                                const Frame *meta,
                                const ConllOptions &options = {});

// ---------------------------------------------------------------------------
// Sidecar tables

enum class SidecarKind { kEntity, kCoreference, kSentence };

// "entity", "coreference" or "sentence"; throws Error(kUnknownTable).
SidecarKind ParseSidecarKind(std::string_view name);

// Column names of the sidecar schema, in canonical order.
const std::vector<std::string> &SidecarColumns(SidecarKind kind);

// Replaces one table of `a` with the rows of a header-bearing TSV stream.
// Empty fields are absent values. Throws Error(kUnknownColumn),
// Error(kMissingColumn), Error(kMalformedLine), Error(kRange) for sentiment
// outside 0..4, and ValidationError (messages carry sidecar line numbers).
AnnotationSet LoadSidecar(const AnnotationSet &a, SidecarKind kind,
                          std::istream &in);

// ---------------------------------------------------------------------------
// Embeddings

struct EmbeddingLexicon {
  size_t dim = 0;
  std::unordered_map<std::string, std::vector<double>> entries;

  const std::vector<double> *Find(const std::string &word) const;
};

// "word v1 ... vD" per line, space separated, with an optional leading
// "count dim" header. Throws Error(kDimMismatch), Error(kEmptyLexicon),
// Error(kMalformedLine).
EmbeddingLexicon LoadEmbeddings(std::istream &in);

// One row per token in token order, looked up by word and then by its
// lowercase form; unknown words get the zero vector.
AnnotationSet AttachVectors(const AnnotationSet &a, const EmbeddingLexicon &lex);

// ---------------------------------------------------------------------------
// Word frequencies

struct FrequencyLexicon {
  std::unordered_map<std::string, double> entries;

  // Relative frequency of a word; 0 for unknown words.
  double Frequency(const std::string &word) const;
};

// "word<TAB>frequency" lines (any whitespace accepted), optional
// "word frequency" header. Later duplicates win. Throws Error(kRange) for
// values outside [0, 1] and Error(kMalformedLine).
FrequencyLexicon LoadFrequencyLexicon(std::istream &in);

}  // namespace cleantables

#endif  // CLEANTABLES_INGEST_H_

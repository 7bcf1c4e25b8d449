#ifndef CLEANTABLES_ANALYTICS_H_
#define CLEANTABLES_ANALYTICS_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cleantables/frame.h"
#include "cleantables/ingest.h"
#include "cleantables/model.h"

namespace cleantables {

enum class TermKind { kTf, kIdf, kTfidf };
enum class TfWeight { kRaw, kDnorm, kLognorm, kBinary };

// "tf" | "idf" | "tfidf"; throws Error(kBadRange).
TermKind ParseTermKind(std::string_view name);
// "raw" | "dnorm" | "lognorm" | "binary"; throws Error(kBadRange).
TfWeight ParseTfWeight(std::string_view name);
std::string_view TermKindName(TermKind kind);
std::string_view TfWeightName(TfWeight weight);

struct Triplet {
  size_t doc = 0;
  size_t term = 0;
  double value = 0.0;

  bool operator==(const Triplet &) const = default;
};

// Sparse document x term matrix. Triplets are sorted by (doc, term).
struct TermMatrix {
  std::vector<std::string> doc_ids;
  std::vector<std::string> vocab;
  std::vector<Triplet> triplets;
  TermKind kind = TermKind::kTf;
  TfWeight weighting = TfWeight::kRaw;

  size_t rows() const { return doc_ids.size(); }
  size_t cols() const { return vocab.size(); }
  // Row-major rows() x cols() array with zeros off the support.
  std::vector<double> Dense() const;

  bool operator==(const TermMatrix &) const = default;
};

struct TfidfOptions {
  double min_df = 0.0;
  double max_df = 1.0;
  TermKind type = TermKind::kTfidf;
  TfWeight tf_weight = TfWeight::kRaw;
  std::string doc_var = "id";
  std::string token_var = "lemma";
};

// Term matrix over the rows of `tokens` (any frame with the doc_var and
// token_var columns; rows with an absent value in either are dropped).
//
// With N documents and df(t) the number of documents containing t, the
// vocabulary is {t : min_df <= df(t)/N <= max_df} in code-point order and
// documents are in order of first appearance. For a positive count c in a
// document whose largest vocabulary count is M:
//   raw c, lognorm 1 + ln c, binary 1, dnorm 0.5 + 0.5 c / M,
// idf(t) = ln(N / df(t)), and tfidf = tf * idf. Triplets exist exactly where
// the count is positive; the idf kind is a single row "idf" with one triplet
// per vocabulary term.
//
// Throws Error(kBadRange), Error(kUnknownColumn), Error(kEmptyVocab).
TermMatrix GetTfidf(const Frame &tokens, const TfidfOptions &options = {});

// Row-major dense matrix.
struct DenseMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> values;

  double operator()(size_t i, size_t j) const { return values[i * cols + j]; }
};

DenseMatrix ToDense(const TermMatrix &m);

struct PcaTable {
  Frame meta;
  // scores[j][i]: score of row i on component j + 1.
  std::vector<std::vector<double>> scores;
  std::vector<double> singular_values;

  // Meta columns followed by PC1..PCk.
  Frame ToFrame() const;
};

// Projects the column-centered matrix onto its top-k right singular
// directions. Each direction is signed so that its largest-magnitude loading
// is positive. `meta` must be empty (no columns) or have one row per matrix
// row. Throws Error(kDimMismatch), Error(kKTooLarge), Error(kBadRange).
PcaTable TidyPca(const DenseMatrix &m, const Frame &meta, size_t k = 2);
PcaTable TidyPca(const TermMatrix &m, const Frame &meta, size_t k = 2);

// Quantiles of per-sentence token counts (ROOT excluded), interpolating
// linearly between order statistics. Throws Error(kBadRange).
std::vector<std::pair<double, double>> SentenceLengths(const AnnotationSet &a,
                                                       const std::vector<double> &probs);

struct RankedCount {
  std::string value;
  int64_t count = 0;

  bool operator==(const RankedCount &) const = default;
};

// Token counts grouped by lemma (word when the lemma is absent), optionally
// restricted to rows whose filter_column ("upos" or "pos") equals
// filter_value; filter_column "none" or "" disables the filter. Top n by
// count, ties in ascending order. Throws Error(kUnknownColumn).
std::vector<RankedCount> TopTerms(const AnnotationSet &a, std::string_view filter_column,
                                  const std::optional<std::string> &filter_value,
                                  size_t n);

// Entity mentions of one type grouped by their text; ranked as TopTerms.
std::vector<RankedCount> TopEntities(const AnnotationSet &a,
                                     std::string_view entity_type, size_t n);

struct DependencyPair {
  int64_t id = 0;
  std::string word;
  std::optional<std::string> lemma_target;

  bool operator==(const DependencyPair &) const = default;
};

using DocumentFilter = std::function<bool(const DocumentRow &)>;

// Joined dependencies with the given relation in documents accepted by
// doc_filter (all documents when empty), keeping targets whose lemma has
// lexicon frequency strictly below max_frequency.
std::vector<DependencyPair> DependencyPairs(const AnnotationSet &a,
                                            const DocumentFilter &doc_filter,
                                            std::string_view relation,
                                            const FrequencyLexicon &freq,
                                            double max_frequency);

// "<word> => <lemma_target>"
std::string FormatPair(const DependencyPair &p);

// Writes <dir>/matrix.mtx (MatrixMarket coordinate real general, 1-based),
// <dir>/doc_ids.txt and <dir>/vocab.txt. Creates dir. Throws Error(kIo).
void ExportMatrix(const TermMatrix &m, const std::string &dir);

// The MatrixMarket text written by ExportMatrix.
std::string MatrixMarketText(const TermMatrix &m);

}  // namespace cleantables

#endif  // CLEANTABLES_ANALYTICS_H_

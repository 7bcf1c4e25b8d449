#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <unordered_map>

#include "cleantables/analytics.h"
#include "cleantables/error.h"
#include "cleantables/files.h"
#include "cleantables/strings.h"

namespace cleantables {

TermKind ParseTermKind(std::string_view name) {
  if (name == "tf") return TermKind::kTf;
  if (name == "idf") return TermKind::kIdf;
  if (name == "tfidf") return TermKind::kTfidf;
  throw Error(ErrorCode::kBadRange, "type must be tf, idf or tfidf, not '" +
                                        std::string(name) + "'");
}

TfWeight ParseTfWeight(std::string_view name) {
  if (name == "raw") return TfWeight::kRaw;
  if (name == "dnorm") return TfWeight::kDnorm;
  if (name == "lognorm") return TfWeight::kLognorm;
  if (name == "binary") return TfWeight::kBinary;
  throw Error(ErrorCode::kBadRange,
              "tf_weight must be raw, dnorm, lognorm or binary, not '" +
                  std::string(name) + "'");
}

std::string_view TermKindName(TermKind kind) {
  switch (kind) {
    case TermKind::kTf: return "tf";
    case TermKind::kIdf: return "idf";
    case TermKind::kTfidf: return "tfidf";
  }
  return "";
}

std::string_view TfWeightName(TfWeight weight) {
  switch (weight) {
    case TfWeight::kRaw: return "raw";
    case TfWeight::kDnorm: return "dnorm";
    case TfWeight::kLognorm: return "lognorm";
    case TfWeight::kBinary: return "binary";
  }
  return "";
}

std::vector<double> TermMatrix::Dense() const {
  std::vector<double> out(rows() * cols(), 0.0);
  for (const Triplet &t : triplets) out[t.doc * cols() + t.term] = t.value;
  return out;
}

TermMatrix GetTfidf(const Frame &tokens, const TfidfOptions &options) {
  const double lo = options.min_df;
  const double hi = options.max_df;
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw Error(ErrorCode::kBadRange,
                "need 0 <= min_df <= max_df <= 1, got min_df " + FormatDouble(lo) +
                    ", max_df " + FormatDouble(hi));
  }
  const std::vector<Cell> *docs = tokens.Find(options.doc_var);
  if (docs == nullptr) {
    throw Error(ErrorCode::kUnknownColumn, "no column '" + options.doc_var + "'");
  }
  const std::vector<Cell> *terms = tokens.Find(options.token_var);
  if (terms == nullptr) {
    throw Error(ErrorCode::kUnknownColumn, "no column '" + options.token_var + "'");
  }

  TermMatrix m;
  m.kind = options.type;
  m.weighting = options.tf_weight;

  std::unordered_map<std::string, size_t> doc_index;
  std::vector<std::map<std::string, int64_t>> counts;
  for (size_t i = 0; i < tokens.rows(); ++i) {
    const Cell &doc = (*docs)[i];
    const Cell &term = (*terms)[i];
    if (!doc || !term) continue;
    auto [it, inserted] = doc_index.try_emplace(*doc, m.doc_ids.size());
    if (inserted) {
      m.doc_ids.push_back(*doc);
      counts.emplace_back();
    }
    ++counts[it->second][*term];
  }

  const auto n_docs = static_cast<double>(m.doc_ids.size());
  std::map<std::string, int64_t> df;
  for (const auto &doc : counts) {
    for (const auto &[term, c] : doc) ++df[term];
  }
  std::unordered_map<std::string, size_t> term_index;
  std::vector<double> idf;
  // std::map iterates in byte order, which is code-point order for UTF-8.
  for (const auto &[term, d] : df) {
    const double share = static_cast<double>(d) / n_docs;
    if (share < lo || share > hi) continue;
    term_index.emplace(term, m.vocab.size());
    m.vocab.push_back(term);
    idf.push_back(std::log(n_docs / static_cast<double>(d)));
  }
  if (m.vocab.empty()) {
    throw Error(ErrorCode::kEmptyVocab,
                "no term has a document frequency within [min_df, max_df]");
  }

  if (options.type == TermKind::kIdf) {
    m.doc_ids = {"idf"};
    for (size_t t = 0; t < m.vocab.size(); ++t) m.triplets.push_back({0, t, idf[t]});
    return m;
  }

  // counts[d] iterates in vocabulary order, so triplets come out sorted.
  for (size_t d = 0; d < counts.size(); ++d) {
    int64_t max_count = 0;
    for (const auto &[term, c] : counts[d]) {
      if (term_index.count(term)) max_count = std::max(max_count, c);
    }
    for (const auto &[term, c] : counts[d]) {
      auto it = term_index.find(term);
      if (it == term_index.end()) continue;
      double tf = 0.0;
      switch (options.tf_weight) {
        case TfWeight::kRaw: tf = static_cast<double>(c); break;
        case TfWeight::kLognorm: tf = 1.0 + std::log(static_cast<double>(c)); break;
        case TfWeight::kBinary: tf = 1.0; break;
        case TfWeight::kDnorm:
          tf = 0.5 + 0.5 * static_cast<double>(c) / static_cast<double>(max_count);
          break;
      }
      const double value = options.type == TermKind::kTfidf ? tf * idf[it->second] : tf;
      m.triplets.push_back({d, it->second, value});
    }
  }
  return m;
}

std::string MatrixMarketText(const TermMatrix &m) {
  std::string out = "%%MatrixMarket matrix coordinate real general\n";
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
         std::to_string(m.triplets.size()) + "\n";
  for (const Triplet &t : m.triplets) {
    out += std::to_string(t.doc + 1) + " " + std::to_string(t.term + 1) + " " +
           FormatDouble(t.value) + "\n";
  }
  return out;
}

namespace {

std::string Lines(const std::vector<std::string> &items) {
  std::string out;
  for (const auto &s : items) out += s + "\n";
  return out;
}

}  // namespace

void ExportMatrix(const TermMatrix &m, const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  const std::filesystem::path base(dir);
  WriteFileAtomic((base / "matrix.mtx").string(), MatrixMarketText(m));
  WriteFileAtomic((base / "doc_ids.txt").string(), Lines(m.doc_ids));
  WriteFileAtomic((base / "vocab.txt").string(), Lines(m.vocab));
}

}  // namespace cleantables

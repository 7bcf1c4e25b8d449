#include <algorithm>
#include <cmath>
#include <map>

#include "cleantables/accessors.h"
#include "cleantables/analytics.h"
#include "cleantables/error.h"

namespace cleantables {

namespace {

std::vector<RankedCount> Rank(const std::map<std::string, int64_t> &counts, size_t n) {
  std::vector<RankedCount> out;
  out.reserve(counts.size());
  for (const auto &[value, count] : counts) out.push_back({value, count});
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.count > b.count;
  });
  if (out.size() > n) out.resize(n);
  return out;
}

}  // namespace

std::vector<std::pair<double, double>> SentenceLengths(const AnnotationSet &a,
                                                       const std::vector<double> &probs) {
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kBadRange, "probabilities must lie in [0, 1]");
    }
  }
  std::vector<double> lengths;
  const TokenRow *prev = nullptr;
  for (const TokenRow &t : a.token()) {
    if (prev == nullptr || prev->id != t.id || prev->sid != t.sid) {
      lengths.push_back(0.0);
    }
    lengths.back() += 1.0;
    prev = &t;
  }
  if (lengths.empty() && !probs.empty()) {
    throw Error(ErrorCode::kBadRange, "the token table has no sentences");
  }
  std::sort(lengths.begin(), lengths.end());
  std::vector<std::pair<double, double>> out;
  // Same arithmetic as R's quantile(type = 7), on a 1-based index.
  for (double p : probs) {
    const double index = 1.0 + static_cast<double>(lengths.size() - 1) * p;
    const double lo = std::floor(index);
    const double hi = std::ceil(index);
    double q = lengths[static_cast<size_t>(lo) - 1];
    const double upper = lengths[static_cast<size_t>(hi) - 1];
    if (index > lo && upper != q) {
      const double h = index - lo;
      q = (1.0 - h) * q + h * upper;
    }
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<RankedCount> TopTerms(const AnnotationSet &a, std::string_view filter_column,
                                  const std::optional<std::string> &filter_value,
                                  size_t n) {
  const bool no_filter = filter_column.empty() || filter_column == "none";
  if (!no_filter && filter_column != "upos" && filter_column != "pos") {
    throw Error(ErrorCode::kUnknownColumn,
                "cannot filter on '" + std::string(filter_column) +
                    "'; use upos, pos or none");
  }
  std::map<std::string, int64_t> counts;
  for (const TokenRow &t : a.token()) {
    if (!no_filter) {
      const auto &tag = filter_column == "upos" ? t.upos : t.pos;
      if (tag != filter_value) continue;
    }
    ++counts[t.lemma.value_or(t.word)];
  }
  return Rank(counts, n);
}

std::vector<RankedCount> TopEntities(const AnnotationSet &a,
                                     std::string_view entity_type, size_t n) {
  std::map<std::string, int64_t> counts;
  for (const EntityRow &e : a.entity()) {
    if (e.entity_type == entity_type) ++counts[e.entity];
  }
  return Rank(counts, n);
}

std::vector<DependencyPair> DependencyPairs(const AnnotationSet &a,
                                            const DocumentFilter &doc_filter,
                                            std::string_view relation,
                                            const FrequencyLexicon &freq,
                                            double max_frequency) {
  std::map<int64_t, bool> keep;
  for (const DocumentRow &d : a.document()) keep[d.id] = !doc_filter || doc_filter(d);
  std::vector<DependencyPair> out;
  for (const DependencyJoinedRow &row : GetDependencyJoined(a)) {
    if (row.dep.relation != relation || !keep[row.dep.id]) continue;
    const double f = row.lemma_target ? freq.Frequency(*row.lemma_target) : 0.0;
    if (!(f < max_frequency)) continue;
    out.push_back({row.dep.id, row.word, row.lemma_target});
  }
  return out;
}

std::string FormatPair(const DependencyPair &p) {
  return p.word + " => " + p.lemma_target.value_or("");
}

}  // namespace cleantables

#ifndef CLEANTABLES_ACCESSORS_H_
#define CLEANTABLES_ACCESSORS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cleantables/frame.h"
#include "cleantables/model.h"

namespace cleantables {

// Accessors assume a validated AnnotationSet and return tables in
// primary-key order.

// Stored tokens; with include_root a phantom (tid 0, word and lemma "ROOT")
// row is placed at the start of every sentence.
std::vector<TokenRow> GetToken(const AnnotationSet &a, bool include_root = false);

std::vector<DependencyRow> GetDependency(const AnnotationSet &a);

struct DependencyJoinedRow {
  DependencyRow dep;
  std::string word;
  std::optional<std::string> lemma;
  std::string word_target;
  std::optional<std::string> lemma_target;

  bool operator==(const DependencyJoinedRow &) const = default;
};

// Dependencies with governor and dependent word and lemma looked up in
// GetToken(a, true). Same rows in the same order as GetDependency.
std::vector<DependencyJoinedRow> GetDependencyJoined(const AnnotationSet &a);

const std::vector<DocumentRow> &GetDocument(const AnnotationSet &a);
const std::vector<EntityRow> &GetEntity(const AnnotationSet &a);
const std::vector<CoreferenceRow> &GetCoreference(const AnnotationSet &a);
const std::vector<SentenceRow> &GetSentence(const AnnotationSet &a);

// The stored vector matrix, or an empty one (0 rows, dim 0).
VectorMatrix GetVector(const AnnotationSet &a);

// Text renderings with the exact schema column names.
Frame ToFrame(const std::vector<DocumentRow> &rows);
Frame ToFrame(const std::vector<TokenRow> &rows);
Frame ToFrame(const std::vector<DependencyRow> &rows);
Frame ToFrame(const std::vector<DependencyJoinedRow> &rows);
Frame ToFrame(const std::vector<EntityRow> &rows);
Frame ToFrame(const std::vector<CoreferenceRow> &rows);
Frame ToFrame(const std::vector<SentenceRow> &rows);
// id, sid, tid, v1..vD
Frame ToFrame(const VectorMatrix &m);

// Named table as a frame: document, token, dependency, entity, coreference,
// sentence or vector. Throws Error(kUnknownTable).
Frame GetTable(const AnnotationSet &a, std::string_view name,
               bool include_root = false, bool join_tokens = false);

}  // namespace cleantables

#endif  // CLEANTABLES_ACCESSORS_H_

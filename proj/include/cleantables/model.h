#ifndef CLEANTABLES_MODEL_H_
#define CLEANTABLES_MODEL_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cleantables {

// Seconds-resolution UTC time point of an annotation run.
using Timestamp = std::chrono::sys_seconds;

// "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatTimestamp(Timestamp t);
// Accepts the format produced by FormatTimestamp. Throws Error(kParseError).
Timestamp ParseTimestamp(std::string_view text);

// Composite key of a token: document, sentence, token.
struct TokenKey {
  int64_t id = 0;
  int64_t sid = 0;
  int64_t tid = 0;

  auto operator<=>(const TokenKey &) const = default;
};

struct DocumentRow {
  int64_t id = 0;
  Timestamp time{};
  std::string version;
  std::string language;
  std::string uri;
  // Extra metadata columns in declaration order (e.g. year, president).
  std::vector<std::pair<std::string, std::string>> extra;

  // Value of an extra column, or nullptr when the column does not exist.
  const std::string *Extra(std::string_view name) const;

  bool operator==(const DocumentRow &) const = default;
};

struct TokenRow {
  int64_t id = 0;
  int64_t sid = 0;
  int64_t tid = 0;
  std::string word;
  std::optional<std::string> lemma;
  std::optional<std::string> upos;
  std::optional<std::string> pos;
  // 0-based offset of the first character, counted in Unicode scalar values.
  std::optional<int64_t> cid;

  TokenKey key() const { return {id, sid, tid}; }
  bool operator==(const TokenRow &) const = default;
};

// A governor -> dependent edge. tid == 0 denotes the sentence ROOT.
struct DependencyRow {
  int64_t id = 0;
  int64_t sid = 0;
  int64_t tid = 0;
  int64_t tid_target = 0;
  std::string relation;
  std::optional<std::string> relation_full;

  bool operator==(const DependencyRow &) const = default;
};

struct EntityRow {
  int64_t id = 0;
  int64_t sid = 0;
  int64_t tid = 0;
  int64_t tid_end = 0;  // inclusive
  std::string entity_type;
  std::string entity;
  std::optional<std::string> entity_normalized;

  bool operator==(const EntityRow &) const = default;
};

// One mention of a reference class. The mention whose mid equals rid is the
// canonical mention of the class.
struct CoreferenceRow {
  int64_t id = 0;
  int64_t rid = 0;
  int64_t mid = 0;
  std::string mention;
  std::string mention_type;
  std::string number;
  std::string gender;
  std::string animacy;
  int64_t sid = 0;
  int64_t tid = 0;
  int64_t tid_end = 0;
  int64_t tid_head = 0;

  bool operator==(const CoreferenceRow &) const = default;
};

struct SentenceRow {
  int64_t id = 0;
  int64_t sid = 0;
  int64_t sentiment = 0;

  bool operator==(const SentenceRow &) const = default;
};

// One embedding row per stored token, aligned with the token table.
struct VectorMatrix {
  std::vector<TokenKey> keys;
  size_t dim = 0;
  std::vector<double> values;  // row-major, keys.size() * dim

  size_t rows() const { return keys.size(); }
  std::span<const double> row(size_t i) const {
    return {values.data() + i * dim, dim};
  }
  bool operator==(const VectorMatrix &) const = default;
};

struct AnnotationTables {
  std::vector<DocumentRow> document;
  std::vector<TokenRow> token;
  std::vector<DependencyRow> dependency;
  std::vector<EntityRow> entity;
  std::vector<CoreferenceRow> coreference;
  std::vector<SentenceRow> sentence;
  std::optional<VectorMatrix> vector;
  // Source text per document id, newline-normalized.
  std::map<int64_t, std::string> raw_text;

  bool operator==(const AnnotationTables &) const = default;
};

// The seven linked tables of an annotated corpus. Immutable once built; the
// constructor puts every table (except the vector matrix, which must follow
// token order) into primary-key order. Construction does not validate; use
// Validate() or one of the checked construction paths.
class AnnotationSet {
 public:
  AnnotationSet() = default;
  explicit AnnotationSet(AnnotationTables tables);

  const std::vector<DocumentRow> &document() const { return t_.document; }
  const std::vector<TokenRow> &token() const { return t_.token; }
  const std::vector<DependencyRow> &dependency() const { return t_.dependency; }
  const std::vector<EntityRow> &entity() const { return t_.entity; }
  const std::vector<CoreferenceRow> &coreference() const { return t_.coreference; }
  const std::vector<SentenceRow> &sentence() const { return t_.sentence; }
  const std::optional<VectorMatrix> &vector() const { return t_.vector; }
  const std::map<int64_t, std::string> &raw_text() const { return t_.raw_text; }

  const AnnotationTables &tables() const { return t_; }

  bool operator==(const AnnotationSet &) const = default;

 private:
  AnnotationTables t_;
};

void SortByPrimaryKey(AnnotationTables *tables);

enum class ViolationCode {
  kDupKey,
  kFkViolation,
  kBadSpan,
  kCanonicalMissing,
  kRange,
  kOffsetMismatch,
  kVectorKeyMismatch,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  static constexpr size_t kWholeTable = static_cast<size_t>(-1);

  ViolationCode code;
  std::string table;
  size_t row = kWholeTable;  // 0-based index into the table
  std::string message;

  bool operator==(const Violation &) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every key and reference invariant of the data model. All problems
// are collected; nothing is thrown.
ValidationReport Validate(const AnnotationSet &a);

// Thrown by checked construction paths when validation fails.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);

  const ValidationReport &report() const { return report_; }

 private:
  ValidationReport report_;
};

// Throws ValidationError unless Validate(a).ok().
void RequireValid(const AnnotationSet &a);

// A set holding only a document table. Throws Error(kDuplicateDocId),
// Error(kBadDocId) when the ids are not 1..n, and ValidationError.
AnnotationSet NewAnnotation(std::vector<DocumentRow> documents);

struct Frame;

// Document table for a corpus given in input order: ids 1..n, the shared run
// time and tool version, and one metadata row per document taken from
// `meta` (may be null). Throws Error(kMetaLengthMismatch) when the metadata
// row count differs from the corpus size, Error(kRange) on a bad language.
std::vector<DocumentRow> BuildDocumentTable(const std::vector<std::string> &uris,
                                            const Frame *meta,
                                            const std::string &language,
                                            Timestamp time);

// Current UTC time truncated to seconds.
Timestamp NowSeconds();

}  // namespace cleantables

#endif  // CLEANTABLES_MODEL_H_

#include "cleantables/model.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <tuple>

#include "cleantables/error.h"
#include "cleantables/frame.h"
#include "cleantables/unicode.h"
#include "cleantables/version.h"

namespace cleantables {

namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::minutes;
using std::chrono::seconds;

std::string Key(std::initializer_list<std::pair<const char *, int64_t>> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto &[name, value] : parts) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  out += ')';
  return out;
}

using SentenceKey = std::pair<int64_t, int64_t>;

class Validator {
 public:
  explicit Validator(const AnnotationSet &a) : a_(a) {}

  ValidationReport Run() {
    CheckDocuments();
    CheckRawText();
    CheckTokens();
    CheckDependencies();
    CheckEntities();
    CheckCoreferences();
    CheckSentences();
    CheckVectors();
    return std::move(report_);
  }

 private:
  void Add(ViolationCode code, const char *table, size_t row,
           std::string message) {
    report_.violations.push_back({code, table, row, std::move(message)});
  }

  bool HasDoc(int64_t id) const { return doc_ids_.count(id) > 0; }

  // Number of stored tokens in a sentence, or -1 when the sentence is absent.
  int64_t SentenceLength(int64_t id, int64_t sid) const {
    auto it = sentence_max_tid_.find({id, sid});
    return it == sentence_max_tid_.end() ? -1 : it->second;
  }

  bool HasToken(int64_t id, int64_t sid, int64_t tid) const {
    return token_keys_.count({id, sid, tid}) > 0;
  }

  void CheckDocuments() {
    const auto &docs = a_.document();
    for (size_t i = 0; i < docs.size(); ++i) {
      const DocumentRow &d = docs[i];
      if (d.id < 1) {
        Add(ViolationCode::kRange, "document", i,
            "document id " + std::to_string(d.id) + " is not positive");
      } else if (!doc_ids_.insert(d.id).second) {
        Add(ViolationCode::kDupKey, "document", i,
            "duplicate document id " + std::to_string(d.id));
      }
      const bool lang_ok = d.language.size() == 2 &&
                           d.language[0] >= 'a' && d.language[0] <= 'z' &&
                           d.language[1] >= 'a' && d.language[1] <= 'z';
      if (!lang_ok) {
        Add(ViolationCode::kRange, "document", i,
            "language '" + d.language + "' is not an ISO 639-1 code");
      }
      if (i > 0) {
        const auto &ref = docs[0].extra;
        bool same = ref.size() == d.extra.size();
        for (size_t k = 0; same && k < ref.size(); ++k) {
          same = ref[k].first == d.extra[k].first;
        }
        if (!same) {
          Add(ViolationCode::kRange, "document", i,
              "extra metadata columns differ from the first row");
        }
      }
    }
    // Distinct positive ids must be exactly 1..n.
    int64_t expected = 1;
    for (int64_t id : doc_ids_) {
      if (id != expected) {
        Add(ViolationCode::kRange, "document", Violation::kWholeTable,
            "document ids are not 1..n");
        break;
      }
      ++expected;
    }
  }

  void CheckRawText() {
    for (const auto &[id, text] : a_.raw_text()) {
      if (!HasDoc(id)) {
        Add(ViolationCode::kFkViolation, "raw_text", Violation::kWholeTable,
            "raw text for unknown document " + std::to_string(id));
        continue;
      }
      auto decoded = TryDecodeUtf8(text);
      if (!decoded) {
        Add(ViolationCode::kRange, "raw_text", Violation::kWholeTable,
            "raw text of document " + std::to_string(id) + " is not UTF-8");
        continue;
      }
      decoded_text_.emplace(id, std::move(*decoded));
    }
  }

  void CheckTokens() {
    const auto &tokens = a_.token();
    std::map<SentenceKey, std::set<int64_t>> tids;
    for (size_t i = 0; i < tokens.size(); ++i) {
      const TokenRow &t = tokens[i];
      const std::string where = Key({{"id", t.id}, {"sid", t.sid}, {"tid", t.tid}});
      if (!HasDoc(t.id)) {
        Add(ViolationCode::kFkViolation, "token", i,
            "token " + where + " references an unknown document");
      }
      if (t.sid < 1 || t.tid < 1) {
        Add(ViolationCode::kRange, "token", i,
            "token " + where + " must have sid >= 1 and tid >= 1");
      } else if (!token_keys_.insert(t.key()).second) {
        Add(ViolationCode::kDupKey, "token", i, "duplicate token key " + where);
      } else {
        tids[{t.id, t.sid}].insert(t.tid);
      }
      if (t.cid) {
        if (*t.cid < 0) {
          Add(ViolationCode::kRange, "token", i,
              "token " + where + " has a negative cid");
        } else if (auto it = decoded_text_.find(t.id); it != decoded_text_.end()) {
          auto word = TryDecodeUtf8(t.word);
          const std::u32string &text = it->second;
          const auto start = static_cast<size_t>(*t.cid);
          const bool match = word && start <= text.size() &&
                             text.size() - start >= word->size() &&
                             text.compare(start, word->size(), *word) == 0;
          if (!match) {
            Add(ViolationCode::kOffsetMismatch, "token", i,
                "token " + where + " word '" + t.word +
                    "' does not match the source text at cid " +
                    std::to_string(*t.cid));
          }
        }
      }
    }
    for (const auto &[key, set] : tids) {
      const auto max_tid = *set.rbegin();
      sentence_max_tid_[key] = max_tid;
      if (static_cast<size_t>(max_tid) != set.size()) {
        Add(ViolationCode::kRange, "token", Violation::kWholeTable,
            "token ids of sentence " +
                Key({{"id", key.first}, {"sid", key.second}}) +
                " are not contiguous from 1");
      }
    }
  }

  void CheckDependencies() {
    const auto &deps = a_.dependency();
    std::set<std::tuple<int64_t, int64_t, int64_t, int64_t>> keys;
    std::set<TokenKey> targets;
    std::map<SentenceKey, int> roots;
    std::map<SentenceKey, size_t> first_row_of;
    for (size_t i = 0; i < deps.size(); ++i) {
      const DependencyRow &d = deps[i];
      const std::string where = Key({{"id", d.id}, {"sid", d.sid}, {"tid", d.tid},
                                     {"tid_target", d.tid_target}});
      if (!HasDoc(d.id)) {
        Add(ViolationCode::kFkViolation, "dependency", i,
            "dependency " + where + " references an unknown document");
      }
      first_row_of.emplace(SentenceKey{d.id, d.sid}, i);
      if (d.tid == 0) ++roots[{d.id, d.sid}];
      else roots.try_emplace({d.id, d.sid}, 0);
      if (d.sid < 1 || d.tid < 0 || d.tid_target < 1) {
        Add(ViolationCode::kRange, "dependency", i,
            "dependency " + where + " has an out-of-range index");
        continue;
      }
      if (!keys.insert({d.id, d.sid, d.tid, d.tid_target}).second) {
        Add(ViolationCode::kDupKey, "dependency", i,
            "duplicate dependency key " + where);
        continue;
      }
      if (!targets.insert({d.id, d.sid, d.tid_target}).second) {
        Add(ViolationCode::kDupKey, "dependency", i,
            "token " + Key({{"id", d.id}, {"sid", d.sid}, {"tid", d.tid_target}}) +
                " has more than one governor");
        continue;
      }
      if (!HasToken(d.id, d.sid, d.tid_target)) {
        Add(ViolationCode::kFkViolation, "dependency", i,
            "dependency " + where + " targets a missing token");
      }
      if (d.tid != 0 && !HasToken(d.id, d.sid, d.tid)) {
        Add(ViolationCode::kFkViolation, "dependency", i,
            "dependency " + where + " has a missing governor token");
      }
    }
    for (const auto &[key, count] : roots) {
      if (count != 1) {
        Add(ViolationCode::kRange, "dependency", first_row_of[key],
            "sentence " + Key({{"id", key.first}, {"sid", key.second}}) + " has " +
                std::to_string(count) + " ROOT dependencies, expected 1");
      }
    }
  }

  // Tokens 1..last exist in (id, sid); tids are contiguous once valid.
  bool SpanExists(int64_t id, int64_t sid, int64_t last) const {
    return last <= SentenceLength(id, sid);
  }

  void CheckEntities() {
    const auto &rows = a_.entity();
    std::set<TokenKey> keys;
    for (size_t i = 0; i < rows.size(); ++i) {
      const EntityRow &e = rows[i];
      const std::string where = Key({{"id", e.id}, {"sid", e.sid}, {"tid", e.tid}});
      if (!HasDoc(e.id)) {
        Add(ViolationCode::kFkViolation, "entity", i,
            "entity " + where + " references an unknown document");
      }
      if (!keys.insert({e.id, e.sid, e.tid}).second) {
        Add(ViolationCode::kDupKey, "entity", i, "duplicate entity key " + where);
        continue;
      }
      if (e.tid < 1 || e.tid > e.tid_end) {
        Add(ViolationCode::kBadSpan, "entity", i,
            "entity " + where + " has tid_end " + std::to_string(e.tid_end) +
                " before its start");
      } else if (!SpanExists(e.id, e.sid, e.tid_end)) {
        Add(ViolationCode::kFkViolation, "entity", i,
            "entity " + where + " spans tokens missing from the token table");
      }
    }
  }

  void CheckCoreferences() {
    static const std::set<std::string, std::less<>> kMentionTypes = {
        "LIST", "NOMINAL", "PRONOMINAL", "PROPER"};
    static const std::set<std::string, std::less<>> kNumbers = {
        "PLURAL", "SINGULAR", "UNKNOWN"};
    static const std::set<std::string, std::less<>> kGenders = {
        "FEMALE", "MALE", "NEUTRAL", "UNKNOWN"};
    static const std::set<std::string, std::less<>> kAnimacy = {
        "ANIMATE", "INANIMATE", "UNKNOWN"};

    const auto &rows = a_.coreference();
    std::set<std::tuple<int64_t, int64_t, int64_t>> keys;
    std::set<std::pair<int64_t, int64_t>> mids;
    std::map<std::pair<int64_t, int64_t>, size_t> classes;  // -> first row
    std::set<std::pair<int64_t, int64_t>> canonical;
    for (size_t i = 0; i < rows.size(); ++i) {
      const CoreferenceRow &c = rows[i];
      const std::string where = Key({{"id", c.id}, {"rid", c.rid}, {"mid", c.mid}});
      if (!HasDoc(c.id)) {
        Add(ViolationCode::kFkViolation, "coreference", i,
            "mention " + where + " references an unknown document");
      }
      if (c.rid < 0 || c.mid < 0) {
        Add(ViolationCode::kRange, "coreference", i,
            "mention " + where + " has a negative key");
        continue;
      }
      classes.try_emplace({c.id, c.rid}, i);
      if (!keys.insert({c.id, c.rid, c.mid}).second) {
        Add(ViolationCode::kDupKey, "coreference", i,
            "duplicate mention key " + where);
        continue;
      }
      if (!mids.insert({c.id, c.mid}).second) {
        Add(ViolationCode::kDupKey, "coreference", i,
            "mention id " + std::to_string(c.mid) +
                " is not unique within document " + std::to_string(c.id));
        continue;
      }
      if (c.mid == c.rid) canonical.insert({c.id, c.rid});
      if (!kMentionTypes.count(c.mention_type) || !kNumbers.count(c.number) ||
          !kGenders.count(c.gender) || !kAnimacy.count(c.animacy)) {
        Add(ViolationCode::kRange, "coreference", i,
            "mention " + where + " has an unknown mention_type, number, "
            "gender or animacy value");
      }
      if (c.tid < 1 || c.tid > c.tid_head || c.tid_head > c.tid_end) {
        Add(ViolationCode::kBadSpan, "coreference", i,
            "mention " + where + " violates tid <= tid_head <= tid_end");
      } else if (!SpanExists(c.id, c.sid, c.tid_end)) {
        Add(ViolationCode::kFkViolation, "coreference", i,
            "mention " + where + " spans tokens missing from the token table");
      }
    }
    for (const auto &[cls, row] : classes) {
      if (!canonical.count(cls)) {
        Add(ViolationCode::kCanonicalMissing, "coreference", row,
            "reference class " + Key({{"id", cls.first}, {"rid", cls.second}}) +
                " has no mention with mid == rid");
      }
    }
  }

  void CheckSentences() {
    const auto &rows = a_.sentence();
    std::set<SentenceKey> keys;
    for (size_t i = 0; i < rows.size(); ++i) {
      const SentenceRow &s = rows[i];
      const std::string where = Key({{"id", s.id}, {"sid", s.sid}});
      if (!HasDoc(s.id)) {
        Add(ViolationCode::kFkViolation, "sentence", i,
            "sentence " + where + " references an unknown document");
      }
      if (!keys.insert({s.id, s.sid}).second) {
        Add(ViolationCode::kDupKey, "sentence", i,
            "duplicate sentence key " + where);
        continue;
      }
      if (SentenceLength(s.id, s.sid) < 0) {
        Add(ViolationCode::kFkViolation, "sentence", i,
            "sentence " + where + " has no tokens");
      }
      if (s.sentiment < 0 || s.sentiment > 4) {
        Add(ViolationCode::kRange, "sentence", i,
            "sentence " + where + " sentiment " + std::to_string(s.sentiment) +
                " is outside 0..4");
      }
    }
  }

  void CheckVectors() {
    if (!a_.vector()) return;
    const VectorMatrix &m = *a_.vector();
    if (m.values.size() != m.keys.size() * m.dim) {
      Add(ViolationCode::kVectorKeyMismatch, "vector", Violation::kWholeTable,
          "vector values do not form a " + std::to_string(m.keys.size()) + " x " +
              std::to_string(m.dim) + " matrix");
      return;
    }
    const auto &tokens = a_.token();
    if (m.keys.size() != tokens.size()) {
      Add(ViolationCode::kVectorKeyMismatch, "vector", Violation::kWholeTable,
          "vector has " + std::to_string(m.keys.size()) + " rows but there are " +
              std::to_string(tokens.size()) + " tokens");
      return;
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (m.keys[i] != tokens[i].key()) {
        Add(ViolationCode::kVectorKeyMismatch, "vector", i,
            "vector key " +
                Key({{"id", m.keys[i].id}, {"sid", m.keys[i].sid},
                     {"tid", m.keys[i].tid}}) +
                " does not match the token table");
        return;
      }
    }
  }

  const AnnotationSet &a_;
  ValidationReport report_;
  std::set<int64_t> doc_ids_;
  std::map<int64_t, std::u32string> decoded_text_;
  std::set<TokenKey> token_keys_;
  std::map<SentenceKey, int64_t> sentence_max_tid_;
};

std::string Summarize(const ValidationReport &report) {
  std::string out = std::to_string(report.violations.size()) + " violation(s)";
  const size_t shown = std::min<size_t>(report.violations.size(), 5);
  for (size_t i = 0; i < shown; ++i) {
    const Violation &v = report.violations[i];
    out += "\n  ";
    out += ViolationCodeName(v.code);
    out += " [" + v.table + "] " + v.message;
  }
  return out;
}

}  // namespace

std::string FormatTimestamp(Timestamp t) {
  const auto day = std::chrono::floor<days>(t);
  const std::chrono::year_month_day ymd{day};
  std::chrono::hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

Timestamp ParseTimestamp(std::string_view text) {
  int y, mo, d, h, mi, s;
  char tail = 0;
  const std::string copy(text);
  if (text.size() != 20 ||
      std::sscanf(copy.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &y, &mo, &d, &h,
                  &mi, &s, &tail) != 7 ||
      tail != 'Z') {
    throw Error(ErrorCode::kParseError, "bad ISO-8601 UTC timestamp '" + copy + "'");
  }
  const std::chrono::year_month_day ymd{
      std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
      std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59 || h < 0 || mi < 0 || s < 0) {
    throw Error(ErrorCode::kParseError, "bad ISO-8601 UTC timestamp '" + copy + "'");
  }
  return std::chrono::sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

const std::string *DocumentRow::Extra(std::string_view name) const {
  for (const auto &[key, value] : extra) {
    if (key == name) return &value;
  }
  return nullptr;
}

void SortByPrimaryKey(AnnotationTables *t) {
  std::stable_sort(t->document.begin(), t->document.end(),
                   [](const auto &a, const auto &b) { return a.id < b.id; });
  std::stable_sort(t->token.begin(), t->token.end(),
                   [](const auto &a, const auto &b) { return a.key() < b.key(); });
  std::stable_sort(t->dependency.begin(), t->dependency.end(),
                   [](const auto &a, const auto &b) {
                     return std::tie(a.id, a.sid, a.tid, a.tid_target) <
                            std::tie(b.id, b.sid, b.tid, b.tid_target);
                   });
  std::stable_sort(t->entity.begin(), t->entity.end(),
                   [](const auto &a, const auto &b) {
                     return std::tie(a.id, a.sid, a.tid) <
                            std::tie(b.id, b.sid, b.tid);
                   });
  std::stable_sort(t->coreference.begin(), t->coreference.end(),
                   [](const auto &a, const auto &b) {
                     return std::tie(a.id, a.rid, a.mid) <
                            std::tie(b.id, b.rid, b.mid);
                   });
  std::stable_sort(t->sentence.begin(), t->sentence.end(),
                   [](const auto &a, const auto &b) {
                     return std::tie(a.id, a.sid) < std::tie(b.id, b.sid);
                   });
}

AnnotationSet::AnnotationSet(AnnotationTables tables) : t_(std::move(tables)) {
  SortByPrimaryKey(&t_);
}

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kDupKey: return "DUP_KEY";
    case ViolationCode::kFkViolation: return "FK_VIOLATION";
    case ViolationCode::kBadSpan: return "BAD_SPAN";
    case ViolationCode::kCanonicalMissing: return "CANONICAL_MISSING";
    case ViolationCode::kRange: return "RANGE";
    case ViolationCode::kOffsetMismatch: return "OFFSET_MISMATCH";
    case ViolationCode::kVectorKeyMismatch: return "VECTOR_KEY_MISMATCH";
  }
  return "UNKNOWN";
}

ValidationReport Validate(const AnnotationSet &a) { return Validator(a).Run(); }

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(Summarize(report)), report_(std::move(report)) {}

void RequireValid(const AnnotationSet &a) {
  ValidationReport report = Validate(a);
  if (!report.ok()) throw ValidationError(std::move(report));
}

AnnotationSet NewAnnotation(std::vector<DocumentRow> documents) {
  std::set<int64_t> seen;
  for (const DocumentRow &d : documents) {
    if (d.id < 1) {
      throw Error(ErrorCode::kBadDocId,
                  "document id " + std::to_string(d.id) + " is not positive");
    }
    if (!seen.insert(d.id).second) {
      throw Error(ErrorCode::kDuplicateDocId,
                  "document id " + std::to_string(d.id) + " repeats");
    }
  }
  if (!seen.empty() && *seen.rbegin() != static_cast<int64_t>(seen.size())) {
    throw Error(ErrorCode::kBadDocId,
                "document ids must be 1.." + std::to_string(seen.size()) + ", found " +
                    std::to_string(*seen.rbegin()));
  }
  AnnotationTables tables;
  tables.document = std::move(documents);
  AnnotationSet a(std::move(tables));
  RequireValid(a);
  return a;
}

std::vector<DocumentRow> BuildDocumentTable(const std::vector<std::string> &uris,
                                            const Frame *meta,
                                            const std::string &language,
                                            Timestamp time) {
  if (meta != nullptr && meta->cols() > 0 && meta->rows() != uris.size()) {
    throw Error(ErrorCode::kMetaLengthMismatch,
                "metadata has " + std::to_string(meta->rows()) +
                    " rows but the corpus has " + std::to_string(uris.size()) +
                    " documents");
  }
  const bool lang_ok = language.size() == 2 && language[0] >= 'a' &&
                       language[0] <= 'z' && language[1] >= 'a' &&
                       language[1] <= 'z';
  if (!lang_ok) {
    throw Error(ErrorCode::kRange,
                "language '" + language + "' is not an ISO 639-1 code");
  }
  std::vector<DocumentRow> docs;
  docs.reserve(uris.size());
  for (size_t i = 0; i < uris.size(); ++i) {
    DocumentRow d;
    d.id = static_cast<int64_t>(i) + 1;
    d.time = time;
    d.version = kVersion;
    d.language = language;
    d.uri = uris[i];
    if (meta != nullptr) {
      for (size_t c = 0; c < meta->cols(); ++c) {
        d.extra.emplace_back(meta->names[c], meta->columns[c][i].value_or(""));
      }
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

Timestamp NowSeconds() {
  return std::chrono::floor<seconds>(std::chrono::system_clock::now());
}

}  // namespace cleantables

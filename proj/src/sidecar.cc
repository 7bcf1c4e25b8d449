#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "cleantables/error.h"
#include "cleantables/ingest.h"
#include "cleantables/strings.h"

namespace cleantables {

namespace {

const char *TableName(SidecarKind kind) {
  switch (kind) {
    case SidecarKind::kEntity: return "entity";
    case SidecarKind::kCoreference: return "coreference";
    case SidecarKind::kSentence: return "sentence";
  }
  return "";
}

// A data line of the sidecar with fields addressed by schema column name.
class SidecarRecord {
 public:
  SidecarRecord(const std::vector<size_t> &index, std::vector<std::string_view> fields,
                size_t line)
      : index_(index), fields_(std::move(fields)), line_(line) {}

  size_t line() const { return line_; }

  std::optional<std::string> Text(size_t column) const {
    std::string_view f = fields_[index_[column]];
    if (f.empty()) return std::nullopt;
    return std::string(f);
  }

  std::string RequiredText(size_t column, const std::string &name) const {
    auto v = Text(column);
    if (!v) Fail("missing value for column '" + name + "'");
    return *v;
  }

  int64_t Int(size_t column, const std::string &name) const {
    auto v = ParseInt(fields_[index_[column]]);
    if (!v) {
      Fail("column '" + name + "' value '" +
           std::string(fields_[index_[column]]) + "' is not an integer");
    }
    return *v;
  }

  [[noreturn]] void Fail(const std::string &why) const {
    throw Error(ErrorCode::kMalformedLine, "line " + std::to_string(line_) + ": " + why);
  }

 private:
  const std::vector<size_t> &index_;
  std::vector<std::string_view> fields_;
  size_t line_;
};

template <typename Row, typename KeyFn>
void SortWithLines(std::vector<Row> *rows, std::vector<size_t> *lines, KeyFn key) {
  std::vector<size_t> order(rows->size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return key((*rows)[a]) < key((*rows)[b]);
  });
  std::vector<Row> sorted;
  std::vector<size_t> sorted_lines;
  for (size_t i : order) {
    sorted.push_back(std::move((*rows)[i]));
    sorted_lines.push_back((*lines)[i]);
  }
  *rows = std::move(sorted);
  *lines = std::move(sorted_lines);
}

}  // namespace

SidecarKind ParseSidecarKind(std::string_view name) {
  if (name == "entity") return SidecarKind::kEntity;
  if (name == "coreference") return SidecarKind::kCoreference;
  if (name == "sentence") return SidecarKind::kSentence;
  throw Error(ErrorCode::kUnknownTable,
              "'" + std::string(name) + "' is not a sidecar table "
              "(entity, coreference, sentence)");
}

const std::vector<std::string> &SidecarColumns(SidecarKind kind) {
  static const std::vector<std::string> kEntity = {
      "id", "sid", "tid", "tid_end", "entity_type", "entity", "entity_normalized"};
  static const std::vector<std::string> kCoreference = {
      "id", "rid", "mid", "mention", "mention_type", "number", "gender",
      "animacy", "sid", "tid", "tid_end", "tid_head"};
  static const std::vector<std::string> kSentence = {"id", "sid", "sentiment"};
  switch (kind) {
    case SidecarKind::kEntity: return kEntity;
    case SidecarKind::kCoreference: return kCoreference;
    case SidecarKind::kSentence: return kSentence;
  }
  return kSentence;
}

AnnotationSet LoadSidecar(const AnnotationSet &a, SidecarKind kind, std::istream &in) {
  const std::vector<std::string> &schema = SidecarColumns(kind);
  std::string raw;
  size_t line_no = 0;
  if (!std::getline(in, raw)) {
    throw Error(ErrorCode::kMissingColumn, "sidecar stream has no header row");
  }
  ++line_no;
  const auto header = Split(StripLineEnd(raw), '\t');
  // index[k] = position in the file of schema column k.
  std::vector<size_t> index(schema.size(), static_cast<size_t>(-1));
  for (size_t pos = 0; pos < header.size(); ++pos) {
    auto it = std::find(schema.begin(), schema.end(), header[pos]);
    if (it == schema.end()) {
      throw Error(ErrorCode::kUnknownColumn,
                  "column '" + std::string(header[pos]) + "' is not part of the " +
                      TableName(kind) + " schema");
    }
    const auto k = static_cast<size_t>(it - schema.begin());
    if (index[k] != static_cast<size_t>(-1)) {
      throw Error(ErrorCode::kUnknownColumn,
                  "column '" + std::string(header[pos]) + "' appears twice");
    }
    index[k] = pos;
  }
  for (size_t k = 0; k < schema.size(); ++k) {
    if (index[k] == static_cast<size_t>(-1)) {
      throw Error(ErrorCode::kMissingColumn,
                  "column '" + schema[k] + "' is missing from the header");
    }
  }

  AnnotationTables tables = a.tables();
  std::vector<size_t> lines;
  std::vector<EntityRow> entities;
  std::vector<CoreferenceRow> mentions;
  std::vector<SentenceRow> sentences;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripLineEnd(raw);
    if (line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    SidecarRecord r(index, std::move(fields), line_no);
    switch (kind) {
      case SidecarKind::kEntity: {
        EntityRow e;
        e.id = r.Int(0, schema[0]);
        e.sid = r.Int(1, schema[1]);
        e.tid = r.Int(2, schema[2]);
        e.tid_end = r.Int(3, schema[3]);
        e.entity_type = r.RequiredText(4, schema[4]);
        e.entity = r.RequiredText(5, schema[5]);
        e.entity_normalized = r.Text(6);
        entities.push_back(std::move(e));
        break;
      }
      case SidecarKind::kCoreference: {
        CoreferenceRow c;
        c.id = r.Int(0, schema[0]);
        c.rid = r.Int(1, schema[1]);
        c.mid = r.Int(2, schema[2]);
        c.mention = r.RequiredText(3, schema[3]);
        c.mention_type = r.RequiredText(4, schema[4]);
        c.number = r.RequiredText(5, schema[5]);
        c.gender = r.RequiredText(6, schema[6]);
        c.animacy = r.RequiredText(7, schema[7]);
        c.sid = r.Int(8, schema[8]);
        c.tid = r.Int(9, schema[9]);
        c.tid_end = r.Int(10, schema[10]);
        c.tid_head = r.Int(11, schema[11]);
        mentions.push_back(std::move(c));
        break;
      }
      case SidecarKind::kSentence: {
        SentenceRow s;
        s.id = r.Int(0, schema[0]);
        s.sid = r.Int(1, schema[1]);
        s.sentiment = r.Int(2, schema[2]);
        if (s.sentiment < 0 || s.sentiment > 4) {
          throw Error(ErrorCode::kRange,
                      "line " + std::to_string(line_no) + ": sentiment " +
                          std::to_string(s.sentiment) + " is outside 0..4");
        }
        sentences.push_back(s);
        break;
      }
    }
    lines.push_back(line_no);
  }

  switch (kind) {
    case SidecarKind::kEntity:
      SortWithLines(&entities, &lines,
                    [](const EntityRow &e) { return std::tie(e.id, e.sid, e.tid); });
      tables.entity = std::move(entities);
      break;
    case SidecarKind::kCoreference:
      SortWithLines(&mentions, &lines, [](const CoreferenceRow &c) {
        return std::tie(c.id, c.rid, c.mid);
      });
      tables.coreference = std::move(mentions);
      break;
    case SidecarKind::kSentence:
      SortWithLines(&sentences, &lines,
                    [](const SentenceRow &s) { return std::tie(s.id, s.sid); });
      tables.sentence = std::move(sentences);
      break;
  }

  AnnotationSet result(std::move(tables));
  ValidationReport report = Validate(result);
  if (!report.ok()) {
    for (Violation &v : report.violations) {
      if (v.table == TableName(kind) && v.row != Violation::kWholeTable &&
          v.row < lines.size()) {
        v.message = "line " + std::to_string(lines[v.row]) + ": " + v.message;
      }
    }
    throw ValidationError(std::move(report));
  }
  return result;
}

}  // namespace cleantables

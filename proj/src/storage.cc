#include "cleantables/storage.h"

#include <filesystem>

#include "cleantables/accessors.h"
#include "cleantables/csv.h"
#include "cleantables/error.h"
#include "cleantables/files.h"
#include "cleantables/strings.h"
#include "cleantables/version.h"
#include "json.hpp"

namespace cleantables {

namespace fs = std::filesystem;

namespace {

constexpr const char *kTableFiles[] = {"document", "token", "dependency",
                                       "entity", "coreference", "sentence"};

Frame RawTextFrame(const std::map<int64_t, std::string> &raw) {
  Frame f;
  std::vector<Cell> id, text;
  for (const auto &[doc, t] : raw) {
    id.push_back(std::to_string(doc));
    text.push_back(t);
  }
  f.Add("id", std::move(id));
  f.Add("text", std::move(text));
  return f;
}

// Typed access to the cells of one parsed table file.
class TableReader {
 public:
  TableReader(const fs::path &path, const std::vector<std::string> &expected,
              bool allow_extra)
      : file_(path.filename().string()) {
    if (!fs::exists(path)) {
      throw Error(ErrorCode::kSchemaMismatch, "missing table file " + path.string());
    }
    frame_ = ReadCsv(ReadFile(path.string()), file_, &lines_);
    const auto &names = frame_.names;
    bool ok = names.size() >= expected.size() &&
              (allow_extra || names.size() == expected.size());
    for (size_t i = 0; ok && i < expected.size(); ++i) ok = names[i] == expected[i];
    if (!ok) {
      std::string want;
      for (const auto &e : expected) want += (want.empty() ? "" : ",") + e;
      throw Error(ErrorCode::kSchemaMismatch,
                  file_ + ": header does not match schema " + want);
    }
  }

  size_t rows() const { return frame_.rows(); }
  const Frame &frame() const { return frame_; }

  const Cell &At(size_t col, size_t row) const { return frame_.columns[col][row]; }

  int64_t Int(size_t col, size_t row) const {
    auto v = OptInt(col, row);
    if (!v) Fail(row, "missing value in column '" + frame_.names[col] + "'");
    return *v;
  }

  std::optional<int64_t> OptInt(size_t col, size_t row) const {
    const Cell &c = At(col, row);
    if (!c) return std::nullopt;
    auto v = ParseInt(*c);
    if (!v) Fail(row, "'" + *c + "' in column '" + frame_.names[col] + "' is not an integer");
    return v;
  }

  double Real(size_t col, size_t row) const {
    const Cell &c = At(col, row);
    std::optional<double> v = c ? ParseDouble(*c) : std::nullopt;
    if (!v) Fail(row, "column '" + frame_.names[col] + "' does not hold a number");
    return *v;
  }

  std::string Text(size_t col, size_t row) const {
    const Cell &c = At(col, row);
    if (!c) Fail(row, "missing value in column '" + frame_.names[col] + "'");
    return *c;
  }

  [[noreturn]] void Fail(size_t row, const std::string &why) const {
    throw Error(ErrorCode::kParseError,
                file_ + ":" + std::to_string(lines_[row]) + ": " + why);
  }

 private:
  std::string file_;
  Frame frame_;
  std::vector<size_t> lines_;
};

const std::vector<std::string> &Schema(const std::string &table) {
  static const std::map<std::string, std::vector<std::string>> kSchemas = {
      {"document", {"id", "time", "version", "language", "uri"}},
      {"token", {"id", "sid", "tid", "word", "lemma", "upos", "pos", "cid"}},
      {"dependency", {"id", "sid", "tid", "tid_target", "relation", "relation_full"}},
      {"entity",
       {"id", "sid", "tid", "tid_end", "entity_type", "entity", "entity_normalized"}},
      {"coreference",
       {"id", "rid", "mid", "mention", "mention_type", "number", "gender", "animacy",
        "sid", "tid", "tid_end", "tid_head"}},
      {"sentence", {"id", "sid", "sentiment"}},
      {"vector", {"id", "sid", "tid"}},
      {"raw_text", {"id", "text"}},
  };
  return kSchemas.at(table);
}

}  // namespace

void WriteAnnotation(const AnnotationSet &a, const std::string &dir,
                     const WriteOptions &options) {
  RequireValid(a);
  const fs::path base(dir);
  std::error_code ec;
  if (fs::exists(base, ec)) {
    if (!fs::is_directory(base, ec)) {
      throw Error(ErrorCode::kIo, dir + " exists and is not a directory");
    }
    if (!fs::is_empty(base, ec) && !options.force) {
      throw Error(ErrorCode::kRefuseOverwrite,
                  dir + " is not empty; pass force to overwrite");
    }
  }
  fs::create_directories(base, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());

  auto write = [&](const std::string &name, const Frame &frame) {
    WriteFileAtomic((base / (name + ".csv")).string(), WriteCsv(frame));
  };
  write("document", ToFrame(a.document()));
  write("token", ToFrame(a.token()));
  write("dependency", ToFrame(a.dependency()));
  write("entity", ToFrame(a.entity()));
  write("coreference", ToFrame(a.coreference()));
  write("sentence", ToFrame(a.sentence()));
  for (const auto &[name, present] :
       {std::pair<std::string, bool>{"vector", a.vector().has_value()},
        std::pair<std::string, bool>{"raw_text", !a.raw_text().empty()}}) {
    if (!present) fs::remove(base / (name + ".csv"), ec);
  }
  if (a.vector()) write("vector", ToFrame(*a.vector()));
  if (!a.raw_text().empty()) write("raw_text", RawTextFrame(a.raw_text()));

  nlohmann::ordered_json manifest;
  manifest["format_version"] = kFormatVersion;
  manifest["tool_version"] = kVersion;
  manifest["created"] = FormatTimestamp(options.created.value_or(NowSeconds()));
  std::vector<std::string> extra;
  if (!a.document().empty()) {
    for (const auto &[name, value] : a.document().front().extra) extra.push_back(name);
  }
  manifest["document_extra_columns"] = extra;
  manifest["vector_dim"] = a.vector() ? nlohmann::ordered_json(a.vector()->dim)
                                      : nlohmann::ordered_json(nullptr);
  WriteFileAtomic((base / "manifest.json").string(), manifest.dump(2) + "\n");
}

AnnotationSet ReadAnnotation(const std::string &dir, const ReadOptions &options) {
  const fs::path base(dir);
  if (!fs::is_directory(base)) {
    throw Error(ErrorCode::kIo, dir + " is not a corpus directory");
  }
  for (const char *name : kTableFiles) {
    if (!fs::exists(base / (std::string(name) + ".csv"))) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "missing table file " + (base / (std::string(name) + ".csv")).string());
    }
  }

  std::optional<std::vector<std::string>> manifest_extra;
  if (fs::exists(base / "manifest.json")) {
    nlohmann::json manifest;
    try {
      manifest = nlohmann::json::parse(ReadFile((base / "manifest.json").string()));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kParseError, "manifest.json: " + std::string(e.what()));
    }
    if (manifest.value("format_version", 0) != kFormatVersion) {
      throw Error(ErrorCode::kSchemaMismatch, "manifest.json: unsupported format_version");
    }
    if (manifest.contains("document_extra_columns")) {
      manifest_extra = manifest["document_extra_columns"].get<std::vector<std::string>>();
    }
  }

  AnnotationTables t;
  {
    TableReader r(base / "document.csv", Schema("document"), true);
    const auto &names = r.frame().names;
    std::vector<std::string> extra(names.begin() + 5, names.end());
    if (manifest_extra && *manifest_extra != extra) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "document.csv extra columns differ from manifest.json");
    }
    for (size_t i = 0; i < r.rows(); ++i) {
      DocumentRow d;
      d.id = r.Int(0, i);
      try {
        d.time = ParseTimestamp(r.Text(1, i));
      } catch (const Error &e) {
        r.Fail(i, e.what());
      }
      d.version = r.Text(2, i);
      d.language = r.Text(3, i);
      d.uri = r.Text(4, i);
      for (size_t c = 5; c < names.size(); ++c) {
        d.extra.emplace_back(names[c], r.At(c, i).value_or(""));
      }
      t.document.push_back(std::move(d));
    }
  }
  {
    TableReader r(base / "token.csv", Schema("token"), false);
    for (size_t i = 0; i < r.rows(); ++i) {
      TokenRow row;
      row.id = r.Int(0, i);
      row.sid = r.Int(1, i);
      row.tid = r.Int(2, i);
      row.word = r.Text(3, i);
      row.lemma = r.At(4, i);
      row.upos = r.At(5, i);
      row.pos = r.At(6, i);
      row.cid = r.OptInt(7, i);
      t.token.push_back(std::move(row));
    }
  }
  {
    TableReader r(base / "dependency.csv", Schema("dependency"), false);
    for (size_t i = 0; i < r.rows(); ++i) {
      DependencyRow row;
      row.id = r.Int(0, i);
      row.sid = r.Int(1, i);
      row.tid = r.Int(2, i);
      row.tid_target = r.Int(3, i);
      row.relation = r.Text(4, i);
      row.relation_full = r.At(5, i);
      t.dependency.push_back(std::move(row));
    }
  }
  {
    TableReader r(base / "entity.csv", Schema("entity"), false);
    for (size_t i = 0; i < r.rows(); ++i) {
      EntityRow row;
      row.id = r.Int(0, i);
      row.sid = r.Int(1, i);
      row.tid = r.Int(2, i);
      row.tid_end = r.Int(3, i);
      row.entity_type = r.Text(4, i);
      row.entity = r.Text(5, i);
      row.entity_normalized = r.At(6, i);
      t.entity.push_back(std::move(row));
    }
  }
  {
    TableReader r(base / "coreference.csv", Schema("coreference"), false);
    for (size_t i = 0; i < r.rows(); ++i) {
      CoreferenceRow row;
      row.id = r.Int(0, i);
      row.rid = r.Int(1, i);
      row.mid = r.Int(2, i);
      row.mention = r.Text(3, i);
      row.mention_type = r.Text(4, i);
      row.number = r.Text(5, i);
      row.gender = r.Text(6, i);
      row.animacy = r.Text(7, i);
      row.sid = r.Int(8, i);
      row.tid = r.Int(9, i);
      row.tid_end = r.Int(10, i);
      row.tid_head = r.Int(11, i);
      t.coreference.push_back(std::move(row));
    }
  }
  {
    TableReader r(base / "sentence.csv", Schema("sentence"), false);
    for (size_t i = 0; i < r.rows(); ++i) {
      t.sentence.push_back({r.Int(0, i), r.Int(1, i), r.Int(2, i)});
    }
  }
  if (fs::exists(base / "vector.csv")) {
    TableReader r(base / "vector.csv", Schema("vector"), true);
    const auto &names = r.frame().names;
    VectorMatrix m;
    m.dim = names.size() - 3;
    for (size_t j = 0; j < m.dim; ++j) {
      if (names[3 + j] != "v" + std::to_string(j + 1)) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "vector.csv: column " + std::to_string(j + 4) + " must be v" +
                        std::to_string(j + 1));
      }
    }
    m.keys.reserve(r.rows());
    m.values.reserve(r.rows() * m.dim);
    for (size_t i = 0; i < r.rows(); ++i) {
      m.keys.push_back({r.Int(0, i), r.Int(1, i), r.Int(2, i)});
      for (size_t j = 0; j < m.dim; ++j) m.values.push_back(r.Real(3 + j, i));
    }
    t.vector = std::move(m);
  }
  if (fs::exists(base / "raw_text.csv")) {
    TableReader r(base / "raw_text.csv", Schema("raw_text"), false);
    for (size_t i = 0; i < r.rows(); ++i) t.raw_text[r.Int(0, i)] = r.Text(1, i);
  }

  AnnotationSet a(std::move(t));
  if (options.validate) RequireValid(a);
  return a;
}

}  // namespace cleantables

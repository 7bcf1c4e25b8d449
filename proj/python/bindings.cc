#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>

#include "cleantables/accessors.h"
#include "cleantables/analytics.h"
#include "cleantables/error.h"
#include "cleantables/files.h"
#include "cleantables/ingest.h"
#include "cleantables/storage.h"
#include "cleantables/tokenize.h"
#include "cleantables/version.h"

namespace py = pybind11;
using namespace cleantables;

namespace {

py::dict FrameToDict(const Frame &f) {
  py::dict d;
  for (size_t c = 0; c < f.cols(); ++c) d[py::str(f.names[c])] = py::cast(f.columns[c]);
  return d;
}

// Column dict of optional strings, in insertion order.
Frame DictToFrame(const py::dict &d) {
  Frame f;
  for (auto item : d) {
    f.Add(item.first.cast<std::string>(), item.second.cast<std::vector<Cell>>());
  }
  return f;
}

std::optional<Timestamp> OptTime(const std::optional<std::string> &s) {
  if (!s) return std::nullopt;
  return ParseTimestamp(*s);
}

std::ifstream Open(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

py::dict MatrixToDict(const TermMatrix &m) {
  std::vector<size_t> rows, cols;
  std::vector<double> values;
  for (const Triplet &t : m.triplets) {
    rows.push_back(t.doc);
    cols.push_back(t.term);
    values.push_back(t.value);
  }
  py::dict d;
  d["doc_ids"] = m.doc_ids;
  d["vocab"] = m.vocab;
  d["row"] = rows;
  d["col"] = cols;
  d["value"] = values;
  d["shape"] = py::make_tuple(m.rows(), m.cols());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tidy annotation tables: core routines";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error_type(m, "Error");
  static py::exception<ValidationError> validation_type(m, "ValidationError", error_type.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError &e) {
      py::set_error(validation_type, e.what());
    } catch (const Error &e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      py::set_error(error_type, exc);
    }
  });

  py::class_<AnnotationSet>(m, "AnnotationSet")
      .def(
          "get_table",
          [](const AnnotationSet &a, const std::string &name, bool include_root,
             bool join_tokens) { return FrameToDict(GetTable(a, name, include_root, join_tokens)); },
          py::arg("name"), py::arg("include_root") = false, py::arg("join_tokens") = false)
      .def("validate",
           [](const AnnotationSet &a) {
             std::vector<py::tuple> out;
             for (const Violation &v : Validate(a).violations) {
               py::object row = v.row == Violation::kWholeTable ? py::none() : py::cast(v.row);
               out.push_back(py::make_tuple(std::string(ViolationCodeName(v.code)), v.table,
                                            row, v.message));
             }
             return out;
           })
      .def_property_readonly("n_documents",
                             [](const AnnotationSet &a) { return a.document().size(); })
      .def_property_readonly("n_tokens", [](const AnnotationSet &a) { return a.token().size(); })
      .def("__eq__", [](const AnnotationSet &a, const AnnotationSet &b) { return a == b; });

  m.def(
      "annotate_texts",
      [](const std::vector<std::string> &texts, std::optional<std::vector<std::string>> uris,
         std::optional<py::dict> meta, const std::string &language,
         std::optional<std::string> time) {
        std::vector<CorpusDocument> corpus;
        for (size_t i = 0; i < texts.size(); ++i) {
          corpus.push_back({uris ? uris->at(i) : "doc" + std::to_string(i + 1), texts[i]});
        }
        TokenizerOptions opts;
        opts.language = language;
        opts.time = OptTime(time);
        opts.abbreviations = Abbreviations::FromEnvironment();
        std::optional<Frame> f;
        if (meta) f = DictToFrame(*meta);
        return RunTokenizerBackend(corpus, f ? &*f : nullptr, opts);
      },
      py::arg("texts"), py::arg("uris") = py::none(), py::arg("meta") = py::none(),
      py::arg("language") = "en", py::arg("time") = py::none());

  m.def(
      "from_conllu",
      [](const std::vector<std::string> &paths, std::optional<py::dict> meta,
         const std::string &language, std::optional<std::string> time) {
        std::vector<ConlluDocument> docs;
        for (const std::string &path : paths) {
          for (auto &d : SplitConlluDocuments(path, ParseConlluString(ReadFile(path)))) {
            docs.push_back(std::move(d));
          }
        }
        ConllOptions opts;
        opts.language = language;
        opts.time = OptTime(time);
        std::optional<Frame> f;
        if (meta) f = DictToFrame(*meta);
        return ConllToAnnotation(docs, f ? &*f : nullptr, opts);
      },
      py::arg("paths"), py::arg("meta") = py::none(), py::arg("language") = "en",
      py::arg("time") = py::none());

  m.def(
      "load_sidecar",
      [](const AnnotationSet &a, const std::string &kind, const std::string &path) {
        std::ifstream in = Open(path);
        return LoadSidecar(a, ParseSidecarKind(kind), in);
      },
      py::arg("annotation"), py::arg("kind"), py::arg("path"));

  m.def(
      "attach_vectors",
      [](const AnnotationSet &a, const std::string &path) {
        std::ifstream in = Open(path);
        return AttachVectors(a, LoadEmbeddings(in));
      },
      py::arg("annotation"), py::arg("path"));

  m.def(
      "write_annotation",
      [](const AnnotationSet &a, const std::string &dir, bool force,
         std::optional<std::string> created) {
        WriteOptions opts;
        opts.force = force;
        opts.created = OptTime(created);
        WriteAnnotation(a, dir, opts);
      },
      py::arg("annotation"), py::arg("dir"), py::arg("force") = false,
      py::arg("created") = py::none());

  m.def(
      "read_annotation",
      [](const std::string &dir, bool validate) { return ReadAnnotation(dir, {validate}); },
      py::arg("dir"), py::arg("validate") = true);

  m.def(
      "get_tfidf",
      [](const py::dict &tokens, double min_df, double max_df, const std::string &type,
         const std::string &tf_weight, const std::string &doc_var,
         const std::string &token_var) {
        TfidfOptions o;
        o.min_df = min_df;
        o.max_df = max_df;
        o.type = ParseTermKind(type);
        o.tf_weight = ParseTfWeight(tf_weight);
        o.doc_var = doc_var;
        o.token_var = token_var;
        return MatrixToDict(GetTfidf(DictToFrame(tokens), o));
      },
      py::arg("tokens"), py::arg("min_df") = 0.0, py::arg("max_df") = 1.0,
      py::arg("type") = "tfidf", py::arg("tf_weight") = "raw", py::arg("doc_var") = "id",
      py::arg("token_var") = "lemma");

  m.def(
      "tidy_pca",
      [](const std::vector<std::vector<double>> &rows, size_t k) {
        DenseMatrix d;
        d.rows = rows.size();
        d.cols = rows.empty() ? 0 : rows.front().size();
        for (const auto &r : rows) {
          if (r.size() != d.cols) throw Error(ErrorCode::kDimMismatch, "ragged matrix rows");
          d.values.insert(d.values.end(), r.begin(), r.end());
        }
        const PcaTable t = TidyPca(d, Frame{}, k);
        return py::make_tuple(t.scores, t.singular_values);
      },
      py::arg("matrix"), py::arg("k") = 2);

  m.def("sentence_lengths", &SentenceLengths, py::arg("annotation"), py::arg("probs"));
  m.def(
      "top_terms",
      [](const AnnotationSet &a, const std::string &filter, std::optional<std::string> value,
         size_t n) {
        std::vector<std::pair<std::string, int64_t>> out;
        for (const auto &r : TopTerms(a, filter, value, n)) out.emplace_back(r.value, r.count);
        return out;
      },
      py::arg("annotation"), py::arg("filter") = "upos", py::arg("value") = "NOUN",
      py::arg("n") = 20);
  m.def(
      "top_entities",
      [](const AnnotationSet &a, const std::string &type, size_t n) {
        std::vector<std::pair<std::string, int64_t>> out;
        for (const auto &r : TopEntities(a, type, n)) out.emplace_back(r.value, r.count);
        return out;
      },
      py::arg("annotation"), py::arg("entity_type") = "GPE", py::arg("n") = 10);

  m.def(
      "export_matrix",
      [](const AnnotationSet &a, const std::string &dir, double min_df, double max_df,
         const std::string &type, const std::string &tf_weight) {
        TfidfOptions o;
        o.min_df = min_df;
        o.max_df = max_df;
        o.type = ParseTermKind(type);
        o.tf_weight = ParseTfWeight(tf_weight);
        ExportMatrix(GetTfidf(ToFrame(a.token()), o), dir);
      },
      py::arg("annotation"), py::arg("dir"), py::arg("min_df") = 0.0, py::arg("max_df") = 1.0,
      py::arg("type") = "tfidf", py::arg("tf_weight") = "raw");
}

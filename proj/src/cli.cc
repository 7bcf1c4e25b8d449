#include "cleantables/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cleantables/accessors.h"
#include "cleantables/analytics.h"
#include "cleantables/csv.h"
#include "cleantables/error.h"
#include "cleantables/files.h"
#include "cleantables/ingest.h"
#include "cleantables/storage.h"
#include "cleantables/strings.h"
#include "cleantables/tokenize.h"
#include "cleantables/version.h"

namespace cleantables {

namespace {

struct Output {
  std::string path;

  void Emit(const Frame &frame, std::ostream &out) const {
    const std::string text = WriteCsv(frame);
    if (path.empty()) {
      out << text;
    } else {
      WriteFileAtomic(path, text);
    }
  }
};

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

std::optional<Frame> ReadMeta(const std::string &path) {
  if (path.empty()) return std::nullopt;
  return ReadCsv(ReadFile(path), path);
}

std::optional<Timestamp> ParseFixedTime(const std::string &text) {
  if (text.empty()) return std::nullopt;
  return ParseTimestamp(text);
}

// Comma separated probabilities. "a,b,...,c" expands like R's
// seq(a, c, by = b - a): a + i * (b - a) while not past c.
std::vector<double> ParseProbs(const std::string &text) {
  std::vector<double> probs;
  bool ellipsis = false;
  std::optional<double> last;
  for (std::string_view part : Split(text, ',')) {
    if (part == "...") {
      if (probs.size() != 2 || ellipsis) {
        throw Error(ErrorCode::kBadRange, "'...' must follow exactly two probabilities");
      }
      ellipsis = true;
      continue;
    }
    auto v = ParseDouble(part);
    if (!v) throw Error(ErrorCode::kBadRange, "'" + std::string(part) + "' is not a probability");
    if (ellipsis) {
      if (last) throw Error(ErrorCode::kBadRange, "'...' must be followed by one end value");
      last = v;
    } else {
      probs.push_back(*v);
    }
  }
  if (ellipsis) {
    if (!last) throw Error(ErrorCode::kBadRange, "'...' needs an end value");
    const double from = probs[0], by = probs[1] - probs[0];
    if (!(by > 0)) throw Error(ErrorCode::kBadRange, "'...' needs an increasing step");
    const auto n = static_cast<int64_t>(std::floor((*last - from) / by + 1e-10));
    probs.clear();
    for (int64_t i = 0; i <= n; ++i) probs.push_back(from + static_cast<double>(i) * by);
  }
  return probs;
}

// The document column named `name` rendered as text, or nullopt when the
// document table has no such column.
std::optional<std::string> DocumentValue(const DocumentRow &d, const std::string &name) {
  if (name == "id") return std::to_string(d.id);
  if (name == "time") return FormatTimestamp(d.time);
  if (name == "version") return d.version;
  if (name == "language") return d.language;
  if (name == "uri") return d.uri;
  if (const std::string *v = d.Extra(name)) return *v;
  return std::nullopt;
}

DocumentFilter MakeWhereFilter(const AnnotationSet &a,
                               const std::vector<std::string> &clauses) {
  std::vector<std::pair<std::string, std::string>> tests;
  for (const std::string &clause : clauses) {
    const size_t eq = clause.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kUsage, "--where expects column=value, got '" + clause + "'");
    }
    tests.emplace_back(clause.substr(0, eq), clause.substr(eq + 1));
  }
  for (const auto &[column, value] : tests) {
    if (!a.document().empty() && !DocumentValue(a.document().front(), column)) {
      throw Error(ErrorCode::kUnknownColumn, "document table has no column '" + column + "'");
    }
  }
  if (tests.empty()) return {};
  return [tests](const DocumentRow &d) {
    for (const auto &[column, value] : tests) {
      if (DocumentValue(d, column) != value) return false;
    }
    return true;
  };
}

struct TermArgs {
  std::string in;
  std::string filter_pos;
  std::string filter_upos;
  double min_df = 0.0;
  double max_df = 1.0;
  std::string type = "tfidf";
  std::string tf_weight = "raw";
  std::string doc_var = "id";
  std::string token_var = "lemma";

  void Register(CLI::App *cmd) {
    cmd->add_option("--in", in, "Corpus directory")->required();
    cmd->add_option("--filter-pos", filter_pos, "Keep tokens whose pos is in this comma list");
    cmd->add_option("--filter-upos", filter_upos,
                    "Keep tokens whose upos is in this comma list");
    cmd->add_option("--min-df", min_df, "Minimum document proportion")->capture_default_str();
    cmd->add_option("--max-df", max_df, "Maximum document proportion")->capture_default_str();
    cmd->add_option("--type", type, "tf, idf or tfidf")->capture_default_str();
    cmd->add_option("--tf-weight", tf_weight, "raw, lognorm, binary or dnorm")
        ->capture_default_str();
    cmd->add_option("--doc-var", doc_var, "id or sentence")
        ->check(CLI::IsMember({"id", "sentence"}))
        ->capture_default_str();
    cmd->add_option("--token-var", token_var, "lemma or word")
        ->check(CLI::IsMember({"lemma", "word"}))
        ->capture_default_str();
  }

  TfidfOptions Options() const {
    TfidfOptions o;
    o.min_df = min_df;
    o.max_df = max_df;
    o.type = ParseTermKind(type);
    o.tf_weight = ParseTfWeight(tf_weight);
    o.doc_var = doc_var == "sentence" ? "new_id" : "id";
    o.token_var = token_var;
    return o;
  }

  // The token table after the pos/upos filters, with a "new_id" column of
  // "id-sid" when counting per sentence.
  Frame Tokens(const AnnotationSet &a) const {
    std::set<std::string> pos, upos;
    for (const auto &p : Split(filter_pos, ',')) {
      if (!p.empty()) pos.insert(std::string(p));
    }
    for (const auto &p : Split(filter_upos, ',')) {
      if (!p.empty()) upos.insert(std::string(p));
    }
    std::vector<TokenRow> kept;
    for (const TokenRow &t : a.token()) {
      if (!pos.empty() && !(t.pos && pos.count(*t.pos))) continue;
      if (!upos.empty() && !(t.upos && upos.count(*t.upos))) continue;
      kept.push_back(t);
    }
    Frame f = ToFrame(kept);
    if (doc_var == "sentence") {
      std::vector<Cell> new_id;
      new_id.reserve(kept.size());
      for (const TokenRow &t : kept) {
        new_id.push_back(std::to_string(t.id) + "-" + std::to_string(t.sid));
      }
      f.Add("new_id", std::move(new_id));
    }
    return f;
  }
};

Frame TripletFrame(const TermMatrix &m) {
  std::vector<Cell> doc, term, value;
  for (const Triplet &t : m.triplets) {
    doc.push_back(m.doc_ids[t.doc]);
    term.push_back(m.vocab[t.term]);
    value.push_back(FormatDouble(t.value));
  }
  Frame f;
  f.Add("doc", std::move(doc));
  f.Add("term", std::move(term));
  f.Add("value", std::move(value));
  return f;
}

// Rows of the document table (or id/sid pairs) matching the matrix rows.
Frame PcaMeta(const AnnotationSet &a, const TermMatrix &m, bool per_sentence) {
  Frame meta;
  if (per_sentence || m.kind == TermKind::kIdf) {
    meta.Add(per_sentence ? "new_id" : "doc", {m.doc_ids.begin(), m.doc_ids.end()});
    return meta;
  }
  const Frame docs = ToFrame(a.document());
  const std::vector<Cell> &ids = docs.columns[0];
  std::map<std::string, size_t> row_of;
  for (size_t r = 0; r < ids.size(); ++r) row_of[*ids[r]] = r;
  for (size_t c = 0; c < docs.cols(); ++c) {
    std::vector<Cell> col;
    for (const std::string &id : m.doc_ids) col.push_back(docs.columns[c][row_of.at(id)]);
    meta.Add(docs.names[c], std::move(col));
  }
  return meta;
}

Frame RankedFrame(const std::vector<RankedCount> &ranked, const std::string &name) {
  std::vector<Cell> value, count;
  for (const RankedCount &r : ranked) {
    value.push_back(r.value);
    count.push_back(std::to_string(r.count));
  }
  Frame f;
  f.Add(name, std::move(value));
  f.Add("count", std::move(count));
  return f;
}

std::string Report(const ValidationReport &report) {
  Frame f;
  std::vector<Cell> code, table, row, message;
  for (const Violation &v : report.violations) {
    code.push_back(std::string(ViolationCodeName(v.code)));
    table.push_back(v.table);
    row.push_back(v.row == Violation::kWholeTable ? Cell{} : Cell{std::to_string(v.row + 1)});
    message.push_back(v.message);
  }
  f.Add("code", std::move(code));
  f.Add("table", std::move(table));
  f.Add("row", std::move(row));
  f.Add("message", std::move(message));
  return WriteCsv(f);
}

}  // namespace

int CliDispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Tidy tables for annotated text corpora", "cleantables"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // annotate
  std::string backend = "tokenizers", lang = "en", meta_path, out_dir, fixed_time;
  bool force = false;
  std::vector<std::string> files;
  auto *annotate = app.add_subcommand("annotate", "Tokenize plain text files into a corpus");
  annotate->add_option("--backend", backend, "Annotation back end")
      ->check(CLI::IsMember({"tokenizers"}))
      ->capture_default_str();
  annotate->add_option("--lang", lang, "ISO 639-1 language code")->capture_default_str();
  annotate->add_option("--meta", meta_path, "CSV of per-document metadata");
  annotate->add_option("--out", out_dir, "Corpus directory to write")->required();
  annotate->add_flag("--force", force, "Overwrite a non-empty output directory");
  annotate->add_option("--fixed-time", fixed_time, "Run time to record (ISO 8601 UTC)");
  annotate->add_option("files", files, "Input text files")->required();

  auto *ingest = app.add_subcommand("ingest-conllu", "Read CoNLL-U files into a corpus");
  ingest->add_option("--lang", lang, "ISO 639-1 language code")->capture_default_str();
  ingest->add_option("--meta", meta_path, "CSV of per-document metadata");
  ingest->add_option("--out", out_dir, "Corpus directory to write")->required();
  ingest->add_flag("--force", force, "Overwrite a non-empty output directory");
  ingest->add_option("--fixed-time", fixed_time, "Run time to record (ISO 8601 UTC)");
  ingest->add_option("files", files, "CoNLL-U files")->required();

  std::string in_dir, kind, sidecar_file;
  auto *sidecar = app.add_subcommand("load-sidecar", "Replace a table from a TSV file");
  sidecar->add_option("--in", in_dir, "Corpus directory")->required();
  sidecar->add_option("--kind", kind, "entity, coreference or sentence")->required();
  sidecar->add_option("--file", sidecar_file, "Sidecar TSV")->required();
  sidecar->add_option("--out", out_dir, "Corpus directory to write")->required();
  sidecar->add_flag("--force", force, "Overwrite a non-empty output directory");
  sidecar->add_option("--fixed-time", fixed_time, "Manifest creation time");

  std::string embeddings;
  auto *attach = app.add_subcommand("attach-vectors", "Attach word vectors to every token");
  attach->add_option("--in", in_dir, "Corpus directory")->required();
  attach->add_option("--embeddings", embeddings, "Embedding lexicon")->required();
  attach->add_option("--out", out_dir, "Corpus directory to write")->required();
  attach->add_flag("--force", force, "Overwrite a non-empty output directory");
  attach->add_option("--fixed-time", fixed_time, "Manifest creation time");

  Output output;
  auto *validate = app.add_subcommand("validate", "Check a corpus against the data model");
  validate->add_option("--in", in_dir, "Corpus directory")->required();
  validate->add_option("--out", output.path, "Report file (default stdout)");

  std::string table;
  bool include_root = false, get_token = false;
  auto *exporter = app.add_subcommand("export", "Write one table as CSV");
  exporter->add_option("--in", in_dir, "Corpus directory")->required();
  exporter->add_option("--table", table, "Table name")->required();
  exporter->add_flag("--include-root", include_root, "Add ROOT rows to the token table");
  exporter->add_flag("--get-token", get_token, "Join words and lemmas onto dependencies");
  exporter->add_option("--out", output.path, "Output file (default stdout)");

  TermArgs term_args;
  auto *tfidf = app.add_subcommand("tfidf", "Build a document-term matrix");
  term_args.Register(tfidf);
  tfidf->add_option("--out", out_dir, "MatrixMarket export directory (default: CSV on stdout)");

  size_t k = 2;
  auto *pca = app.add_subcommand("pca", "Principal components of a document-term matrix");
  term_args.Register(pca);
  pca->add_option("--k", k, "Number of components")->capture_default_str();
  pca->add_option("--out", output.path, "Output file (default stdout)");

  auto *stats = app.add_subcommand("stats", "Summary queries");
  stats->require_subcommand(1);

  std::string probs = "0,0.1,...,1";
  auto *lengths = stats->add_subcommand("sentence-lengths", "Quantiles of sentence length");
  lengths->add_option("--in", in_dir, "Corpus directory")->required();
  lengths->add_option("--probs", probs, "Comma separated probabilities")->capture_default_str();
  lengths->add_option("--out", output.path, "Output file (default stdout)");

  std::string filter = "upos", value = "NOUN";
  size_t n = 20;
  auto *top_terms = stats->add_subcommand("top-terms", "Most frequent lemmas");
  top_terms->add_option("--in", in_dir, "Corpus directory")->required();
  top_terms->add_option("--filter", filter, "upos, pos or none")->capture_default_str();
  top_terms->add_option("--value", value, "Tag to keep")->capture_default_str();
  top_terms->add_option("--n", n, "Number of rows")->capture_default_str();
  top_terms->add_option("--out", output.path, "Output file (default stdout)");

  std::string entity_type = "GPE";
  auto *top_entities = stats->add_subcommand("top-entities", "Most frequent entities");
  top_entities->add_option("--in", in_dir, "Corpus directory")->required();
  top_entities->add_option("--type", entity_type, "Entity type")->capture_default_str();
  top_entities->add_option("--n", n, "Number of rows")->capture_default_str();
  top_entities->add_option("--out", output.path, "Output file (default stdout)");

  std::vector<std::string> where;
  std::string relation = "dobj", frequency_path;
  double max_frequency = 0.001;
  auto *dep_pairs = stats->add_subcommand("dep-pairs", "Dependency pairs with rare targets");
  dep_pairs->add_option("--in", in_dir, "Corpus directory")->required();
  dep_pairs->add_option("--where", where, "Document filter column=value (repeatable)");
  dep_pairs->add_option("--relation", relation, "Dependency relation")->capture_default_str();
  dep_pairs->add_option("--frequency", frequency_path, "Word frequency lexicon")->required();
  dep_pairs->add_option("--max-frequency", max_frequency, "Keep targets below this frequency")
      ->capture_default_str();
  dep_pairs->add_option("--out", output.path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, err, err);
    CLI::App *failed = &app;
    for (CLI::App *sub = &app; sub != nullptr;) {
      auto parsed = sub->get_subcommands();
      sub = parsed.empty() ? nullptr : parsed.front();
      if (sub != nullptr) failed = sub;
    }
    err << failed->help();
    return 1;
  }

  try {
    WriteOptions write_opts;
    write_opts.force = force;
    write_opts.created = ParseFixedTime(fixed_time);

    if (annotate->parsed()) {
      TokenizerOptions opts;
      opts.language = lang;
      opts.time = write_opts.created;
      opts.abbreviations = Abbreviations::FromEnvironment();
      const auto meta = ReadMeta(meta_path);
      AnnotationSet a = RunTokenizerBackend(ReadCorpusFiles(files), meta ? &*meta : nullptr, opts);
      WriteAnnotation(a, out_dir, write_opts);
    } else if (ingest->parsed()) {
      std::vector<ConlluDocument> docs;
      for (const std::string &path : files) {
        auto sentences = ParseConlluString(ReadFile(path));
        for (auto &doc : SplitConlluDocuments(path, std::move(sentences))) {
          docs.push_back(std::move(doc));
        }
      }
      ConllOptions opts;
      opts.language = lang;
      opts.time = write_opts.created;
      const auto meta = ReadMeta(meta_path);
      WriteAnnotation(ConllToAnnotation(docs, meta ? &*meta : nullptr, opts), out_dir,
                      write_opts);
    } else if (sidecar->parsed()) {
      const SidecarKind sk = ParseSidecarKind(kind);
      AnnotationSet a = ReadAnnotation(in_dir);
      std::ifstream in = OpenInput(sidecar_file);
      WriteAnnotation(LoadSidecar(a, sk, in), out_dir, write_opts);
    } else if (attach->parsed()) {
      AnnotationSet a = ReadAnnotation(in_dir);
      std::ifstream in = OpenInput(embeddings);
      WriteAnnotation(AttachVectors(a, LoadEmbeddings(in)), out_dir, write_opts);
    } else if (validate->parsed()) {
      const ValidationReport report = Validate(ReadAnnotation(in_dir, {.validate = false}));
      const std::string text = Report(report);
      if (output.path.empty()) {
        out << text;
      } else {
        WriteFileAtomic(output.path, text);
      }
      if (!report.ok()) {
        err << in_dir << ": " << report.violations.size() << " violation(s)\n";
        return 2;
      }
    } else if (exporter->parsed()) {
      output.Emit(GetTable(ReadAnnotation(in_dir), table, include_root, get_token), out);
    } else if (tfidf->parsed()) {
      AnnotationSet a = ReadAnnotation(term_args.in);
      const TermMatrix m = GetTfidf(term_args.Tokens(a), term_args.Options());
      if (out_dir.empty()) {
        out << WriteCsv(TripletFrame(m));
      } else {
        ExportMatrix(m, out_dir);
      }
    } else if (pca->parsed()) {
      AnnotationSet a = ReadAnnotation(term_args.in);
      const TermMatrix m = GetTfidf(term_args.Tokens(a), term_args.Options());
      const Frame meta = PcaMeta(a, m, term_args.doc_var == "sentence");
      output.Emit(TidyPca(m, meta, k).ToFrame(), out);
    } else if (lengths->parsed()) {
      const auto q = SentenceLengths(ReadAnnotation(in_dir), ParseProbs(probs));
      std::vector<Cell> p, v;
      for (const auto &[prob, quantile] : q) {
        p.push_back(FormatDouble(prob));
        v.push_back(FormatDouble(quantile));
      }
      Frame f;
      f.Add("prob", std::move(p));
      f.Add("quantile", std::move(v));
      output.Emit(f, out);
    } else if (top_terms->parsed()) {
      const std::optional<std::string> tag =
          filter == "none" ? std::nullopt : std::optional<std::string>(value);
      output.Emit(RankedFrame(TopTerms(ReadAnnotation(in_dir), filter, tag, n), "lemma"), out);
    } else if (top_entities->parsed()) {
      output.Emit(RankedFrame(TopEntities(ReadAnnotation(in_dir), entity_type, n), "entity"),
                  out);
    } else if (dep_pairs->parsed()) {
      AnnotationSet a = ReadAnnotation(in_dir);
      std::ifstream in = OpenInput(frequency_path);
      const FrequencyLexicon freq = LoadFrequencyLexicon(in);
      const auto pairs =
          DependencyPairs(a, MakeWhereFilter(a, where), relation, freq, max_frequency);
      std::vector<Cell> id, word, lemma_target, pair;
      for (const DependencyPair &p : pairs) {
        id.push_back(std::to_string(p.id));
        word.push_back(p.word);
        lemma_target.push_back(p.lemma_target);
        pair.push_back(FormatPair(p));
      }
      Frame f;
      f.Add("id", std::move(id));
      f.Add("word", std::move(word));
      f.Add("lemma_target", std::move(lemma_target));
      f.Add("pair", std::move(pair));
      output.Emit(f, out);
    }
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kUsage ? 1 : 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int CliDispatch(int argc, const char *const *argv) {
  return CliDispatch(argc, argv, std::cout, std::cerr);
}

}  // namespace cleantables

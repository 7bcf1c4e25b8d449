#include <sstream>

#include "cleantables/error.h"
#include "cleantables/ingest.h"
#include "cleantables/strings.h"

namespace cleantables {

namespace {

std::optional<std::string> Field(std::string_view value) {
  if (value == "_") return std::nullopt;
  return std::string(value);
}

[[noreturn]] void Malformed(size_t line, const std::string &why) {
  throw Error(ErrorCode::kMalformedLine,
              "line " + std::to_string(line) + ": " + why);
}

void FinishSentence(ConlluSentence *s, size_t first_line,
                    const std::vector<size_t> &lines,
                    std::vector<ConlluSentence> *out) {
  if (s->rows.empty() && s->comments.empty()) return;
  // Comment-only blocks are kept; they may carry "# newdoc".
  const auto m = static_cast<int64_t>(s->rows.size());
  int roots = 0;
  bool any_head = false;
  for (size_t i = 0; i < s->rows.size(); ++i) {
    const ConlluWord &w = s->rows[i];
    if (!w.head) continue;
    any_head = true;
    if (*w.head < 0 || *w.head > m) {
      throw Error(ErrorCode::kBadHead,
                  "line " + std::to_string(lines[i]) + ": head " +
                      std::to_string(*w.head) + " outside 0.." + std::to_string(m));
    }
    if (*w.head == w.tid) {
      throw Error(ErrorCode::kBadHead,
                  "line " + std::to_string(lines[i]) + ": token is its own head");
    }
    if (*w.head == 0) ++roots;
  }
  if (any_head && roots != 1) {
    throw Error(ErrorCode::kBadHead,
                "sentence starting at line " + std::to_string(first_line) +
                    " has " + std::to_string(roots) + " root tokens");
  }
  s->sent_index = static_cast<int64_t>(out->size()) + 1;
  out->push_back(std::move(*s));
  *s = {};
}

}  // namespace

std::vector<ConlluSentence> ParseConllu(std::istream &in) {
  std::vector<ConlluSentence> out;
  ConlluSentence current;
  std::vector<size_t> lines;
  size_t first_line = 0;
  size_t line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripLineEnd(raw);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      FinishSentence(&current, first_line, lines, &out);
      lines.clear();
      first_line = 0;
      continue;
    }
    if (first_line == 0) first_line = line_no;
    if (line.front() == '#') {
      std::string_view text = line.substr(1);
      while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
      current.comments.emplace_back(text);
      continue;
    }
    const auto cols = Split(line, '\t');
    if (cols.size() != 10) {
      Malformed(line_no, "expected 10 tab-separated columns, found " +
                             std::to_string(cols.size()));
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    const auto tid = ParseInt(cols[0]);
    if (!tid || *tid != static_cast<int64_t>(current.rows.size()) + 1) {
      Malformed(line_no, "word id '" + std::string(cols[0]) + "' is not " +
                             std::to_string(current.rows.size() + 1));
    }
    ConlluWord w;
    w.tid = *tid;
    w.form = std::string(cols[1]);
    w.lemma = Field(cols[2]);
    w.upos = Field(cols[3]);
    w.xpos = Field(cols[4]);
    if (cols[6] != "_") {
      w.head = ParseInt(cols[6]);
      if (!w.head) Malformed(line_no, "HEAD '" + std::string(cols[6]) + "' is not an integer");
      w.deprel = Field(cols[7]);
      if (!w.deprel) Malformed(line_no, "DEPREL missing for a token with a HEAD");
    }
    current.rows.push_back(std::move(w));
    lines.push_back(line_no);
  }
  FinishSentence(&current, first_line, lines, &out);
  return out;
}

std::vector<ConlluSentence> ParseConlluString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConllu(in);
}

std::vector<ConlluDocument> SplitConlluDocuments(
    const std::string &uri, std::vector<ConlluSentence> sentences) {
  bool has_newdoc = false;
  for (const auto &s : sentences) {
    for (const auto &c : s.comments) has_newdoc |= c.rfind("newdoc", 0) == 0;
  }
  std::vector<ConlluDocument> docs;
  if (!has_newdoc) {
    ConlluDocument doc{uri, {}};
    for (auto &s : sentences) {
      if (!s.rows.empty()) doc.sentences.push_back(std::move(s));
    }
    docs.push_back(std::move(doc));
    return docs;
  }
  for (auto &s : sentences) {
    for (const auto &c : s.comments) {
      if (c.rfind("newdoc", 0) != 0) continue;
      std::string name = std::to_string(docs.size() + 1);
      if (auto eq = c.find('='); eq != std::string::npos) {
        std::string id = c.substr(eq + 1);
        const auto b = id.find_first_not_of(' ');
        const auto e = id.find_last_not_of(' ');
        if (b != std::string::npos) name = id.substr(b, e - b + 1);
      }
      docs.push_back({uri + "#" + name, {}});
    }
    if (s.rows.empty()) continue;
    if (docs.empty()) docs.push_back({uri + "#0", {}});
    docs.back().sentences.push_back(std::move(s));
  }
  return docs;
}

AnnotationSet ConllToAnnotation(const std::vector<ConlluDocument> &docs,
                                const Frame *meta, const ConllOptions &options) {
  std::vector<std::string> uris;
  for (const auto &d : docs) uris.push_back(d.uri);
  AnnotationTables tables;
  tables.document = BuildDocumentTable(uris, meta, options.language,
                                       options.time.value_or(NowSeconds()));
  for (size_t d = 0; d < docs.size(); ++d) {
    const auto id = static_cast<int64_t>(d) + 1;
    int64_t sid = 0;
    for (const ConlluSentence &s : docs[d].sentences) {
      if (s.rows.empty()) continue;
      ++sid;
      for (const ConlluWord &w : s.rows) {
        TokenRow t;
        t.id = id;
        t.sid = sid;
        t.tid = w.tid;
        t.word = w.form;
        t.lemma = w.lemma;
        t.upos = w.upos;
        t.pos = w.xpos;
        tables.token.push_back(std::move(t));
        if (!w.head) continue;
        DependencyRow dep;
        dep.id = id;
        dep.sid = sid;
        dep.tid = *w.head;
        dep.tid_target = w.tid;
        const std::string &rel = *w.deprel;
        if (auto colon = rel.find(':'); colon != std::string::npos) {
          dep.relation = rel.substr(0, colon);
          dep.relation_full = rel;
        } else {
          dep.relation = rel;
        }
        tables.dependency.push_back(std::move(dep));
      }
    }
  }
  AnnotationSet a(std::move(tables));
  RequireValid(a);
  return a;
}

}  // namespace cleantables

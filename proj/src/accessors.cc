#include "cleantables/accessors.h"

#include <algorithm>

#include "cleantables/error.h"
#include "cleantables/strings.h"

namespace cleantables {

namespace {

Cell Int(int64_t v) { return std::to_string(v); }
Cell Opt(const std::optional<int64_t> &v) {
  if (!v) return std::nullopt;
  return std::to_string(*v);
}

const TokenRow *FindToken(const std::vector<TokenRow> &tokens, const TokenKey &key) {
  auto it = std::lower_bound(
      tokens.begin(), tokens.end(), key,
      [](const TokenRow &t, const TokenKey &k) { return t.key() < k; });
  if (it == tokens.end() || it->key() != key) return nullptr;
  return &*it;
}

}  // namespace

std::vector<TokenRow> GetToken(const AnnotationSet &a, bool include_root) {
  if (!include_root) return a.token();
  std::vector<TokenRow> out;
  out.reserve(a.token().size());
  const TokenRow *prev = nullptr;
  for (const TokenRow &t : a.token()) {
    if (prev == nullptr || prev->id != t.id || prev->sid != t.sid) {
      TokenRow root;
      root.id = t.id;
      root.sid = t.sid;
      root.tid = 0;
      root.word = "ROOT";
      root.lemma = "ROOT";
      out.push_back(std::move(root));
    }
    out.push_back(t);
    prev = &t;
  }
  return out;
}

std::vector<DependencyRow> GetDependency(const AnnotationSet &a) {
  return a.dependency();
}

std::vector<DependencyJoinedRow> GetDependencyJoined(const AnnotationSet &a) {
  const std::vector<TokenRow> tokens = GetToken(a, true);
  std::vector<DependencyJoinedRow> out;
  out.reserve(a.dependency().size());
  for (const DependencyRow &d : a.dependency()) {
    DependencyJoinedRow row;
    row.dep = d;
    if (const TokenRow *g = FindToken(tokens, {d.id, d.sid, d.tid})) {
      row.word = g->word;
      row.lemma = g->lemma;
    }
    if (const TokenRow *t = FindToken(tokens, {d.id, d.sid, d.tid_target})) {
      row.word_target = t->word;
      row.lemma_target = t->lemma;
    }
    out.push_back(std::move(row));
  }
  return out;
}

const std::vector<DocumentRow> &GetDocument(const AnnotationSet &a) {
  return a.document();
}
const std::vector<EntityRow> &GetEntity(const AnnotationSet &a) { return a.entity(); }
const std::vector<CoreferenceRow> &GetCoreference(const AnnotationSet &a) {
  return a.coreference();
}
const std::vector<SentenceRow> &GetSentence(const AnnotationSet &a) {
  return a.sentence();
}

VectorMatrix GetVector(const AnnotationSet &a) {
  if (!a.vector()) return {};
  return *a.vector();
}

Frame ToFrame(const std::vector<DocumentRow> &rows) {
  Frame f;
  std::vector<Cell> id, time, version, language, uri;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    time.push_back(FormatTimestamp(r.time));
    version.push_back(r.version);
    language.push_back(r.language);
    uri.push_back(r.uri);
  }
  f.Add("id", std::move(id));
  f.Add("time", std::move(time));
  f.Add("version", std::move(version));
  f.Add("language", std::move(language));
  f.Add("uri", std::move(uri));
  if (!rows.empty()) {
    for (size_t k = 0; k < rows.front().extra.size(); ++k) {
      std::vector<Cell> col;
      for (const auto &r : rows) {
        col.push_back(k < r.extra.size() ? Cell(r.extra[k].second) : std::nullopt);
      }
      f.Add(rows.front().extra[k].first, std::move(col));
    }
  }
  return f;
}

Frame ToFrame(const std::vector<TokenRow> &rows) {
  Frame f;
  std::vector<Cell> id, sid, tid, word, lemma, upos, pos, cid;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    sid.push_back(Int(r.sid));
    tid.push_back(Int(r.tid));
    word.push_back(r.word);
    lemma.push_back(r.lemma);
    upos.push_back(r.upos);
    pos.push_back(r.pos);
    cid.push_back(Opt(r.cid));
  }
  f.Add("id", std::move(id));
  f.Add("sid", std::move(sid));
  f.Add("tid", std::move(tid));
  f.Add("word", std::move(word));
  f.Add("lemma", std::move(lemma));
  f.Add("upos", std::move(upos));
  f.Add("pos", std::move(pos));
  f.Add("cid", std::move(cid));
  return f;
}

Frame ToFrame(const std::vector<DependencyRow> &rows) {
  Frame f;
  std::vector<Cell> id, sid, tid, tid_target, relation, relation_full;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    sid.push_back(Int(r.sid));
    tid.push_back(Int(r.tid));
    tid_target.push_back(Int(r.tid_target));
    relation.push_back(r.relation);
    relation_full.push_back(r.relation_full);
  }
  f.Add("id", std::move(id));
  f.Add("sid", std::move(sid));
  f.Add("tid", std::move(tid));
  f.Add("tid_target", std::move(tid_target));
  f.Add("relation", std::move(relation));
  f.Add("relation_full", std::move(relation_full));
  return f;
}

Frame ToFrame(const std::vector<DependencyJoinedRow> &rows) {
  std::vector<DependencyRow> deps;
  std::vector<Cell> word, lemma, word_target, lemma_target;
  for (const auto &r : rows) {
    deps.push_back(r.dep);
    word.push_back(r.word);
    lemma.push_back(r.lemma);
    word_target.push_back(r.word_target);
    lemma_target.push_back(r.lemma_target);
  }
  Frame f = ToFrame(deps);
  f.Add("word", std::move(word));
  f.Add("lemma", std::move(lemma));
  f.Add("word_target", std::move(word_target));
  f.Add("lemma_target", std::move(lemma_target));
  return f;
}

Frame ToFrame(const std::vector<EntityRow> &rows) {
  Frame f;
  std::vector<Cell> id, sid, tid, tid_end, type, entity, normalized;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    sid.push_back(Int(r.sid));
    tid.push_back(Int(r.tid));
    tid_end.push_back(Int(r.tid_end));
    type.push_back(r.entity_type);
    entity.push_back(r.entity);
    normalized.push_back(r.entity_normalized);
  }
  f.Add("id", std::move(id));
  f.Add("sid", std::move(sid));
  f.Add("tid", std::move(tid));
  f.Add("tid_end", std::move(tid_end));
  f.Add("entity_type", std::move(type));
  f.Add("entity", std::move(entity));
  f.Add("entity_normalized", std::move(normalized));
  return f;
}

Frame ToFrame(const std::vector<CoreferenceRow> &rows) {
  Frame f;
  std::vector<Cell> id, rid, mid, mention, type, number, gender, animacy, sid, tid,
      tid_end, tid_head;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    rid.push_back(Int(r.rid));
    mid.push_back(Int(r.mid));
    mention.push_back(r.mention);
    type.push_back(r.mention_type);
    number.push_back(r.number);
    gender.push_back(r.gender);
    animacy.push_back(r.animacy);
    sid.push_back(Int(r.sid));
    tid.push_back(Int(r.tid));
    tid_end.push_back(Int(r.tid_end));
    tid_head.push_back(Int(r.tid_head));
  }
  f.Add("id", std::move(id));
  f.Add("rid", std::move(rid));
  f.Add("mid", std::move(mid));
  f.Add("mention", std::move(mention));
  f.Add("mention_type", std::move(type));
  f.Add("number", std::move(number));
  f.Add("gender", std::move(gender));
  f.Add("animacy", std::move(animacy));
  f.Add("sid", std::move(sid));
  f.Add("tid", std::move(tid));
  f.Add("tid_end", std::move(tid_end));
  f.Add("tid_head", std::move(tid_head));
  return f;
}

Frame ToFrame(const std::vector<SentenceRow> &rows) {
  Frame f;
  std::vector<Cell> id, sid, sentiment;
  for (const auto &r : rows) {
    id.push_back(Int(r.id));
    sid.push_back(Int(r.sid));
    sentiment.push_back(Int(r.sentiment));
  }
  f.Add("id", std::move(id));
  f.Add("sid", std::move(sid));
  f.Add("sentiment", std::move(sentiment));
  return f;
}

Frame ToFrame(const VectorMatrix &m) {
  Frame f;
  std::vector<Cell> id, sid, tid;
  for (const TokenKey &k : m.keys) {
    id.push_back(Int(k.id));
    sid.push_back(Int(k.sid));
    tid.push_back(Int(k.tid));
  }
  f.Add("id", std::move(id));
  f.Add("sid", std::move(sid));
  f.Add("tid", std::move(tid));
  for (size_t j = 0; j < m.dim; ++j) {
    std::vector<Cell> col;
    col.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) col.push_back(FormatDouble(m.row(i)[j]));
    f.Add("v" + std::to_string(j + 1), std::move(col));
  }
  return f;
}

Frame GetTable(const AnnotationSet &a, std::string_view name, bool include_root,
               bool join_tokens) {
  if (name == "document") return ToFrame(a.document());
  if (name == "token") return ToFrame(GetToken(a, include_root));
  if (name == "dependency") {
    return join_tokens ? ToFrame(GetDependencyJoined(a)) : ToFrame(a.dependency());
  }
  if (name == "entity") return ToFrame(a.entity());
  if (name == "coreference") return ToFrame(a.coreference());
  if (name == "sentence") return ToFrame(a.sentence());
  if (name == "vector") return ToFrame(GetVector(a));
  throw Error(ErrorCode::kUnknownTable, "unknown table '" + std::string(name) + "'");
}

}  // namespace cleantables

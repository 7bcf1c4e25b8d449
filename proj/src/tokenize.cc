#include "cleantables/tokenize.h"

#include <cstdlib>
#include <fstream>

#include "cleantables/error.h"
#include "cleantables/files.h"
#include "cleantables/unicode.h"

namespace cleantables {

namespace {

bool IsTerminator(char32_t c) { return c == '.' || c == '!' || c == '?'; }

// Calls fn(begin, end) for each maximal run of non-space characters inside
// [from, to).
template <typename Fn>
void ForEachChunk(std::u32string_view text, size_t from, size_t to, Fn fn) {
  size_t i = from;
  while (i < to) {
    while (i < to && IsSpace(text[i])) ++i;
    if (i == to) break;
    size_t j = i;
    while (j < to && !IsSpace(text[j])) ++j;
    fn(i, j);
    i = j;
  }
}

bool EndsSentence(std::u32string_view text, size_t b, size_t e,
                  const Abbreviations &abbrev) {
  size_t q = e;
  while (q > b && IsCloser(text[q - 1])) --q;
  if (q == b || !IsTerminator(text[q - 1])) return false;
  if (text[q - 1] != '.') return true;
  size_t core = b;
  while (core < q && IsPunctuation(text[core])) ++core;
  return !(core < q && abbrev.Contains(text.substr(core, q - core)));
}

}  // namespace

Abbreviations Abbreviations::Default() {
  return Abbreviations(
      {"Mr.", "Mrs.", "Ms.", "Dr.", "St.", "vs.", "etc.", "U.S.", "No."});
}

Abbreviations Abbreviations::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read abbreviation list " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    words.push_back(line);
  }
  return Abbreviations(words);
}

Abbreviations Abbreviations::FromEnvironment() {
  const char *path = std::getenv("CLEANTABLES_ABBREV");
  if (path == nullptr || *path == '\0') return Default();
  return FromFile(path);
}

Abbreviations::Abbreviations(const std::vector<std::string> &words) {
  for (const std::string &w : words) words_.insert(DecodeUtf8(w));
}

std::vector<SentenceSpan> SegmentSentences(std::u32string_view text,
                                           const Abbreviations &abbrev) {
  std::vector<SentenceSpan> spans;
  constexpr size_t kNone = static_cast<size_t>(-1);
  size_t start = kNone;
  size_t last_end = 0;
  ForEachChunk(text, 0, text.size(), [&](size_t b, size_t e) {
    if (start == kNone) start = b;
    last_end = e;
    if (EndsSentence(text, b, e, abbrev)) {
      spans.push_back({start, e});
      start = kNone;
    }
  });
  if (start != kNone) spans.push_back({start, last_end});
  return spans;
}

std::vector<SentenceSpan> SegmentSentences(std::string_view utf8_text,
                                           const Abbreviations &abbrev) {
  return SegmentSentences(std::u32string_view(DecodeUtf8(utf8_text)), abbrev);
}

std::vector<TokenSpan> TokenizeSentence(std::u32string_view text,
                                        const SentenceSpan &span,
                                        const Abbreviations &abbrev) {
  std::vector<TokenSpan> tokens;
  auto emit = [&](size_t b, size_t e) {
    tokens.push_back({b, e, EncodeUtf8(text.substr(b, e - b))});
  };
  ForEachChunk(text, span.start, span.end, [&](size_t b, size_t e) {
    size_t i = b;
    while (i < e && IsPunctuation(text[i])) {
      emit(i, i + 1);
      ++i;
    }
    size_t j = e;
    while (j > i && IsPunctuation(text[j - 1]) &&
           !abbrev.Contains(text.substr(i, j - i))) {
      --j;
    }
    if (i < j) emit(i, j);
    for (size_t k = j; k < e; ++k) emit(k, k + 1);
  });
  return tokens;
}

std::vector<TokenSpan> TokenizeSentence(std::string_view utf8_text,
                                        const SentenceSpan &span,
                                        const Abbreviations &abbrev) {
  return TokenizeSentence(std::u32string_view(DecodeUtf8(utf8_text)), span,
                          abbrev);
}

std::vector<CorpusDocument> ReadCorpusFiles(const std::vector<std::string> &paths) {
  std::vector<CorpusDocument> corpus;
  for (const std::string &path : paths) corpus.push_back({path, ReadFile(path)});
  return corpus;
}

AnnotationSet RunTokenizerBackend(const std::vector<CorpusDocument> &corpus,
                                  const Frame *meta,
                                  const TokenizerOptions &options) {
  std::vector<std::string> uris;
  for (const CorpusDocument &doc : corpus) uris.push_back(doc.uri);
  AnnotationTables tables;
  tables.document = BuildDocumentTable(uris, meta, options.language,
                                       options.time.value_or(NowSeconds()));
  for (size_t d = 0; d < corpus.size(); ++d) {
    const auto id = static_cast<int64_t>(d) + 1;
    std::string normalized = NormalizeNewlines(corpus[d].text);
    auto decoded = TryDecodeUtf8(normalized);
    if (!decoded) {
      throw Error(ErrorCode::kInvalidUtf8, corpus[d].uri + " is not valid UTF-8");
    }
    const std::u32string_view text(*decoded);
    int64_t sid = 0;
    for (const SentenceSpan &span : SegmentSentences(text, options.abbreviations)) {
      ++sid;
      int64_t tid = 0;
      for (TokenSpan &tok : TokenizeSentence(text, span, options.abbreviations)) {
        TokenRow row;
        row.id = id;
        row.sid = sid;
        row.tid = ++tid;
        row.word = std::move(tok.word);
        row.cid = static_cast<int64_t>(tok.start);
        tables.token.push_back(std::move(row));
      }
    }
    tables.raw_text.emplace(id, std::move(normalized));
  }
  AnnotationSet a(std::move(tables));
  RequireValid(a);
  return a;
}

}  // namespace cleantables

#ifndef CLEANTABLES_TOKENIZE_H_
#define CLEANTABLES_TOKENIZE_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cleantables/frame.h"
#include "cleantables/model.h"

namespace cleantables {

// Offsets are counted in Unicode scalar values of newline-normalized text.
struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;  // exclusive

  bool operator==(const SentenceSpan &) const = default;
};

struct TokenSpan {
  size_t start = 0;
  size_t end = 0;  // exclusive
  std::string word;  // UTF-8, equal to the source substring

  bool operator==(const TokenSpan &) const = default;
};

// Words, including their final period, after which a period does not end a
// sentence and is not split off.
class Abbreviations {
 public:
  // Mr. Mrs. Ms. Dr. St. vs. etc. U.S. No.
  static Abbreviations Default();
  // One abbreviation per line; blank lines and lines starting with '#' are
  // ignored. Throws Error(kIo).
  static Abbreviations FromFile(const std::string &path);
  // FromFile($CLEANTABLES_ABBREV) when the variable is set, else Default().
  static Abbreviations FromEnvironment();

  explicit Abbreviations(const std::vector<std::string> &words);

  bool Contains(std::u32string_view word) const {
    return words_.count(std::u32string(word)) > 0;
  }

 private:
  std::set<std::u32string> words_;
};

std::vector<SentenceSpan> SegmentSentences(std::u32string_view text,
                                           const Abbreviations &abbrev);
std::vector<SentenceSpan> SegmentSentences(std::string_view utf8_text,
                                           const Abbreviations &abbrev);

std::vector<TokenSpan> TokenizeSentence(std::u32string_view text,
                                        const SentenceSpan &span,
                                        const Abbreviations &abbrev);
std::vector<TokenSpan> TokenizeSentence(std::string_view utf8_text,
                                        const SentenceSpan &span,
                                        const Abbreviations &abbrev);

struct CorpusDocument {
  std::string uri;
  std::string text;  // UTF-8
};

// Reads each path as a document whose uri is the path. Throws Error(kIo)
// naming the failing file.
std::vector<CorpusDocument> ReadCorpusFiles(const std::vector<std::string> &paths);

struct TokenizerOptions {
  std::string language = "en";
  // Run time recorded in the document table; defaults to now.
  std::optional<Timestamp> time;
  Abbreviations abbreviations = Abbreviations::Default();
};

// Builds the document table and the word/cid columns of the token table.
// Text is newline-normalized before offsets are computed and kept as the
// set's raw text. Throws Error(kMetaLengthMismatch) and Error(kInvalidUtf8).
AnnotationSet RunTokenizerBackend(const std::vector<CorpusDocument> &corpus,
                                  const Frame *meta,
                                  const TokenizerOptions &options = {});

}  // namespace cleantables

#endif  // CLEANTABLES_TOKENIZE_H_

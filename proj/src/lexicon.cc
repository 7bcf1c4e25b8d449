#include "cleantables/error.h"
#include "cleantables/ingest.h"
#include "cleantables/strings.h"
#include "cleantables/unicode.h"

namespace cleantables {

const std::vector<double> *EmbeddingLexicon::Find(const std::string &word) const {
  auto it = entries.find(word);
  return it == entries.end() ? nullptr : &it->second;
}

EmbeddingLexicon LoadEmbeddings(std::istream &in) {
  EmbeddingLexicon lex;
  std::optional<size_t> header_dim;
  std::string raw;
  size_t line_no = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = SplitWhitespace(StripLineEnd(raw));
    if (fields.empty()) continue;
    if (first) {
      first = false;
      if (fields.size() == 2) {
        auto count = ParseInt(fields[0]);
        auto dim = ParseInt(fields[1]);
        if (count && dim && *count >= 0 && *dim > 0) {
          header_dim = static_cast<size_t>(*dim);
          continue;
        }
      }
    }
    if (fields.size() < 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": no vector values");
    }
    const size_t dim = fields.size() - 1;
    if (lex.dim == 0) {
      lex.dim = dim;
      if (header_dim && *header_dim != dim) {
        throw Error(ErrorCode::kDimMismatch,
                    "line " + std::to_string(line_no) + ": header declares " +
                        std::to_string(*header_dim) + " dimensions, found " +
                        std::to_string(dim));
      }
    } else if (dim != lex.dim) {
      throw Error(ErrorCode::kDimMismatch,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(lex.dim) + " values, found " +
                      std::to_string(dim));
    }
    std::vector<double> values;
    values.reserve(dim);
    for (size_t i = 1; i < fields.size(); ++i) {
      auto v = ParseDouble(fields[i]);
      if (!v) {
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": '" +
                        std::string(fields[i]) + "' is not a number");
      }
      values.push_back(*v);
    }
    lex.entries.insert_or_assign(std::string(fields[0]), std::move(values));
  }
  if (lex.entries.empty()) {
    throw Error(ErrorCode::kEmptyLexicon, "embedding lexicon has no entries");
  }
  return lex;
}

AnnotationSet AttachVectors(const AnnotationSet &a, const EmbeddingLexicon &lex) {
  AnnotationTables tables = a.tables();
  VectorMatrix m;
  m.dim = lex.dim;
  m.keys.reserve(tables.token.size());
  m.values.reserve(tables.token.size() * lex.dim);
  for (const TokenRow &t : tables.token) {
    m.keys.push_back(t.key());
    const std::vector<double> *v = lex.Find(t.word);
    if (v == nullptr) v = lex.Find(LowercaseSimple(t.word));
    if (v != nullptr) {
      m.values.insert(m.values.end(), v->begin(), v->end());
    } else {
      m.values.insert(m.values.end(), lex.dim, 0.0);
    }
  }
  tables.vector = std::move(m);
  AnnotationSet result(std::move(tables));
  RequireValid(result);
  return result;
}

double FrequencyLexicon::Frequency(const std::string &word) const {
  auto it = entries.find(word);
  return it == entries.end() ? 0.0 : it->second;
}

FrequencyLexicon LoadFrequencyLexicon(std::istream &in) {
  FrequencyLexicon lex;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = SplitWhitespace(StripLineEnd(raw));
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected 'word<TAB>frequency'");
    }
    auto freq = ParseDouble(fields[1]);
    if (!freq) {
      if (line_no == 1 && fields[1] == "frequency") continue;
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": '" +
                      std::string(fields[1]) + "' is not a number");
    }
    if (!(*freq >= 0.0 && *freq <= 1.0)) {
      throw Error(ErrorCode::kRange,
                  "line " + std::to_string(line_no) + ": frequency " +
                      std::string(fields[1]) + " is outside [0, 1]");
    }
    lex.entries.insert_or_assign(std::string(fields[0]), *freq);
  }
  return lex;
}

}  // namespace cleantables

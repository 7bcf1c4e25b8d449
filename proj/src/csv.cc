#include "cleantables/csv.h"

#include "cleantables/error.h"

namespace cleantables {

namespace {

void AppendField(const Cell &cell, std::string *out) {
  if (!cell) return;
  const std::string &v = *cell;
  if (!v.empty() && v.find_first_of(",\"\r\n") == std::string::npos) {
    *out += v;
    return;
  }
  out->push_back('"');
  for (char c : v) {
    if (c == '"') out->push_back('"');
    out->push_back(c);
  }
  out->push_back('"');
}

[[noreturn]] void Fail(const std::string &source, size_t line, const std::string &why) {
  throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

std::string WriteCsv(const Frame &frame) {
  std::string out;
  for (size_t c = 0; c < frame.cols(); ++c) {
    if (c > 0) out.push_back(',');
    AppendField(frame.names[c], &out);
  }
  out.push_back('\n');
  for (size_t r = 0; r < frame.rows(); ++r) {
    for (size_t c = 0; c < frame.cols(); ++c) {
      if (c > 0) out.push_back(',');
      AppendField(frame.columns[c][r], &out);
    }
    out.push_back('\n');
  }
  return out;
}

Frame ReadCsv(std::string_view text, const std::string &source,
              std::vector<size_t> *lines) {
  std::vector<std::vector<Cell>> records;
  std::vector<size_t> record_lines;
  std::vector<Cell> record;
  size_t line = 1;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    const size_t record_line = line;
    record.clear();
    while (true) {
      Cell field;
      if (i < n && text[i] == '"') {
        std::string value;
        ++i;
        while (true) {
          if (i >= n) Fail(source, record_line, "unterminated quoted field");
          const char c = text[i++];
          if (c == '"') {
            if (i < n && text[i] == '"') {
              value.push_back('"');
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            value.push_back(c);
          }
        }
        if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          Fail(source, line, "unexpected character after closing quote");
        }
        field = std::move(value);
      } else {
        const size_t start = i;
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          if (text[i] == '"') Fail(source, line, "quote inside an unquoted field");
          ++i;
        }
        if (i > start) field = std::string(text.substr(start, i - start));
      }
      record.push_back(std::move(field));
      if (i < n && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < n && text[i] == '\r') ++i;
      if (i < n && text[i] == '\n') {
        ++i;
        ++line;
      }
      break;
    }
    records.push_back(record);
    record_lines.push_back(record_line);
  }
  if (records.empty()) Fail(source, 1, "missing header row");

  Frame frame;
  for (size_t c = 0; c < records[0].size(); ++c) {
    if (!records[0][c]) Fail(source, 1, "empty column name");
    frame.names.push_back(*records[0][c]);
    frame.columns.emplace_back();
  }
  for (size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != frame.cols()) {
      Fail(source, record_lines[r],
           "expected " + std::to_string(frame.cols()) + " fields, found " +
               std::to_string(records[r].size()));
    }
    for (size_t c = 0; c < frame.cols(); ++c) {
      frame.columns[c].push_back(std::move(records[r][c]));
    }
  }
  if (lines != nullptr) lines->assign(record_lines.begin() + 1, record_lines.end());
  return frame;
}

}  // namespace cleantables

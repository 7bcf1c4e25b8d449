#include "cleantables/frame.h"

#include "cleantables/error.h"

namespace cleantables {

const std::vector<Cell> *Frame::Find(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return &columns[i];
  }
  return nullptr;
}

void Frame::Add(std::string name, std::vector<Cell> values) {
  if (Find(name) != nullptr) {
    throw Error(ErrorCode::kSchemaMismatch, "duplicate column '" + name + "'");
  }
  if (!columns.empty() && values.size() != rows()) {
    throw Error(ErrorCode::kDimMismatch,
                "column '" + name + "' has " + std::to_string(values.size()) +
                    " rows, expected " + std::to_string(rows()));
  }
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

}  // namespace cleantables

#ifndef CLEANTABLES_FRAME_H_
#define CLEANTABLES_FRAME_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cleantables {

using Cell = std::optional<std::string>;

// A column-oriented table of optional text cells. Used for document
// metadata, inputs to term-matrix construction, and tabular query results.
struct Frame {
  std::vector<std::string> names;
  std::vector<std::vector<Cell>> columns;

  size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  size_t cols() const { return names.size(); }

  // Returns nullptr when the column does not exist.
  const std::vector<Cell> *Find(std::string_view name) const;

  // Appends a column. Throws Error(kDimMismatch) on a row-count mismatch
  // and Error(kSchemaMismatch) on a duplicate name.
  void Add(std::string name, std::vector<Cell> values);

  bool operator==(const Frame &) const = default;
};

}  // namespace cleantables

#endif  // CLEANTABLES_FRAME_H_

#ifndef CLEANTABLES_STRINGS_H_
#define CLEANTABLES_STRINGS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cleantables {

std::vector<std::string_view> Split(std::string_view text, char sep);

// Splits on runs of ' ' and '\t', dropping empty fields.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Whole-string parses; nullopt on any trailing garbage.
std::optional<int64_t> ParseInt(std::string_view text);
std::optional<double> ParseDouble(std::string_view text);

// Shortest decimal string that reads back to the same double.
std::string FormatDouble(double value);

std::string_view StripLineEnd(std::string_view line);

}  // namespace cleantables

#endif  // CLEANTABLES_STRINGS_H_

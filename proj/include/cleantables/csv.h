#ifndef CLEANTABLES_CSV_H_
#define CLEANTABLES_CSV_H_

#include <string>
#include <string_view>
#include <vector>

#include "cleantables/frame.h"

namespace cleantables {

// RFC 4180 with LF line endings. An absent cell is an empty unquoted field;
// a present empty string is written as "" so the two stay distinguishable.
std::string WriteCsv(const Frame &frame);

// Parses a header row plus records. `source` names the input in errors.
// Throws Error(kParseError) with the physical line number. When lines is
// given it receives the starting line of each data record.
Frame ReadCsv(std::string_view text, const std::string &source,
              std::vector<size_t> *lines = nullptr);

}  // namespace cleantables

#endif  // CLEANTABLES_CSV_H_

#ifndef CLEANTABLES_FILES_H_
#define CLEANTABLES_FILES_H_

#include <string>

namespace cleantables {

// Writes to "<path>.tmp" then renames over path. Throws Error(kIo).
void WriteFileAtomic(const std::string &path, const std::string &content);

// Whole file contents. Throws Error(kIo).
std::string ReadFile(const std::string &path);

}  // namespace cleantables

#endif  // CLEANTABLES_FILES_H_

#ifndef CLEANTABLES_STORAGE_H_
#define CLEANTABLES_STORAGE_H_

#include <optional>
#include <string>

#include "cleantables/model.h"

namespace cleantables {

// Corpus directory layout:
//   document.csv token.csv dependency.csv entity.csv coreference.csv
//   sentence.csv   always present, header row with the schema column names
//   vector.csv     id, sid, tid, v1..vD when a vector matrix is attached
//   raw_text.csv   id, text when source text is retained
//   manifest.json  format version, tool version, creation time, document
//                  extra columns
struct WriteOptions {
  bool force = false;
  // Manifest creation time; defaults to now.
  std::optional<Timestamp> created;
};

// Throws Error(kRefuseOverwrite) when dir is a non-empty directory and
// force is unset, Error(kIo), and ValidationError for an invalid set.
void WriteAnnotation(const AnnotationSet &a, const std::string &dir,
                     const WriteOptions &options = {});

struct ReadOptions {
  bool validate = true;
};

// Throws Error(kIo) when dir is missing, Error(kSchemaMismatch) for missing
// table files or wrong headers, Error(kParseError) with file and line, and
// ValidationError when validate is set and the tables violate the model.
AnnotationSet ReadAnnotation(const std::string &dir, const ReadOptions &options = {});

}  // namespace cleantables

#endif  // CLEANTABLES_STORAGE_H_

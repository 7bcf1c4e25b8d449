#ifndef CLEANTABLES_CLI_H_
#define CLEANTABLES_CLI_H_

#include <iosfwd>

namespace cleantables {

// Runs one command line. Tabular output goes to `out` unless --out names a
// file; diagnostics go to `err`. Returns 0 on success, 1 on a usage error
// and 2 on a data error.
int CliDispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int CliDispatch(int argc, const char *const *argv);

}  // namespace cleantables

#endif  // CLEANTABLES_CLI_H_

#ifndef CLEANTABLES_VERSION_H_
#define CLEANTABLES_VERSION_H_

namespace cleantables {

inline constexpr const char *kVersion = "0.1.0";

// Version of the on-disk corpus directory layout.
inline constexpr int kFormatVersion = 1;

}  // namespace cleantables

#endif  // CLEANTABLES_VERSION_H_

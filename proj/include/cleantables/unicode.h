#ifndef CLEANTABLES_UNICODE_H_
#define CLEANTABLES_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace cleantables {

// Decodes UTF-8 into Unicode scalar values. Throws Error(kInvalidUtf8) on
// malformed input, overlong encodings, surrogates and out-of-range values.
std::u32string DecodeUtf8(std::string_view text);

// Same as DecodeUtf8 but returns nullopt instead of throwing.
std::optional<std::u32string> TryDecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);

void AppendUtf8(char32_t cp, std::string *out);

// Replaces CR LF and lone CR with LF.
std::string NormalizeNewlines(std::string_view text);

// Unicode White_Space property.
bool IsSpace(char32_t c);

// ASCII punctuation plus common Unicode quotes, dashes and marks.
bool IsPunctuation(char32_t c);

// Closing quotes and brackets that may trail a sentence terminator.
bool IsCloser(char32_t c);

// Lowercases ASCII and Latin-1 letters; other code points pass through.
std::string LowercaseSimple(std::string_view utf8);

}  // namespace cleantables

#endif  // CLEANTABLES_UNICODE_H_

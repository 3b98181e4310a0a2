#ifndef LEXTOPIC_UTF8_H_
#define LEXTOPIC_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace lextopic::utf8 {

// Malformed sequences decode to U+FFFD, one per offending byte.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

// Number of code points.
std::size_t length(std::string_view text);

bool is_space(char32_t cp);

// Trims Unicode whitespace from both ends.
std::string_view trim(std::string_view text);

}  // namespace lextopic::utf8

#endif  // LEXTOPIC_UTF8_H_

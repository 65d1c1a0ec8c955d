#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sbs::util {

// Decodes UTF-8, mapping invalid byte sequences to U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(const std::u32string& text);
std::string utf8_encode(char32_t cp);

// Lowercasing that covers ASCII plus Latin-1 and Latin Extended-A, which is
// all the corpora here use. Other code points pass through unchanged.
char32_t lower(char32_t cp);
std::string lower_utf8(std::string_view text);

bool is_ascii_digit(char32_t cp);
bool is_letter(char32_t cp);

// Fixed-point decimal rendering (round-half-away-from-zero at the given
// number of decimals, no negative zero).
std::string format_fixed(double value, int decimals);

std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

// Whole-file read/write. Throws std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

bool ends_with(std::string_view text, std::string_view suffix);

} // namespace sbs::util

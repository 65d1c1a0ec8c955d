#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sbs::util {

using CsvRow = std::vector<std::string>;

// RFC 4180 style parser: quoted fields may contain commas, doubled quotes
// and line breaks. Accepts both \n and \r\n endings; a trailing newline does
// not produce an empty record.
std::vector<CsvRow> parse_csv(std::string_view text);

// Serialises one row, quoting only fields that need it.
std::string csv_line(const CsvRow& row);

std::string csv_escape(std::string_view field);

} // namespace sbs::util

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coanet {

/// Strip leading and trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Collapse every run of ASCII whitespace to a single space and trim the ends.
std::string collapse_whitespace(std::string_view s);

/// ASCII lowercase; bytes outside A-Z (including UTF-8 continuation bytes) pass through.
std::string to_lower(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

bool starts_with_ignore_case(std::string_view s, std::string_view prefix);

/// True if every character is a decimal digit (and s is non-empty).
bool all_digits(std::string_view s);

} // namespace coanet

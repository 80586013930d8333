#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace snacs {

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

// Splits a UTF-8 string into code points (each as a string). Invalid bytes
// are passed through as single-byte units.
std::vector<std::string> utf8_codepoints(std::string_view s);

}  // namespace snacs

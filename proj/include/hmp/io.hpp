#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace hmp {

// Throws IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Parses JSON text; syntax errors become ParseError with the 1-based line.
nlohmann::json parse_json(std::string_view text, const std::string& what);
nlohmann::json load_json_file(const std::string& path);

// Hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

std::string base64_encode(std::string_view bytes);

}  // namespace hmp

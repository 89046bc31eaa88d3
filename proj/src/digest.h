#pragma once

#include <string>
#include <string_view>

namespace cstts::internal {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

// Appends `field` preceded by its 8-byte little-endian length, so that
// concatenated fields hash unambiguously.
void AppendLengthPrefixed(std::string_view field, std::string* out);

}  // namespace cstts::internal

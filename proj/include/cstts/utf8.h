#pragma once

#include <string>
#include <string_view>

namespace cstts::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Ill-formed sequences decode to U+FFFD.
std::u32string Decode(std::string_view text);

void Append(char32_t cp, std::string* out);
std::string Encode(char32_t cp);
std::string Encode(std::u32string_view cps);

// Number of scalars in `text`.
std::size_t Length(std::string_view text);

std::string NormalizeNfc(std::string_view text);

// CJK Unified Ideographs, the base block and extensions A through H.
bool IsHanzi(char32_t cp);

}  // namespace cstts::utf8

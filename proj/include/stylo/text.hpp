#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylo {

// Strict UTF-8 decoding to Unicode scalar values. Rejects overlong forms,
// surrogates and out-of-range code points.
bool utf8_valid(std::string_view bytes);
std::u32string utf8_decode(std::string_view bytes);  // throws IoError on bad input
std::string utf8_encode(std::u32string_view chars);
std::string utf8_encode(char32_t c);

// Canonical composition (NFC) via ICU.
std::string nfc_normalize(std::string_view utf8);

// Character unit of the whole pipeline: Unicode scalar values after NFC.
std::size_t count_chars(std::string_view utf8);

// Word = maximal run of non-whitespace bytes (ASCII whitespace).
int count_words(std::string_view text);

bool is_ascii_space(char c);
std::string_view trim(std::string_view s);

}  // namespace stylo

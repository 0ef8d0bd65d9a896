#pragma once

#include <string>
#include <string_view>

namespace pumpkit {

/// Words are sequences of Unicode scalar values, one input symbol each.
using Word = std::u32string;
using WordView = std::u32string_view;

/// Decodes UTF-8; throws ParseError on malformed sequences or surrogates.
Word decode_utf8(std::string_view text);

std::string encode_utf8(WordView word);
std::string encode_utf8(char32_t symbol);

} // namespace pumpkit

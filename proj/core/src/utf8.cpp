#include "pumpkit/utf8.hpp"

#include "pumpkit/error.hpp"

namespace pumpkit {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0U) == 0x80U; }

} // namespace

Word decode_utf8(std::string_view text)
{
    Word out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (lead < 0x80U) {
            len = 1;
            cp = lead;
        } else if ((lead & 0xE0U) == 0xC0U) {
            len = 2;
            cp = lead & 0x1FU;
        } else if ((lead & 0xF0U) == 0xE0U) {
            len = 3;
            cp = lead & 0x0FU;
        } else if ((lead & 0xF8U) == 0xF0U) {
            len = 4;
            cp = lead & 0x07U;
        } else {
            throw ParseError("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > text.size())
            throw ParseError("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            const auto c = static_cast<unsigned char>(text[i + k]);
            if (!is_continuation(c))
                throw ParseError("invalid UTF-8 continuation at offset " + std::to_string(i + k));
            cp = (cp << 6) | (c & 0x3FU);
        }
        static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw ParseError("invalid Unicode scalar at offset " + std::to_string(i));
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp)
{
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode_utf8(WordView word)
{
    std::string out;
    out.reserve(word.size());
    for (char32_t cp : word)
        out += encode_utf8(cp);
    return out;
}

} // namespace pumpkit

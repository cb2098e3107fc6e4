#include "dehum/text.hpp"

namespace dehum {

std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto cb = [&](std::size_t k) {
        return static_cast<std::uint32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x1F) << 6) | cb(1);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x0F) << 12) | (cb(1) << 6) | cb(2);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x07) << 18) | (cb(1) << 12) |
                           (cb(2) << 6) | cb(3);
        i += 4;
        return cp;
    }
    ++i;
    return 0xFFFD;
}

namespace {

std::uint32_t lower_cp(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    // Latin-1 Supplement uppercase block, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    // Latin Extended-A: mostly alternating upper/lower pairs.
    if (cp >= 0x100 && cp <= 0x177) {
        if (cp == 0x130) return 'i'; // I with dot above
        if (cp == 0x131 || cp == 0x138) return cp;
        if (cp < 0x138) return (cp % 2 == 0) ? cp + 1 : cp;
        if (cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
        if (cp == 0x149) return cp;
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (cp == 0x178) return 0xFF;                                // Y with diaeresis
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp; // Z acute/dot/caron
    // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    return cp;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
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
}

} // namespace

std::string to_lower_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        encode_utf8(lower_cp(decode_utf8(s, i)), out);
    }
    return out;
}

bool is_letter_cp(std::uint32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp < 0xC0) return false;
    if (cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;   // Latin-1 Sup + Ext-A/B
    if (cp >= 0x370 && cp <= 0x1FFF) return true;       // Greek..Cyrillic..Indic
    if (cp >= 0x2C00 && cp <= 0xD7FF) return true;      // Glagolitic..CJK..Hangul
    if (cp >= 0xF900 && cp <= 0x2FA1F) return true;     // CJK compatibility + ext
    return false;
}

bool has_letter(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        if (is_letter_cp(decode_utf8(s, i))) return true;
    }
    return false;
}

bool starts_with_lower(std::string_view s, std::string_view lowered_prefix) {
    if (lowered_prefix.empty()) return false;
    const std::string low = to_lower_utf8(s);
    return low.size() >= lowered_prefix.size() &&
           std::string_view(low).substr(0, lowered_prefix.size()) == lowered_prefix;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace dehum

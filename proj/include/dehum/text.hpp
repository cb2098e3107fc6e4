#ifndef DEHUM_TEXT_HPP
#define DEHUM_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dehum {

// UTF-8 helpers used for lemma normalization and prefix matching.
// Input corpora are expected to be NFC-normalized UTF-8; we lowercase but do
// not re-compose decomposed sequences.

// Decodes the code point starting at s[i]; advances i past it.
// Invalid bytes are consumed one at a time and returned as U+FFFD.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i);

// Lowercases ASCII, Latin-1 Supplement, Latin Extended-A and Cyrillic;
// other code points pass through unchanged.
std::string to_lower_utf8(std::string_view s);

// True if the code point is a letter in the ranges we care about
// (ASCII, Latin, Greek, Cyrillic and most other alphabetic blocks).
bool is_letter_cp(std::uint32_t cp);

// True if the string contains at least one letter code point.
// This is the "word" test: tokens whose lemma is pure punctuation or digits
// are not words.
bool has_letter(std::string_view s);

// Lowercased prefix test: true when `s` starts with `prefix`, both compared
// after to_lower_utf8. `prefix` is expected to be pre-lowercased.
bool starts_with_lower(std::string_view s, std::string_view lowered_prefix);

std::string trim(std::string_view s);

std::vector<std::string> split_on(std::string_view s, char sep);

} // namespace dehum

#endif

#pragma once

#include <string>
#include <vector>

namespace cc {

// Lowercases ASCII letters and splits on any run of non-alphanumeric bytes.
// Bytes >= 0x80 (UTF-8 continuation or lead bytes) are kept inside tokens so
// that non-latin names survive tokenization as opaque tokens; the lexicon
// loader decides whether to filter such concepts out.
std::vector<std::string> tokenize(const std::string& text);

// True if the string contains any byte outside printable ASCII.
bool has_non_latin(const std::string& text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace cc

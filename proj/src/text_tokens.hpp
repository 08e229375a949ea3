#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace rackinv::detail {

struct Token {
    std::string_view text;
    int line;
    int column;
};

// Whitespace-separated runs with '#' comments, positions 1-based.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else {
            const std::size_t start = i;
            const int start_col = col;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
                   text[i] != '#') {
                ++i;
                ++col;
            }
            tokens.push_back({text.substr(start, i - start), line, start_col});
        }
    }
    return tokens;
}

inline std::optional<int> token_to_int(const Token& tok) {
    int value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

}  // namespace rackinv::detail

#include "podium/qexpr.hpp"

#include <array>
#include <cctype>

namespace podium::qexpr {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found)
{
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i != 0)
            msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg + " but found " + found;
}

constexpr std::array<std::string_view, 8> kKeywords{
    "poch", "gf", "subst", "theta", "in", "div", "ceil2", "q",
};

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         std::string found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " +
                         describe(expected, found)),
      offset_(offset), expected_(std::move(expected))
{
}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset)
{
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    const auto is_ident = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0)
                ++i;
            out.push_back({TokenKind::Int, std::string(text.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            while (i < text.size() && is_ident(text[i]))
                ++i;
            std::string word(text.substr(start, i - start));
            bool kw = false;
            for (auto k : kKeywords)
                kw = kw || k == word;
            out.push_back({kw ? TokenKind::Keyword : TokenKind::Name, std::move(word), start});
        } else if (std::string_view("+-*/^(),;{}").find(c) != std::string_view::npos) {
            out.push_back({TokenKind::Symbol, std::string(1, c), start});
            ++i;
        } else {
            throw SyntaxError(start, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back({TokenKind::End, "", text.size()});
    return out;
}

} // namespace podium::qexpr

// lexer.cpp - hand-rolled scanner for the three-command script language
#include "chase/lexer.hpp"

#include <fmt/core.h>

#include <cctype>

namespace chase {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Word: return "word";
        case TokenKind::Number: return "number";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Dot: return "'.'";
        case TokenKind::Equals: return "'='";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Newline: return "end of line";
    }
    return "?";
}

namespace {

// Locale-independent on purpose; identifiers are ASCII.
bool is_word_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_word_char(char c) {
    return is_word_start(c) || (c >= '0' && c <= '9');
}
bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

class Scanner {
public:
    explicit Scanner(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '#') {  // comment to end of line; the newline still counts
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\n' || c == ';') {
                tokens.push_back(single(TokenKind::Newline));
                continue;
            }
            if (is_word_start(c)) {
                tokens.push_back(word());
                continue;
            }
            if (is_digit(c)) {
                tokens.push_back(number());
                continue;
            }
            switch (c) {
                case '(': tokens.push_back(single(TokenKind::LParen)); continue;
                case ')': tokens.push_back(single(TokenKind::RParen)); continue;
                case ',': tokens.push_back(single(TokenKind::Comma)); continue;
                case '.': tokens.push_back(single(TokenKind::Dot)); continue;
                case '=': tokens.push_back(single(TokenKind::Equals)); continue;
                case '[': tokens.push_back(single(TokenKind::LBracket)); continue;
                case ']': tokens.push_back(single(TokenKind::RBracket)); continue;
                default: break;
            }
            diags_.push_back(make_error(
                codes::IllegalChar,
                fmt::format("illegal character '{}'", printable(c)),
                SourceSpan{line_, column_, 1}));
            advance();
        }
        if (!diags_.empty()) throw CompileError(std::move(diags_));
        return tokens;
    }

private:
    static std::string printable(char c) {
        if (c >= 0x20 && c < 0x7f) return std::string(1, c);
        return fmt::format("\\x{:02x}", static_cast<unsigned char>(c));
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    Token single(TokenKind kind) {
        Token t{kind, std::string(1, src_[pos_]), {line_, column_, 1}};
        advance();
        return t;
    }

    Token word() {
        const SourceSpan start{line_, column_, 1};
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && is_word_char(src_[pos_])) advance();
        Token t{TokenKind::Word, std::string(src_.substr(begin, pos_ - begin)), start};
        t.span.length = static_cast<int>(t.text.size());
        return t;
    }

    // digits, optionally '.' digits -- the dot is consumed only when a digit
    // follows so that chain dots after ')' stay separate tokens
    Token number() {
        const SourceSpan start{line_, column_, 1};
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' && is_digit(src_[pos_ + 1])) {
            advance();
            while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
        }
        Token t{TokenKind::Number, std::string(src_.substr(begin, pos_ - begin)), start};
        t.span.length = static_cast<int>(t.text.size());
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Scanner(source).run();
}

}  // namespace chase

// token.hpp - lexical tokens of the CHASE script language
#pragma once

#include <string>
#include <vector>

#include "chase/diagnostics.hpp"

namespace chase {

enum class TokenKind {
    Word,      // identifier-word: verbs, action words, names
    Number,    // nonnegative decimal
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
    LBracket,
    RBracket,
    Newline,   // '\n' or ';'
};

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;
};

const char* token_kind_name(TokenKind kind);

}  // namespace chase

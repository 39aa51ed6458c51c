// lexer.hpp - script text -> token stream
#pragma once

#include <string_view>
#include <vector>

#include "chase/token.hpp"

namespace chase {

/// Tokenizes CHASE script text. `#` starts a comment running to end of line;
/// newlines and `;` both produce Newline tokens. Throws CompileError with one
/// ILLEGAL-CHAR diagnostic per offending character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace chase

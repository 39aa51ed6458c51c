// parser.hpp - token stream -> ScriptAst
#pragma once

#include <string_view>
#include <vector>

#include "chase/ast.hpp"
#include "chase/token.hpp"

namespace chase {

/// Parses a token stream into a script AST. One statement per line or
/// semicolon. Recovers to the next line after a bad statement so a single
/// run can report several errors; throws CompileError with everything
/// collected if any statement failed.
ScriptAst parse(const std::vector<Token>& tokens);

/// tokenize + parse in one call.
ScriptAst parse_script(std::string_view source);

}  // namespace chase

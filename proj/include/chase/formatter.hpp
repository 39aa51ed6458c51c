// formatter.hpp - canonical pretty-printer for script ASTs
#pragma once

#include <string>

#include "chase/ast.hpp"

namespace chase {

/// Canonical text for one chain, e.g. "goTo(ball, walk).do(wave hand, handL)".
std::string format(const CommandChain& chain);

/// Canonical script text. parse(format(ast)) is structurally equal to ast,
/// and format is idempotent over parse.
std::string format(const ScriptAst& ast);

/// Shortest decimal text that parses back to exactly this value ("3", "2.5").
std::string format_number(double value);

}  // namespace chase

// ast.hpp - parsed form of a CHASE script
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chase/diagnostics.hpp"

namespace chase {

/// One command argument: either a word sequence ("wave hand") or a number.
/// Numbers are durations in seconds except when used as array indices.
struct ArgValue {
    enum class Kind { Words, Number };
    Kind kind = Kind::Words;
    std::string words;   // interior single spaces, e.g. "wave hand"
    double number = 0.0;
    SourceSpan span;
};

enum class Verb { Do, GoTo, InteractWith };

const char* verb_name(Verb verb);

struct BaseCommand {
    Verb verb = Verb::Do;
    std::vector<ArgValue> args;  // nonempty
    SourceSpan span;
};

/// A base command plus its chained modifiers. The overlay is always a `do`
/// and only valid on goTo/interactWith bases.
struct CommandChain {
    BaseCommand base;
    std::optional<BaseCommand> overlay;
    std::optional<std::string> character;
    SourceSpan span;
    SourceSpan character_span;  // meaningful only when character is set
};

struct Statement {
    enum class Form { Bare, Task1d, Task2d };
    Form form = Form::Bare;
    int index = 0;  // task1d
    int row = 0;    // task2d
    int col = 0;    // task2d
    CommandChain chain;
    SourceSpan span;
};

enum class ScriptMode { Bare, Task1d, Task2d };

/// All statements share one mode; mixing forms is a parse error.
struct ScriptAst {
    std::vector<Statement> statements;
    ScriptMode mode = ScriptMode::Bare;
};

// Structural equality: spans are ignored.
bool struct_eq(const ArgValue& a, const ArgValue& b);
bool struct_eq(const BaseCommand& a, const BaseCommand& b);
bool struct_eq(const CommandChain& a, const CommandChain& b);
bool struct_eq(const Statement& a, const Statement& b);
bool struct_eq(const ScriptAst& a, const ScriptAst& b);

}  // namespace chase

// formatter.cpp - canonical script printing
#include "chase/formatter.hpp"

#include <fmt/core.h>

#include <charconv>

namespace chase {

std::string format_number(double value) {
    // Fixed notation of the largest finite double runs to ~310 characters.
    char buf[352];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_args(const BaseCommand& cmd) {
    std::string out;
    for (std::size_t i = 0; i < cmd.args.size(); ++i) {
        if (i > 0) out += ", ";
        const ArgValue& arg = cmd.args[i];
        out += arg.kind == ArgValue::Kind::Words ? arg.words : format_number(arg.number);
    }
    return out;
}

}  // namespace

std::string format(const CommandChain& chain) {
    std::string out = fmt::format("{}({})", verb_name(chain.base.verb), format_args(chain.base));
    if (chain.overlay) out += fmt::format(".do({})", format_args(*chain.overlay));
    if (chain.character) out += fmt::format(".characterName({})", *chain.character);
    return out;
}

std::string format(const ScriptAst& ast) {
    std::string out;
    for (const Statement& stmt : ast.statements) {
        switch (stmt.form) {
            case Statement::Form::Bare:
                break;
            case Statement::Form::Task1d:
                out += fmt::format("task[{}] = ", stmt.index);
                break;
            case Statement::Form::Task2d:
                out += fmt::format("tasks[{}][{}] = ", stmt.row, stmt.col);
                break;
        }
        out += format(stmt.chain);
        out += '\n';
    }
    return out;
}

}  // namespace chase

// parser.cpp - recursive descent over the token stream
#include "chase/parser.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "chase/lexer.hpp"

namespace chase {

const char* verb_name(Verb verb) {
    switch (verb) {
        case Verb::Do: return "do";
        case Verb::GoTo: return "goTo";
        case Verb::InteractWith: return "interactWith";
    }
    return "?";
}

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct ParseFail {
    Diagnostic diag;
};

[[noreturn]] void fail(std::string code, std::string message, SourceSpan span) {
    throw ParseFail{make_error(std::move(code), std::move(message), span)};
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    ScriptAst run() {
        ScriptAst ast;
        bool mode_set = false;
        while (!at_end()) {
            if (peek().kind == TokenKind::Newline) {
                next();
                continue;
            }
            try {
                Statement stmt = statement();
                // End of statement must be a line break (or end of input).
                if (!at_end() && peek().kind != TokenKind::Newline) {
                    const Token& t = peek();
                    if (t.kind == TokenKind::RParen)
                        fail(codes::UnbalancedParen, "unmatched ')'", t.span);
                    fail(codes::Syntax,
                         fmt::format("expected end of statement, found {}", describe(t)), t.span);
                }
                const ScriptMode stmt_mode = mode_of(stmt);
                if (!mode_set) {
                    ast.mode = stmt_mode;
                    mode_set = true;
                } else if (stmt_mode != ast.mode) {
                    fail(codes::MixedModes,
                         fmt::format("cannot mix {} and {} statements in one script",
                                     mode_name(ast.mode), mode_name(stmt_mode)),
                         stmt.span);
                }
                check_duplicate_cell(stmt);
                ast.statements.push_back(std::move(stmt));
            } catch (const ParseFail& f) {
                diags_.push_back(f.diag);
                recover();
            }
        }
        if (!diags_.empty()) throw CompileError(std::move(diags_));
        return ast;
    }

private:
    static const char* mode_name(ScriptMode mode) {
        switch (mode) {
            case ScriptMode::Bare: return "bare command";
            case ScriptMode::Task1d: return "task[...]";
            case ScriptMode::Task2d: return "tasks[...][...]";
        }
        return "?";
    }

    static ScriptMode mode_of(const Statement& stmt) {
        switch (stmt.form) {
            case Statement::Form::Bare: return ScriptMode::Bare;
            case Statement::Form::Task1d: return ScriptMode::Task1d;
            case Statement::Form::Task2d: return ScriptMode::Task2d;
        }
        return ScriptMode::Bare;
    }

    void check_duplicate_cell(const Statement& stmt) {
        if (stmt.form == Statement::Form::Task1d) {
            if (!seen_1d_.insert(stmt.index).second)
                fail(codes::DuplicateCell,
                     fmt::format("task[{}] is assigned more than once", stmt.index), stmt.span);
        } else if (stmt.form == Statement::Form::Task2d) {
            if (!seen_2d_.insert({stmt.row, stmt.col}).second)
                fail(codes::DuplicateCell,
                     fmt::format("tasks[{}][{}] is assigned more than once", stmt.row, stmt.col),
                     stmt.span);
        }
    }

    // -- token plumbing ------------------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    bool check(TokenKind kind) const { return !at_end() && peek().kind == kind; }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::Word || t.kind == TokenKind::Number)
            return fmt::format("'{}'", t.text);
        return token_kind_name(t.kind);
    }

    SourceSpan here() const {
        if (!at_end()) return peek().span;
        if (tokens_.empty()) return {1, 1, 1};
        const SourceSpan last = tokens_.back().span;
        return {last.line, last.column + last.length, 1};
    }

    const Token& expect(TokenKind kind, const char* what) {
        if (at_end() || peek().kind == TokenKind::Newline) {
            if (kind == TokenKind::RParen)
                fail(codes::UnbalancedParen, "unterminated '(': expected ')'", here());
            fail(codes::Syntax, fmt::format("expected {}", what), here());
        }
        if (peek().kind != kind)
            fail(codes::Syntax, fmt::format("expected {}, found {}", what, describe(peek())),
                 peek().span);
        return next();
    }

    void recover() {  // skip to the next statement boundary
        while (!at_end() && peek().kind != TokenKind::Newline) next();
    }

    // -- grammar -------------------------------------------------------------

    Statement statement() {
        const Token& first = peek();
        Statement stmt;
        stmt.span = first.span;

        if (first.kind == TokenKind::Word && pos_ + 1 < tokens_.size() &&
            tokens_[pos_ + 1].kind == TokenKind::LBracket) {
            const std::string kw = lowercase(first.text);
            if (kw == "task") {
                next();
                stmt.form = Statement::Form::Task1d;
                stmt.index = array_index();
                if (check(TokenKind::LBracket))
                    fail(codes::Syntax, "task[...] takes one index; use tasks[row][col] for two",
                         peek().span);
                expect(TokenKind::Equals, "'='");
                stmt.chain = chain();
                return stmt;
            }
            if (kw == "tasks") {
                next();
                stmt.form = Statement::Form::Task2d;
                stmt.row = array_index();
                if (!check(TokenKind::LBracket))
                    fail(codes::Syntax, "tasks[...] needs a second index: tasks[row][col]", here());
                stmt.col = array_index();
                expect(TokenKind::Equals, "'='");
                stmt.chain = chain();
                return stmt;
            }
        }

        stmt.form = Statement::Form::Bare;
        stmt.chain = chain();
        return stmt;
    }

    int array_index() {
        expect(TokenKind::LBracket, "'['");
        const Token& num = expect(TokenKind::Number, "array index");
        double value = 0.0;
        const auto res = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
        (void)res;
        if (value < 1.0 || value != std::floor(value) || value > 1e6)
            fail(codes::BadIndex,
                 fmt::format("array index must be a positive integer, got '{}'", num.text),
                 num.span);
        expect(TokenKind::RBracket, "']'");
        return static_cast<int>(value);
    }

    CommandChain chain() {
        CommandChain result;
        result.span = here();
        result.base = base_command();

        while (check(TokenKind::Dot)) {
            next();
            const Token& name = expect(TokenKind::Word, "'do' or 'characterName' after '.'");
            const std::string kw = lowercase(name.text);
            if (kw == "do") {
                if (result.base.verb == Verb::Do)
                    fail(codes::ChainOnDo, "a concurrent do(...) can only chain onto goTo or interactWith",
                         name.span);
                if (result.overlay)
                    fail(codes::DoubleOverlay, "chain already has a concurrent do(...)", name.span);
                BaseCommand overlay;
                overlay.verb = Verb::Do;
                overlay.span = name.span;
                overlay.args = arg_list();
                result.overlay = std::move(overlay);
            } else if (kw == "charactername") {
                if (result.character)
                    fail(codes::DoubleCharacter, "chain already names a character", name.span);
                expect(TokenKind::LParen, "'('");
                if (check(TokenKind::RParen))
                    fail(codes::EmptyArgs, "characterName requires a name", peek().span);
                result.character_span = here();
                result.character = word_sequence("character name");
                if (check(TokenKind::Comma))
                    fail(codes::Syntax, "characterName takes a single name", peek().span);
                expect(TokenKind::RParen, "')'");
            } else {
                fail(codes::Syntax,
                     fmt::format("unknown modifier '{}'; expected do or characterName", name.text),
                     name.span);
            }
        }
        return result;
    }

    BaseCommand base_command() {
        const Token& head = expect(TokenKind::Word, "command verb");
        const std::string kw = lowercase(head.text);
        BaseCommand cmd;
        cmd.span = head.span;
        if (kw == "do")
            cmd.verb = Verb::Do;
        else if (kw == "goto")
            cmd.verb = Verb::GoTo;
        else if (kw == "interactwith")
            cmd.verb = Verb::InteractWith;
        else
            fail(codes::Syntax,
                 fmt::format("expected do, goTo or interactWith, found '{}'", head.text), head.span);
        cmd.args = arg_list();
        return cmd;
    }

    std::vector<ArgValue> arg_list() {
        expect(TokenKind::LParen, "'('");
        if (check(TokenKind::RParen)) {
            const SourceSpan span = peek().span;
            fail(codes::EmptyArgs, "command requires at least one argument", span);
        }
        std::vector<ArgValue> args;
        args.push_back(argument());
        while (check(TokenKind::Comma)) {
            next();
            args.push_back(argument());
        }
        expect(TokenKind::RParen, "')'");
        return args;
    }

    ArgValue argument() {
        if (check(TokenKind::Number)) {
            const Token& num = next();
            ArgValue arg;
            arg.kind = ArgValue::Kind::Number;
            arg.span = num.span;
            std::from_chars(num.text.data(), num.text.data() + num.text.size(), arg.number);
            return arg;
        }
        ArgValue arg;
        arg.kind = ArgValue::Kind::Words;
        arg.span = here();
        arg.words = word_sequence("argument");
        return arg;
    }

    // one or more words joined by single spaces: "wave hand"
    std::string word_sequence(const char* what) {
        const Token& first = expect(TokenKind::Word, what);
        std::string text = first.text;
        while (check(TokenKind::Word)) text += " " + next().text;
        return text;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;
    std::set<int> seen_1d_;
    std::set<std::pair<int, int>> seen_2d_;
};

}  // namespace

ScriptAst parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

ScriptAst parse_script(std::string_view source) {
    return parse(tokenize(source));
}

// -- structural equality (spans ignored) -------------------------------------

bool struct_eq(const ArgValue& a, const ArgValue& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ArgValue::Kind::Words) return a.words == b.words;
    return a.number == b.number;
}

bool struct_eq(const BaseCommand& a, const BaseCommand& b) {
    if (a.verb != b.verb || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!struct_eq(a.args[i], b.args[i])) return false;
    return true;
}

bool struct_eq(const CommandChain& a, const CommandChain& b) {
    if (!struct_eq(a.base, b.base)) return false;
    if (a.overlay.has_value() != b.overlay.has_value()) return false;
    if (a.overlay && !struct_eq(*a.overlay, *b.overlay)) return false;
    return a.character == b.character;
}

bool struct_eq(const Statement& a, const Statement& b) {
    return a.form == b.form && a.index == b.index && a.row == b.row && a.col == b.col &&
           struct_eq(a.chain, b.chain);
}

bool struct_eq(const ScriptAst& a, const ScriptAst& b) {
    if (a.mode != b.mode || a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!struct_eq(a.statements[i], b.statements[i])) return false;
    return true;
}

}  // namespace chase

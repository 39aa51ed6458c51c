// resolve.cpp - argument classification, character routing, matrix layout
#include "chase/resolve.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <map>
#include <set>

namespace chase {

namespace {

struct ResolveFail {
    Diagnostic diag;
};

[[noreturn]] void fail(std::string code, std::string message, SourceSpan span) {
    throw ResolveFail{make_error(std::move(code), std::move(message), span)};
}

// Parameter record shared by do-style commands (solo and overlay).
struct DoParams {
    ActionDef action;
    std::optional<Channel> part;
    std::optional<double> duration_s;
    std::optional<std::string> facing_target;
};

class Resolver {
public:
    Resolver(const Registry& registry, const Scene& scene)
        : registry_(registry), scene_(scene) {}

    TaskMatrix run(const ScriptAst& ast) {
        std::map<int, std::vector<ResolvedCommand>> rows;
        std::map<int, std::string> column_character;
        std::set<int> seen_rows;

        // Statements are visited in row order so that 2d column-character
        // binding is by first (lowest-row) use.
        std::vector<const Statement*> ordered;
        ordered.reserve(ast.statements.size());
        for (const Statement& stmt : ast.statements) ordered.push_back(&stmt);
        int bare_row = 0;
        std::map<const Statement*, std::pair<int, int>> placement;  // row, col
        for (const Statement* stmt : ordered) {
            switch (stmt->form) {
                case Statement::Form::Bare:
                    placement[stmt] = {++bare_row, 1};
                    break;
                case Statement::Form::Task1d:
                    placement[stmt] = {stmt->index, 1};
                    break;
                case Statement::Form::Task2d:
                    placement[stmt] = {stmt->row, stmt->col};
                    break;
            }
        }
        std::stable_sort(ordered.begin(), ordered.end(),
                         [&](const Statement* a, const Statement* b) {
                             return placement[a] < placement[b];
                         });

        for (const Statement* stmt : ordered) {
            const auto [row, col] = placement[stmt];
            try {
                ResolvedCommand cmd = resolve_chain(stmt->chain, stmt->span);
                cmd.row = row;
                cmd.col = col;

                if (ast.mode == ScriptMode::Task2d) {
                    const auto bound = column_character.find(col);
                    if (bound == column_character.end()) {
                        column_character.emplace(col, cmd.character);
                    } else if (bound->second != cmd.character) {
                        fail(codes::ColumnCharacterMismatch,
                             fmt::format("column {} is bound to character '{}' but this cell "
                                         "resolves to '{}'",
                                         col, bound->second, cmd.character),
                             stmt->span);
                    }
                }

                auto& row_cmds = rows[row];
                const bool dup = std::any_of(row_cmds.begin(), row_cmds.end(),
                                             [&](const ResolvedCommand& c) {
                                                 return c.character == cmd.character;
                                             });
                if (dup)
                    fail(codes::DuplicateCharacter,
                         fmt::format("character '{}' appears twice in row {}", cmd.character, row),
                         stmt->span);
                seen_rows.insert(row);
                row_cmds.push_back(std::move(cmd));
            } catch (const ResolveFail& f) {
                diags_.push_back(f.diag);
            }
        }

        // Row density 1..N.
        if (diags_.empty() && !seen_rows.empty()) {
            const int max_row = *seen_rows.rbegin();
            for (int r = 1; r <= max_row; ++r) {
                if (seen_rows.count(r)) continue;
                // Point at the first statement after the gap.
                SourceSpan span;
                for (const Statement* stmt : ordered) {
                    if (placement[stmt].first > r) {
                        span = stmt->span;
                        break;
                    }
                }
                diags_.push_back(make_error(
                    codes::RowGap,
                    fmt::format("task rows must be dense: row {} is missing (rows go up to {})", r,
                                max_row),
                    span));
                break;
            }
        }

        if (!diags_.empty()) throw CompileError(std::move(diags_));

        TaskMatrix matrix;
        if (!rows.empty()) {
            matrix.rows.resize(rows.rbegin()->first);
            for (auto& [row, cmds] : rows) matrix.rows[row - 1] = std::move(cmds);
        }
        return matrix;
    }

private:
    // -- character routing ---------------------------------------------------

    std::string route_character(const CommandChain& chain, SourceSpan stmt_span) {
        if (chain.character) {
            if (!scene_.has_character(*chain.character)) {
                const std::string hint =
                    scene_.has_entity(*chain.character) ? " (it is an object, not a character)" : "";
                fail(codes::UnknownCharacter,
                     fmt::format("unknown character '{}'{}", *chain.character, hint),
                     chain.character_span);
            }
            return *chain.character;
        }
        if (scene_.characters.size() == 1) return scene_.characters.begin()->first;
        if (scene_.characters.empty())
            fail(codes::AmbiguousCharacter, "the scene has no characters to perform this command",
                 stmt_span);
        fail(codes::AmbiguousCharacter,
             fmt::format("the scene has {} characters; add .characterName(...) to pick one",
                         scene_.characters.size()),
             stmt_span);
    }

    // -- argument classification ---------------------------------------------

    const ActionDef& action_arg(const ArgValue& arg) {
        if (arg.kind != ArgValue::Kind::Words)
            fail(codes::BadArgument, "the first argument must name an action", arg.span);
        const ActionDef* def = registry_.find(arg.words);
        if (!def) {
            std::string message = fmt::format("unknown action '{}'", arg.words);
            if (const auto hint = registry_.suggest(arg.words))
                message += fmt::format("; did you mean '{}'?", *hint);
            fail(codes::UnknownAction, std::move(message), arg.span);
        }
        return *def;
    }

    std::string entity_arg(const ArgValue& arg) {
        if (arg.kind != ArgValue::Kind::Words)
            fail(codes::BadArgument, "expected the name of a scene entity", arg.span);
        if (!scene_.has_entity(arg.words))
            fail(codes::UnknownEntity,
                 fmt::format("no character or object named '{}' in the scene", arg.words),
                 arg.span);
        return arg.words;
    }

    double duration_arg(const ArgValue& arg) {
        if (!(arg.number > 0.0))
            fail(codes::BadArgument, "duration must be a positive number of seconds", arg.span);
        return arg.number;
    }

    // Optional parameters of do(...): independent, so each may appear at most
    // once and in any order. Body-part keyword -> part, number -> duration,
    // scene name -> facing target.
    DoParams do_params(const BaseCommand& cmd) {
        DoParams params{action_arg(cmd.args.front()), {}, {}, {}};
        for (std::size_t i = 1; i < cmd.args.size(); ++i) {
            const ArgValue& arg = cmd.args[i];
            if (arg.kind == ArgValue::Kind::Number) {
                if (params.duration_s)
                    fail(codes::DuplicateParamClass, "duration is given twice", arg.span);
                params.duration_s = duration_arg(arg);
                continue;
            }
            if (const auto part = channel_from_keyword(arg.words)) {
                if (params.part)
                    fail(codes::DuplicateParamClass, "body part is given twice", arg.span);
                if (!params.action.allows_part(*part))
                    fail(codes::PartNotAllowed,
                         fmt::format("'{}' cannot be performed with {}", params.action.keyword,
                                     arg.words),
                         arg.span);
                params.part = *part;
                continue;
            }
            if (scene_.has_entity(arg.words)) {
                if (params.facing_target)
                    fail(codes::DuplicateParamClass, "facing target is given twice", arg.span);
                params.facing_target = arg.words;
                continue;
            }
            fail(codes::BadArgument,
                 fmt::format("'{}' is not a body part, duration or scene entity", arg.words),
                 arg.span);
        }
        return params;
    }

    SoloCmd solo_from(const DoParams& params) {
        SoloCmd solo;
        solo.action = params.action;
        solo.part = params.part.value_or(params.action.default_part);
        solo.duration_s = params.duration_s.value_or(params.action.default_duration_s);
        solo.repetitions = repetitions_for(solo.action, solo.duration_s);
        solo.facing_target = params.facing_target;
        return solo;
    }

    LocomotionCmd goto_cmd(const BaseCommand& cmd) {
        LocomotionCmd loco;
        loco.target = entity_arg(cmd.args.front());
        std::optional<MotionStyle> style;
        for (std::size_t i = 1; i < cmd.args.size(); ++i) {
            const ArgValue& arg = cmd.args[i];
            if (arg.kind == ArgValue::Kind::Number)
                fail(codes::BadArgument, "goTo takes no duration; speed comes from the motion style",
                     arg.span);
            if (const auto s = motion_style_from_keyword(arg.words)) {
                if (style)
                    fail(codes::DuplicateParamClass, "motion style is given twice", arg.span);
                style = *s;
                continue;
            }
            fail(codes::UnknownStyle,
                 fmt::format("unknown motion style '{}'; known styles: walk, run", arg.words),
                 arg.span);
        }
        loco.style = style.value_or(MotionStyle::Walk);
        return loco;
    }

    InteractionCmd interact_cmd(const BaseCommand& cmd) {
        InteractionCmd inter;
        inter.target = entity_arg(cmd.args.front());
        if (cmd.args.size() < 2)
            fail(codes::BadArgument,
                 "interactWith needs an interaction module as its second argument", cmd.span);
        const ActionDef& module = action_arg(cmd.args[1]);
        if (module.kind != ActionKind::InteractionModule)
            fail(codes::BadArgument,
                 fmt::format("'{}' is not an interaction module", module.keyword),
                 cmd.args[1].span);
        inter.module = module;

        std::optional<Channel> part;
        std::optional<double> duration;
        for (std::size_t i = 2; i < cmd.args.size(); ++i) {
            const ArgValue& arg = cmd.args[i];
            if (arg.kind == ArgValue::Kind::Number) {
                if (duration)
                    fail(codes::DuplicateParamClass, "duration is given twice", arg.span);
                duration = duration_arg(arg);
                continue;
            }
            if (const auto p = channel_from_keyword(arg.words)) {
                if (part)
                    fail(codes::DuplicateParamClass, "body part is given twice", arg.span);
                if (!module.allows_part(*p))
                    fail(codes::PartNotAllowed,
                         fmt::format("'{}' cannot be performed with {}", module.keyword, arg.words),
                         arg.span);
                part = *p;
                continue;
            }
            fail(codes::BadArgument,
                 fmt::format("'{}' is not a body part or duration", arg.words), arg.span);
        }
        inter.part = part.value_or(module.default_part);
        inter.duration_s = duration.value_or(module.default_duration_s);
        inter.repetitions = repetitions_for(module, inter.duration_s);
        return inter;
    }

    ResolvedCommand resolve_chain(const CommandChain& chain, SourceSpan stmt_span) {
        ResolvedCommand cmd;
        cmd.span = stmt_span;
        cmd.character = route_character(chain, stmt_span);

        switch (chain.base.verb) {
            case Verb::Do:
                cmd.op = solo_from(do_params(chain.base));
                break;
            case Verb::GoTo:
                cmd.op = goto_cmd(chain.base);
                break;
            case Verb::InteractWith:
                cmd.op = interact_cmd(chain.base);
                break;
        }

        if (chain.overlay) {
            const DoParams params = do_params(*chain.overlay);
            OverlaySpec spec;
            spec.action = params.action;
            spec.part = params.part.value_or(params.action.default_part);
            spec.duration_s = params.duration_s;
            spec.facing_target = params.facing_target;
            spec.span = chain.overlay->span;
            cmd.overlay = std::move(spec);
        }
        return cmd;
    }

    const Registry& registry_;
    const Scene& scene_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

TaskMatrix resolve(const ScriptAst& ast, const Registry& registry, const Scene& scene) {
    return Resolver(registry, scene).run(ast);
}

}  // namespace chase

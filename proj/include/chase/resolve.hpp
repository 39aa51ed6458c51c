// resolve.hpp - AST + registry + scene -> task matrix
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chase/ast.hpp"
#include "chase/registry.hpp"
#include "chase/scene.hpp"

namespace chase {

/// A `do` action with all parameters settled.
struct SoloCmd {
    ActionDef action;
    Channel part = Channel::Body;
    double duration_s = 0.0;
    int repetitions = 1;
    std::optional<std::string> facing_target;
};

/// goTo: the target entity is kept by name because the approach cell depends
/// on where the character is standing when the row is scheduled.
struct LocomotionCmd {
    std::string target;
    MotionStyle style = MotionStyle::Walk;
};

struct InteractionCmd {
    std::string target;
    ActionDef module;
    Channel part = Channel::Body;
    double duration_s = 0.0;
    int repetitions = 1;
};

/// Chained overlay `do`. Duration stays optional: without one the overlay
/// fills the base interval (loop) or plays a single cycle (once).
struct OverlaySpec {
    ActionDef action;
    Channel part = Channel::Body;
    std::optional<double> duration_s;
    std::optional<std::string> facing_target;
    SourceSpan span;
};

struct ResolvedCommand {
    std::string character;
    std::variant<SoloCmd, LocomotionCmd, InteractionCmd> op;
    std::optional<OverlaySpec> overlay;
    SourceSpan span;  // originating statement
    int row = 1;
    int col = 1;
};

/// Rows are dense 1..N; within a row characters are pairwise distinct.
struct TaskMatrix {
    std::vector<std::vector<ResolvedCommand>> rows;

    bool empty() const { return rows.empty(); }
};

/// Classifies every argument, routes commands to characters and lays the
/// statements out as matrix rows. Collects one diagnostic per bad statement
/// and throws CompileError carrying all of them.
TaskMatrix resolve(const ScriptAst& ast, const Registry& registry, const Scene& scene);

}  // namespace chase

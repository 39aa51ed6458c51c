// diagnostics.hpp - source locations, diagnostics and the compile error type
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chase {

/// 1-based position of a token or construct in script text.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

/// One reportable problem: stable code, human message, where it happened.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;
};

/// "file:line:col: severity CODE: message"
std::string format_diagnostic(const Diagnostic& diag, const std::string& file);

/// Thrown by any compile stage. Carries every diagnostic the stage collected.
class CompileError : public std::runtime_error {
public:
    explicit CompileError(std::vector<Diagnostic> diags);
    explicit CompileError(Diagnostic diag);

    const std::vector<Diagnostic>& diagnostics() const { return diags_; }
    const Diagnostic& first() const { return diags_.front(); }

private:
    std::vector<Diagnostic> diags_;
};

// Stable error codes. The full catalogue is documented in the README.
namespace codes {
inline constexpr const char* IllegalChar = "ILLEGAL-CHAR";
inline constexpr const char* Syntax = "SYNTAX";
inline constexpr const char* UnbalancedParen = "UNBALANCED-PAREN";
inline constexpr const char* EmptyArgs = "EMPTY-ARGS";
inline constexpr const char* ChainOnDo = "CHAIN-ON-DO";
inline constexpr const char* DoubleOverlay = "DOUBLE-OVERLAY";
inline constexpr const char* DoubleCharacter = "DOUBLE-CHARACTER";
inline constexpr const char* BadIndex = "BAD-INDEX";
inline constexpr const char* MixedModes = "MIXED-MODES";
inline constexpr const char* DuplicateCell = "DUPLICATE-CELL";

inline constexpr const char* UnknownAction = "UNKNOWN-ACTION";
inline constexpr const char* UnknownEntity = "UNKNOWN-ENTITY";
inline constexpr const char* UnknownCharacter = "UNKNOWN-CHARACTER";
inline constexpr const char* UnknownStyle = "UNKNOWN-STYLE";
inline constexpr const char* PartNotAllowed = "PART-NOT-ALLOWED";
inline constexpr const char* AmbiguousCharacter = "AMBIGUOUS-CHARACTER";
inline constexpr const char* BadArgument = "BAD-ARGUMENT";
inline constexpr const char* DuplicateParamClass = "DUPLICATE-PARAM-CLASS";
inline constexpr const char* RowGap = "ROW-GAP";
inline constexpr const char* ColumnCharacterMismatch = "COLUMN-CHARACTER-MISMATCH";
inline constexpr const char* DuplicateCharacter = "DUPLICATE-CHARACTER";

inline constexpr const char* DuplicateName = "DUPLICATE-NAME";
inline constexpr const char* EntityOnObstacle = "ENTITY-ON-OBSTACLE";
inline constexpr const char* OutOfBounds = "OUT-OF-BOUNDS";
inline constexpr const char* MalformedScene = "MALFORMED-SCENE";
inline constexpr const char* MalformedRegistry = "MALFORMED-REGISTRY";
inline constexpr const char* MalformedConfig = "MALFORMED-CONFIG";

inline constexpr const char* Unreachable = "UNREACHABLE";
inline constexpr const char* NoApproach = "NO-APPROACH";
inline constexpr const char* OverlayChannelConflict = "OVERLAY-CHANNEL-CONFLICT";
inline constexpr const char* OverlayClipped = "OVERLAY-CLIPPED";
}  // namespace codes

inline Diagnostic make_error(std::string code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Error, std::move(code), std::move(message), span};
}

inline Diagnostic make_warning(std::string code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Warning, std::move(code), std::move(message), span};
}

}  // namespace chase

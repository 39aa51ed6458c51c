#include "chase/diagnostics.hpp"

#include <fmt/core.h>

namespace chase {

std::string format_diagnostic(const Diagnostic& diag, const std::string& file) {
    const char* severity = diag.severity == Severity::Error ? "error" : "warning";
    return fmt::format("{}:{}:{}: {} {}: {}", file, diag.span.line, diag.span.column, severity,
                       diag.code, diag.message);
}

static std::string summarize(const std::vector<Diagnostic>& diags) {
    if (diags.empty()) return "compile error";
    return fmt::format("{}: {}", diags.front().code, diags.front().message);
}

CompileError::CompileError(std::vector<Diagnostic> diags)
    : std::runtime_error(summarize(diags)), diags_(std::move(diags)) {}

CompileError::CompileError(Diagnostic diag)
    : CompileError(std::vector<Diagnostic>{std::move(diag)}) {}

}  // namespace chase

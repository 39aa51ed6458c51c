// driver.cpp - chase {check, build, run}
#include "chase/driver.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "chase/config.hpp"
#include "chase/motion.hpp"
#include "chase/parser.hpp"
#include "chase/registry.hpp"
#include "chase/resolve.hpp"
#include "chase/schedule.hpp"
#include "chase/serialize.hpp"

namespace chase {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buffer.str();
}

// Serialized documents are complete before any byte is written; the rename
// makes the write all-or-nothing.
bool write_atomic(const std::string& path, const std::string& content, std::string& error) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";

    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
        error = fmt::format("cannot open '{}' for writing", tmp.string());
        return false;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        error = fmt::format("write to '{}' failed", tmp.string());
        std::error_code ignored;
        fs::remove(tmp, ignored);
        return false;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        error = fmt::format("cannot rename '{}' to '{}': {}", tmp.string(), target.string(),
                            ec.message());
        std::error_code ignored;
        fs::remove(tmp, ignored);
        return false;
    }
    return true;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, const std::string& file,
                       std::ostream& err) {
    for (const Diagnostic& diag : diags) err << format_diagnostic(diag, file) << '\n';
}

struct Inputs {
    Registry registry;
    EngineConfig config;
    std::optional<Scene> scene;
};

// Shared option values across subcommands.
struct Options {
    std::string script_path;
    std::string scene_path;
    std::string out_path;
    std::string registry_path;
    std::string config_path;
    double fps = 30.0;
    bool fps_given = false;
};

// Loads registry, config and scene documents. Returns an exit code and a
// message via `err` when something fails.
std::optional<Inputs> load_inputs(const Options& opt, bool need_scene, std::ostream& err,
                                  int& exit_code) {
    Inputs inputs;
    inputs.registry = Registry::builtin();
    if (!opt.registry_path.empty()) {
        const auto text = slurp(opt.registry_path);
        if (!text) {
            err << fmt::format("chase: cannot read '{}'\n", opt.registry_path);
            exit_code = kExitUsage;
            return std::nullopt;
        }
        try {
            inputs.registry = Registry::from_json(*text);
        } catch (const CompileError& e) {
            print_diagnostics(e.diagnostics(), opt.registry_path, err);
            exit_code = kExitDiagnostics;
            return std::nullopt;
        }
    }

    inputs.config = EngineConfig::from_registry(inputs.registry);
    if (!opt.config_path.empty()) {
        const auto text = slurp(opt.config_path);
        if (!text) {
            err << fmt::format("chase: cannot read '{}'\n", opt.config_path);
            exit_code = kExitUsage;
            return std::nullopt;
        }
        try {
            inputs.config.apply_json(*text);
        } catch (const CompileError& e) {
            print_diagnostics(e.diagnostics(), opt.config_path, err);
            exit_code = kExitDiagnostics;
            return std::nullopt;
        }
    }

    if (!opt.scene_path.empty()) {
        const auto text = slurp(opt.scene_path);
        if (!text) {
            err << fmt::format("chase: cannot read '{}'\n", opt.scene_path);
            exit_code = kExitUsage;
            return std::nullopt;
        }
        try {
            inputs.scene = load_scene(*text);
        } catch (const CompileError& e) {
            print_diagnostics(e.diagnostics(), opt.scene_path, err);
            exit_code = kExitDiagnostics;
            return std::nullopt;
        }
    } else if (need_scene) {
        err << "chase: this command needs --scene\n";
        exit_code = kExitUsage;
        return std::nullopt;
    }
    return inputs;
}

struct Compiled {
    Timeline timeline;
    std::vector<Diagnostic> warnings;
};

Compiled compile(const std::string& script_text, const Inputs& inputs) {
    const ScriptAst ast = parse_script(script_text);
    const TaskMatrix matrix = resolve(ast, inputs.registry, *inputs.scene);
    ScheduleResult scheduled = schedule(matrix, *inputs.scene, inputs.config);
    return {std::move(scheduled.timeline), std::move(scheduled.warnings)};
}

int cmd_check(const Options& opt, std::ostream&, std::ostream& err) {
    const auto script = slurp(opt.script_path);
    if (!script) {
        err << fmt::format("chase: cannot read '{}'\n", opt.script_path);
        return kExitUsage;
    }
    int exit_code = kExitOk;
    const auto inputs = load_inputs(opt, /*need_scene=*/false, err, exit_code);
    if (!inputs) return exit_code;

    try {
        if (inputs->scene) {
            const Compiled compiled = compile(*script, *inputs);
            print_diagnostics(compiled.warnings, opt.script_path, err);
        } else {
            parse_script(*script);
        }
    } catch (const CompileError& e) {
        print_diagnostics(e.diagnostics(), opt.script_path, err);
        return kExitDiagnostics;
    }
    return kExitOk;
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto script = slurp(opt.script_path);
    if (!script) {
        err << fmt::format("chase: cannot read '{}'\n", opt.script_path);
        return kExitUsage;
    }
    int exit_code = kExitOk;
    const auto inputs = load_inputs(opt, /*need_scene=*/true, err, exit_code);
    if (!inputs) return exit_code;

    try {
        const Compiled compiled = compile(*script, *inputs);
        print_diagnostics(compiled.warnings, opt.script_path, err);
        const std::string document = timeline_document(compiled.timeline);
        std::string error;
        if (!write_atomic(opt.out_path, document, error)) {
            err << "chase: " << error << '\n';
            return kExitUsage;
        }
        out << fmt::format("{} events, {} total seconds\n", compiled.timeline.events.size(),
                           format_seconds(compiled.timeline.total_s));
    } catch (const CompileError& e) {
        print_diagnostics(e.diagnostics(), opt.script_path, err);
        return kExitDiagnostics;
    }
    return kExitOk;
}

int cmd_run(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto script = slurp(opt.script_path);
    if (!script) {
        err << fmt::format("chase: cannot read '{}'\n", opt.script_path);
        return kExitUsage;
    }
    int exit_code = kExitOk;
    auto inputs = load_inputs(opt, /*need_scene=*/true, err, exit_code);
    if (!inputs) return exit_code;
    if (opt.fps_given) inputs->config.fps = opt.fps;  // --fps beats the config file

    try {
        const Compiled compiled = compile(*script, *inputs);
        print_diagnostics(compiled.warnings, opt.script_path, err);
        const std::vector<Frame> frames =
            render_frames(compiled.timeline, *inputs->scene, inputs->config);
        const std::string document = frames_document(frames);
        std::string error;
        if (!write_atomic(opt.out_path, document, error)) {
            err << "chase: " << error << '\n';
            return kExitUsage;
        }
        out << fmt::format("{} frames, {} total seconds\n", frames.size(),
                           format_seconds(compiled.timeline.total_s));
    } catch (const CompileError& e) {
        print_diagnostics(e.diagnostics(), opt.script_path, err);
        return kExitDiagnostics;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"CHASE animation script compiler"};
    app.name("chase");
    app.require_subcommand(1);

    Options opt;

    CLI::App* check = app.add_subcommand("check", "Parse and validate a script");
    check->add_option("script", opt.script_path, "Script file (.chase)")->required();
    check->add_option("--scene", opt.scene_path, "Scene document (enables full validation)");

    CLI::App* build = app.add_subcommand("build", "Compile a script into a timeline document");
    build->add_option("script", opt.script_path, "Script file (.chase)")->required();
    build->add_option("--scene", opt.scene_path, "Scene document")->required();
    build->add_option("-o,--out", opt.out_path, "Output timeline path")->required();

    CLI::App* run = app.add_subcommand("run", "Compile and sample motion frames");
    run->add_option("script", opt.script_path, "Script file (.chase)")->required();
    run->add_option("--scene", opt.scene_path, "Scene document")->required();
    run->add_option("-o,--out", opt.out_path, "Output frames path")->required();
    run->add_option("--fps", opt.fps, "Frames per second (default 30)")
        ->check(CLI::PositiveNumber);

    for (CLI::App* sub : {check, build, run}) {
        sub->add_option("--registry", opt.registry_path, "Replace the built-in action registry");
        sub->add_option("--config", opt.config_path, "Override speeds and fps");
    }

    // CLI11 consumes the vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "chase: " << e.what() << '\n';
        return kExitUsage;
    }

    opt.fps_given = run->count("--fps") > 0;
    if (check->parsed()) return cmd_check(opt, out, err);
    if (build->parsed()) return cmd_build(opt, out, err);
    return cmd_run(opt, out, err);
}

}  // namespace chase

#pragma once

#include "susyqm/cli/config.hpp"
#include "susyqm/superpotential.hpp"

#include <iosfwd>
#include <string>

namespace susyqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;

/// Environment variable naming the directory for report files.
inline constexpr const char* kOutDirEnv = "SUSYQM_OUT_DIR";

struct CommandResult {
    int exit_code = kExitOk;
    std::string body;
    std::string default_name;  // file name used when only the output directory is known
};

/// example3, free, or a registered pair model summed over all pairs.
Superpotential make_superpotential(const std::string& model, int n, const std::map<std::string, double>& params);

/// Relative-coordinate grid with n - 1 axes. Periodic Sutherland defaults to one fundamental cell.
GridSpec make_grid(const RunConfig& config, int dims);

CommandResult cmd_rep(const RunConfig& config);
CommandResult cmd_rep_verify(const RunConfig& config);
CommandResult cmd_model(const RunConfig& config);
CommandResult cmd_susy(const RunConfig& config);
CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_operator(const RunConfig& config);
CommandResult cmd_block(const RunConfig& config);

/// Runs the command and writes its artifact to --out, the output directory, or `out`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One-line {"error":{"code","message"}} object.
std::string error_json(const std::string& code, const std::string& message);

/// Full command-line entry point; errors go to `err` as JSON objects.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace susyqm::cli

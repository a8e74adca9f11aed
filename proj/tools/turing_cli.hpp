#pragma once

// Command-line surface: constants, optimize, budget, blocks-required,
// growth-check, certify. Parsed arguments land in a RunConfig; run() does the
// dispatch and emits the report. Exit codes: 0 success, 2 validation error,
// 3 numerical-convergence error, 4 certification or growth-check failure,
// 5 I/O error. Errors are additionally emitted as structured JSON on stderr.

#include "report_io.hpp"

#include <turing/gram_scanner.hpp>
#include <turing/optimizer.hpp>

#include <map>
#include <optional>
#include <string>

namespace turing::cli {

enum class Command { constants, optimize, budget, blocks_required, growth_check, certify };

struct RunConfig {
    Command command = Command::constants;
    Family family = Family::zeta;
    std::map<std::string, double> params;  // family- and command-specific scalars
    io::Format format = io::Format::text;
    std::string output_path;  // empty = stdout
    int sig_digits = 6;
    int threads = 1;
    QuadratureSpec quadrature;
    bool auto_align = false;  // certify: snap n/p to good Gram points
    std::optional<Coupling> coupling;
    bool refine_mode = false;
};

// Parses argv into a RunConfig. Returns nullopt when the invocation was
// handled entirely by the parser (e.g. --help).
std::optional<RunConfig> parse(int argc, const char* const* argv);

// Dispatches the command and writes the report; returns the process exit code.
int run(const RunConfig& config);

// parse + run + error-to-exit-code mapping, used by main().
int main_entry(int argc, const char* const* argv);

}  // namespace turing::cli

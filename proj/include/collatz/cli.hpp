#pragma once

#include <collatz/io.hpp>
#include <collatz/slots.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace collatz::cli {

enum class Subcommand { levels, sigma, sigma0, slots, clusters, verify };

enum class OutputFormat { report, csv };

/// Validated options for one invocation. Unset optionals take per-command defaults.
struct CommandRequest {
    Subcommand subcommand = Subcommand::levels;
    std::optional<std::size_t> nu;
    std::optional<BigNat> n;
    ModeSelection mode = ModeSelection::both;
    std::optional<ExactRatio> sigma0;
    ExactRatio gap_factor = default_gap_factor();
    std::size_t cap = kDefaultCap;
    std::optional<std::filesystem::path> checkpoint;
    bool resume = false;
    std::optional<std::filesystem::path> out;
    OutputFormat format = OutputFormat::report;
    bool emit_plot_data = false;
    unsigned workers = 1;
    bool stats = false;
    std::uint64_t seed = 20201220;
    /// Echo of the parsed arguments for the report.
    nlohmann::json echo = nlohmann::json::object();
};

/// Raised for anything that should exit with code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

/// Parses argv (argv[0] is the program name). Prints help and returns nullopt
/// when --help was requested. Throws UsageError.
std::optional<CommandRequest> parse_command(const std::vector<std::string>& args, std::ostream& help_out);

struct CommandResult {
    ReportDocument report;
    int exit_code = kExitOk;
    /// Replaces the report on stdout when --format csv is selected.
    std::optional<std::string> csv;
};

/// Executes a validated request. Domain errors propagate as exceptions.
CommandResult run_command(const CommandRequest& req);

/// Full CLI: parse, run, print, map errors to exit codes.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli

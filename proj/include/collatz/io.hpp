#pragma once

#include <collatz/level_sets.hpp>
#include <collatz/steadiness.hpp>

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

// Level-set files:
//   collatz-levelset v1 nu=<nu> count=<count>
//   <element>            one per line, ascending, each line ends in '\n'

std::string format_levelset(const LevelSet& level);

/// Throws ParseError (with the 1-based line) for malformed text and
/// IntegrityError when the content violates the level-set invariants.
LevelSet parse_levelset(std::string_view text);

void write_levelset(const LevelSet& level, const std::filesystem::path& path);
LevelSet read_levelset(const std::filesystem::path& path);

/// Checkpoints are JSON documents; big integers and ratios are decimal strings.
nlohmann::json checkpoint_to_json(const ScanCheckpoint& cp);
/// Throws CheckpointError for anything that is not a valid v1 checkpoint.
ScanCheckpoint checkpoint_from_json(const nlohmann::json& j);

/// Writes to a sibling temporary and renames it into place.
void write_checkpoint(const ScanCheckpoint& cp, const std::filesystem::path& path);
ScanCheckpoint read_checkpoint(const std::filesystem::path& path);

nlohmann::json ratio_to_json(const ExactRatio& r);
ExactRatio ratio_from_json(const nlohmann::json& j);

inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
    int schema_version = kReportSchemaVersion;
    nlohmann::json command = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    double elapsed_ms = 0.0;
    std::vector<std::string> warnings;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

std::string format_report(const ReportDocument& doc);
/// Throws ParseError for text that is not a report of a known schema version.
ReportDocument parse_report(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace collatz

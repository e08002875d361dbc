#pragma once

// Executes a resolved RunConfig: computes the table, writes CSV or JSON and the
// run manifest, and maps failures to exit codes with a JSON error record.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "casimir/config.hpp"

namespace casimir {

inline constexpr int output_schema_version = 1;

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_config = 2, exit_numeric = 3, exit_io = 4 };

struct Missing {};
using Cell = std::variant<Missing, double, long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RunOutput {
    Table table;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::vector<std::string> warnings;
};

RunOutput execute(const RunConfig& config);

std::string format_csv(const Table& table);
std::string format_json(const RunConfig& config, const RunOutput& output);

/// Full resolved configuration, library version, outputs; no timestamps.
nlohmann::ordered_json make_manifest(const RunConfig& config, const RunOutput& output);

/// The `config` object of a manifest, ready to resolve again.
ConfigSections config_from_manifest(const nlohmann::json& manifest);
ConfigSections config_from_manifest_file(const std::string& path);

/// Resolved parameters, unit conversions and advisories; `valid` false with `errors` on failure.
nlohmann::ordered_json diagnostics(const ConfigSections& sections);

/// Resolve, execute, write outputs. Errors go to `err` as one JSON line; returns the exit code.
int run_sections(const ConfigSections& sections, std::ostream& out, std::ostream& err);

int exit_code_for(const std::exception& error);
nlohmann::ordered_json error_record(const std::exception& error);

}  // namespace casimir

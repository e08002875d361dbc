#pragma once

// Run configuration: INI-style sections of key/value strings, merged from a
// config file and command-line flags, then resolved into typed settings.
//
//   [run]      command, material(s), a, a_spacing, T, T_spacing, radius, quantity,
//              output, format, manifest, threads
//   [numeric]  truncation_tol, quadrature_tol, impedance_tol, frequency_tol,
//              max_terms, entropy_step, entropy_tolerance
//   [compare]  data, observable, confidence, threshold, grid, grid_spacing, reference
//   [kk]       table, extrapolation, plasma_frequency, gamma_*, mismatch_tolerance, xi, xi_spacing
//   [material.NAME]  see presets.hpp

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/analysis.hpp"
#include "casimir/entropy.hpp"
#include "casimir/presets.hpp"

namespace casimir {

using ConfigSections = std::map<std::string, KeyMap>;

/// Parses INI text. Relative file paths (table, data) are resolved against base_dir.
ConfigSections read_config(std::istream& in, const std::string& base_dir = ".");
ConfigSections read_config_file(const std::string& path);

/// Keys in `overrides` replace those in `base`.
void merge_config(ConfigSections& base, const ConfigSections& overrides);

/// Absolute, normalised form of a path.
std::string absolute_path(const std::string& path, const std::string& base_dir = ".");

enum class Command {
    pressure,
    thermal_correction,
    gradient,
    force,
    free_energy,
    entropy,
    curve,
    compare,
    kk_transform,
    diff_force,
};

const char* to_string(Command command);
Command parse_command(const std::string& text);

enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::pressure;
    ConfigSections source;  // echoed in the manifest

    std::vector<ResponseModel> materials;
    std::vector<double> separations;
    std::vector<double> temperatures;
    std::optional<SphereGeometry> geometry;
    Quantity quantity = Quantity::pressure;
    NumericSettings numeric;
    EntropySettings entropy;

    // compare
    std::string data_path;
    ObservableKind observable = ObservableKind::pressure;
    double confidence = 95.0;
    double threshold = 0.95;
    std::vector<double> prediction_grid;  // empty: the data separations
    std::optional<ResponseModel> reference;

    // kk-transform
    std::optional<ResponseModel> tabulated;
    std::vector<double> frequencies;

    std::string output_path;  // empty: stdout
    std::string manifest_path;
    OutputFormat format = OutputFormat::csv;
    int threads = 0;

    std::vector<std::string> warnings;
};

/// Resolves materials (config blocks first, then presets) and validates every field.
RunConfig resolve_config(const ConfigSections& sections);

/// Name resolution on its own, shared with validate.
ResponseModel resolve_material(const std::string& name, const ConfigSections& sections);

std::vector<std::string> available_materials(const ConfigSections& sections);

}  // namespace casimir

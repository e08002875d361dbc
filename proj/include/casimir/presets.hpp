#pragma once

// Named material parameter sets. A material is a flat key map; built-in presets
// are key maps too, and a config block can start from one via `base = NAME`.

#include <map>
#include <string>
#include <vector>

#include "casimir/material.hpp"

namespace casimir {

using KeyMap = std::map<std::string, std::string>;

/// Marker for keys a preset leaves to the user.
inline constexpr const char* required_marker = "<required>";

/// Fermi velocity of Au as a fraction of c.
inline constexpr double fermi_velocity_au = 0.00467;

std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
const KeyMap& preset_keys(const std::string& name);

/// Keys of a user block after applying its `base` preset (if any).
KeyMap expand_material_keys(const std::string& name, const KeyMap& block);

/// Builds the model; ConfigError on unknown, missing or malformed keys.
ResponseModel build_material(const std::string& name, const KeyMap& keys);

}  // namespace casimir

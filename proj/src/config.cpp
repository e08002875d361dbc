#include "casimir/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "casimir/errors.hpp"
#include "csv_util.hpp"

namespace casimir {

namespace {

namespace fs = std::filesystem;

const std::map<std::string, std::set<std::string>> allowed_keys{
    {"run",
     {"command", "material", "materials", "a", "a_spacing", "T", "T_spacing", "radius", "quantity", "output",
      "format", "manifest", "threads"}},
    {"numeric",
     {"truncation_tol", "quadrature_tol", "impedance_tol", "frequency_tol", "max_terms", "entropy_step",
      "entropy_tolerance"}},
    {"compare", {"data", "observable", "confidence", "threshold", "grid", "grid_spacing", "reference"}},
    {"kk",
     {"table", "extrapolation", "plasma_frequency", "gamma_residual", "gamma_amplitude", "gamma_exponent",
      "gamma_reference", "mismatch_tolerance", "xi", "xi_spacing"}},
};

// Keys holding file paths, per section.
const std::map<std::string, std::set<std::string>> path_keys{
    {"compare", {"data"}}, {"kk", {"table"}}, {"material.*", {"table"}}};

bool is_material_section(const std::string& s) { return s.rfind("material.", 0) == 0 && s.size() > 9; }

void resolve_paths(ConfigSections& sections, const std::string& base_dir) {
    for (auto& [section, keys] : sections) {
        const auto it = path_keys.find(is_material_section(section) ? "material.*" : section);
        if (it == path_keys.end()) {
            continue;
        }
        for (const auto& key : it->second) {
            auto k = keys.find(key);
            if (k != keys.end() && !k->second.empty()) {
                k->second = absolute_path(k->second, base_dir);
            }
        }
    }
}

class Section {
public:
    Section(const ConfigSections& all, const std::string& name) : name_(name) {
        const auto it = all.find(name);
        if (it != all.end()) {
            keys_ = &it->second;
        }
    }

    bool has(const std::string& key) const { return keys_ && keys_->count(key); }

    std::string text(const std::string& key) const {
        if (!has(key)) {
            throw ConfigError("missing [" + name_ + "] " + key);
        }
        return detail::trim(keys_->at(key));
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        return has(key) ? text(key) : fallback;
    }

    double number(const std::string& key) const {
        const std::string t = text(key);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
            throw ConfigError("[" + name_ + "] " + key + ": cannot parse '" + t + "'");
        }
        return v;
    }

    double number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

    double positive(const std::string& key, double fallback) const {
        const double v = number(key, fallback);
        if (!(v > 0.0)) {
            throw ConfigError("[" + name_ + "] " + key + " must be positive");
        }
        return v;
    }

    bool logarithmic(const std::string& key, bool fallback) const {
        const std::string s = text(key, fallback ? "log" : "linear");
        if (s == "log") {
            return true;
        }
        if (s == "linear" || s == "lin") {
            return false;
        }
        throw ConfigError("[" + name_ + "] " + key + " must be 'linear' or 'log'");
    }

private:
    std::string name_;
    const KeyMap* keys_ = nullptr;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = detail::trim(item);
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

std::vector<double> sweep(const Section& s, const std::string& key, const std::string& spacing_key,
                          bool default_log) {
    return SweepSpec::parse(s.text(key), s.logarithmic(spacing_key, default_log)).values();
}

bool needs_radius(Command c, Quantity q) {
    return c == Command::gradient || c == Command::force || c == Command::diff_force ||
           (c == Command::curve && (q == Quantity::force_gradient || q == Quantity::force));
}

}  // namespace

std::string absolute_path(const std::string& path, const std::string& base_dir) {
    fs::path p(path);
    if (p.is_relative()) {
        p = fs::absolute(fs::path(base_dir)) / p;
    }
    return p.lexically_normal().string();
}

ConfigSections read_config(std::istream& in, const std::string& base_dir) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    ConfigSections sections;
    for (const auto& [section, child] : tree) {
        if (child.empty()) {
            throw ConfigError("config: key '" + section + "' outside a section");
        }
        KeyMap& keys = sections[section];
        for (const auto& [key, value] : child) {
            keys[key] = value.data();
        }
    }
    resolve_paths(sections, base_dir);
    return sections;
}

ConfigSections read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open config file '" + path + "'");
    }
    const fs::path dir = fs::absolute(fs::path(path)).parent_path();
    return read_config(in, dir.string());
}

void merge_config(ConfigSections& base, const ConfigSections& overrides) {
    for (const auto& [section, keys] : overrides) {
        for (const auto& [k, v] : keys) {
            base[section][k] = v;
        }
    }
}

const char* to_string(Command command) {
    switch (command) {
        case Command::pressure: return "pressure";
        case Command::thermal_correction: return "thermal-correction";
        case Command::gradient: return "gradient";
        case Command::force: return "force";
        case Command::free_energy: return "free-energy";
        case Command::entropy: return "entropy";
        case Command::curve: return "curve";
        case Command::compare: return "compare";
        case Command::kk_transform: return "kk-transform";
        case Command::diff_force: return "diff-force";
    }
    return "?";
}

Command parse_command(const std::string& text) {
    for (Command c : {Command::pressure, Command::thermal_correction, Command::gradient, Command::force,
                      Command::free_energy, Command::entropy, Command::curve, Command::compare,
                      Command::kk_transform, Command::diff_force}) {
        if (text == to_string(c)) {
            return c;
        }
    }
    throw ConfigError("unknown command '" + text + "'");
}

std::vector<std::string> available_materials(const ConfigSections& sections) {
    std::vector<std::string> names = preset_names();
    for (const auto& [section, keys] : sections) {
        if (is_material_section(section)) {
            names.push_back(section.substr(9));
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

ResponseModel resolve_material(const std::string& name, const ConfigSections& sections) {
    const auto block = sections.find("material." + name);
    if (block != sections.end()) {
        return build_material(name, expand_material_keys(name, block->second));
    }
    if (is_preset(name)) {
        return build_material(name, preset_keys(name));
    }
    std::string list;
    for (const auto& n : available_materials(sections)) {
        list += (list.empty() ? "" : ", ") + n;
    }
    throw ConfigError("unknown material '" + name + "'; available: " + list);
}

RunConfig resolve_config(const ConfigSections& sections) {
    for (const auto& [section, keys] : sections) {
        if (is_material_section(section)) {
            continue;
        }
        const auto allowed = allowed_keys.find(section);
        if (allowed == allowed_keys.end()) {
            throw ConfigError("unknown config section [" + section + "]");
        }
        for (const auto& [k, v] : keys) {
            if (!allowed->second.count(k)) {
                throw ConfigError("unknown key '" + k + "' in [" + section + "]");
            }
        }
    }

    RunConfig cfg;
    cfg.source = sections;
    const Section run(sections, "run");
    const Section numeric(sections, "numeric");
    cfg.command = parse_command(run.text("command"));

    cfg.numeric.truncation_tol = numeric.positive("truncation_tol", cfg.numeric.truncation_tol);
    cfg.numeric.quadrature_tol = numeric.positive("quadrature_tol", cfg.numeric.quadrature_tol);
    cfg.numeric.impedance_tol = numeric.positive("impedance_tol", cfg.numeric.impedance_tol);
    cfg.numeric.frequency_tol = numeric.positive("frequency_tol", cfg.numeric.frequency_tol);
    cfg.numeric.max_terms = static_cast<long>(numeric.positive("max_terms", static_cast<double>(cfg.numeric.max_terms)));
    cfg.entropy.step = numeric.number("entropy_step", 0.0);
    if (cfg.entropy.step < 0.0) {
        throw ConfigError("[numeric] entropy_step must be non-negative (0 selects the automatic step)");
    }
    cfg.entropy.tolerance_fraction = numeric.positive("entropy_tolerance", cfg.entropy.tolerance_fraction);

    const double threads = run.number("threads", 0.0);
    if (threads < 0.0 || threads != std::floor(threads)) {
        throw ConfigError("[run] threads must be a non-negative integer");
    }
    cfg.threads = static_cast<int>(threads);
    const std::string format = run.text("format", "csv");
    if (format == "csv") {
        cfg.format = OutputFormat::csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::json;
    } else {
        throw ConfigError("[run] format must be csv or json");
    }
    cfg.output_path = run.text("output", "");
    cfg.manifest_path = run.text("manifest", cfg.output_path.empty() ? "" : cfg.output_path + ".manifest.json");

    if (cfg.command == Command::curve) {
        cfg.quantity = parse_quantity(run.text("quantity", "pressure"));
    }
    if (run.has("radius") || needs_radius(cfg.command, cfg.quantity)) {
        if (!run.has("radius")) {
            throw ConfigError(std::string("command '") + to_string(cfg.command) + "' needs a sphere radius (--R)");
        }
        cfg.geometry = SphereGeometry{run.positive("radius", 0.0)};
    }

    const double default_T = 300.0;
    if (cfg.command == Command::entropy) {
        cfg.temperatures = sweep(run, "T", "T_spacing", false);
        for (double T : cfg.temperatures) {
            if (!(T > 0.0)) {
                throw ConfigError("entropy temperatures must be positive");
            }
        }
    } else {
        const double T = run.number("T", default_T);
        if (T < 0.0) {
            throw ConfigError("[run] T must be non-negative");
        }
        cfg.temperatures = {T};
    }

    std::vector<std::string> names;
    if (run.has("materials")) {
        names = split_list(run.text("materials"));
    }
    if (run.has("material")) {
        for (const auto& n : split_list(run.text("material"))) {
            names.push_back(n);
        }
    }

    if (cfg.command == Command::kk_transform) {
        const Section kk(sections, "kk");
        if (!names.empty()) {
            if (names.size() != 1) {
                throw ConfigError("kk-transform takes one tabulated material");
            }
            cfg.tabulated = resolve_material(names.front(), sections);
            if (!std::holds_alternative<TabulatedModel>(cfg.tabulated->response)) {
                throw ConfigError("material '" + names.front() + "' is not tabulated");
            }
        } else {
            KeyMap keys{{"model", "tabulated"}, {"table", kk.text("table")}};
            for (const char* k : {"extrapolation", "plasma_frequency", "gamma_residual", "gamma_amplitude",
                                  "gamma_exponent", "gamma_reference", "mismatch_tolerance"}) {
                if (kk.has(k)) {
                    keys[k] = kk.text(k);
                }
            }
            cfg.tabulated = build_material("table", keys);
        }
        cfg.frequencies = SweepSpec::parse(kk.text("xi", "0.05:50:31"), kk.logarithmic("xi_spacing", true)).values();
        for (double xi : cfg.frequencies) {
            if (!(xi > 0.0)) {
                throw ConfigError("[kk] xi values must be positive");
            }
        }
        return cfg;
    }

    if (names.empty()) {
        throw ConfigError("no material given (--material NAME)");
    }
    for (const auto& n : names) {
        cfg.materials.push_back(resolve_material(n, sections));
    }
    const bool single = cfg.command == Command::entropy;
    if (single && cfg.materials.size() != 1) {
        throw ConfigError(std::string("command '") + to_string(cfg.command) + "' takes exactly one material");
    }
    if (cfg.command == Command::diff_force && cfg.materials.size() != 2) {
        throw ConfigError("diff-force takes exactly two materials (state A, state B)");
    }

    if (cfg.command == Command::compare) {
        const Section cmp(sections, "compare");
        cfg.data_path = cmp.text("data");
        cfg.observable = parse_observable(cmp.text("observable", "pressure"));
        cfg.confidence = cmp.positive("confidence", 95.0);
        cfg.threshold = cmp.positive("threshold", 0.95);
        if (cfg.threshold > 1.0) {
            throw ConfigError("[compare] threshold is a fraction in (0, 1]");
        }
        if (cmp.has("grid")) {
            cfg.prediction_grid = sweep(cmp, "grid", "grid_spacing", true);
        }
        if (cfg.observable == ObservableKind::force_gradient || cfg.observable == ObservableKind::force ||
            cfg.observable == ObservableKind::force_difference) {
            if (!cfg.geometry) {
                throw ConfigError("compare: observable '" + std::string(to_string(cfg.observable)) +
                                  "' needs a sphere radius");
            }
        }
        if (cfg.observable == ObservableKind::force_difference) {
            cfg.reference = resolve_material(cmp.text("reference"), sections);
        }
        return cfg;
    }

    cfg.separations = sweep(run, "a", "a_spacing", false);
    for (double a : cfg.separations) {
        if (!(a > 0.0)) {
            throw ConfigError("separations must be positive");
        }
        if (cfg.geometry && pfa_advisory(a, *cfg.geometry)) {
            std::ostringstream msg;
            msg << "PFA advisory: a/R = " << a / cfg.geometry->radius << " exceeds " << pfa_advisory_ratio
                << " at a = " << a << " um";
            cfg.warnings.push_back(msg.str());
        }
    }
    if (cfg.command == Command::entropy && cfg.separations.size() != 1) {
        throw ConfigError("entropy takes a single separation");
    }
    return cfg;
}

}  // namespace casimir

// casimir: command-line front end. Every subcommand builds the same INI-style
// configuration a --config file would, so runs can be replayed from their manifest.

#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/run.hpp"
#include "casimir/version.hpp"

namespace {

using casimir::ConfigSections;

struct Binding {
    std::string section;
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
    bool is_path = false;
};

// A material given on the command line replaces any list from the config file.
void merge_overrides(ConfigSections& sections, const ConfigSections& overrides) {
    const auto run = overrides.find("run");
    if (run != overrides.end() && (run->second.count("material") || run->second.count("materials"))) {
        sections["run"].erase("material");
        sections["run"].erase("materials");
    }
    casimir::merge_config(sections, overrides);
}

class Flags {
public:
    void add(CLI::App* app, const std::string& flag, const std::string& section, const std::string& key,
             const std::string& help, bool is_path = false) {
        auto& b = bindings_[app].emplace_back(std::make_unique<Binding>());
        b->section = section;
        b->key = key;
        b->is_path = is_path;
        b->option = app->add_option(flag, b->value, help);
    }

    void fill(CLI::App* app, ConfigSections& sections) const {
        const auto it = bindings_.find(app);
        if (it == bindings_.end()) {
            return;
        }
        for (const auto& b : it->second) {
            if (b->option->count() > 0) {
                sections[b->section][b->key] = b->is_path ? casimir::absolute_path(b->value) : b->value;
            }
        }
    }

private:
    std::map<CLI::App*, std::vector<std::unique_ptr<Binding>>> bindings_;
};

struct Common {
    std::string config;
};

void add_common(Flags& flags, CLI::App* app, Common& common) {
    app->add_option("--config", common.config, "INI configuration file (flags override it)");
    flags.add(app, "--threads", "run", "threads", "OpenMP threads (0 = runtime default)");
    flags.add(app, "-o,--output", "run", "output", "output file (default stdout)", true);
    flags.add(app, "--format", "run", "format", "csv or json");
    flags.add(app, "--manifest", "run", "manifest", "manifest path (default <output>.manifest.json)", true);
    flags.add(app, "--truncation-tol", "numeric", "truncation_tol", "Matsubara truncation tolerance");
    flags.add(app, "--quadrature-tol", "numeric", "quadrature_tol", "wavevector quadrature tolerance");
    flags.add(app, "--impedance-tol", "numeric", "impedance_tol", "nonlocal impedance quadrature tolerance");
    flags.add(app, "--frequency-tol", "numeric", "frequency_tol", "zero-temperature frequency tolerance");
    flags.add(app, "--max-terms", "numeric", "max_terms", "Matsubara term cap");
}

void add_material(Flags& flags, CLI::App* app) {
    flags.add(app, "--material", "run", "material", "material name or comma list");
    flags.add(app, "--materials", "run", "materials", "comma-separated material names");
}

void add_grid(Flags& flags, CLI::App* app) {
    flags.add(app, "--a", "run", "a", "separation in um, value or start:stop:count");
    flags.add(app, "--a-spacing", "run", "a_spacing", "linear or log");
    flags.add(app, "--T", "run", "T", "temperature in K");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal Casimir pressures, free energies, entropies and sphere-plate observables"};
    app.set_version_flag("--version", casimir::library_version);
    app.require_subcommand(1);
    Flags flags;
    Common common;

    struct Spec {
        const char* name;
        const char* help;
    };
    const std::vector<Spec> specs{
        {"pressure", "plate-plate pressure P(a,T)"},
        {"thermal-correction", "P(a,T) - P(a,0) and the relative correction"},
        {"gradient", "sphere-plate force gradient (PFA)"},
        {"force", "sphere-plate force (PFA)"},
        {"free-energy", "plate-plate free energy per unit area"},
        {"entropy", "Casimir entropy over a temperature grid with the Nernst classification"},
        {"curve", "one quantity for several materials over a separation sweep"},
        {"compare", "compare predictions with a measurement file"},
        {"kk-transform", "eps(i xi) from a tabulated optical table"},
        {"diff-force", "difference of sphere-plate forces between two material states"},
    };
    std::map<std::string, CLI::App*> commands;
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(flags, sub, common);
        commands[s.name] = sub;
    }
    for (const char* name : {"pressure", "thermal-correction", "free-energy", "gradient", "force", "curve"}) {
        add_material(flags, commands[name]);
        add_grid(flags, commands[name]);
    }
    for (const char* name : {"gradient", "force", "curve", "diff-force", "compare"}) {
        flags.add(commands[name], "--R", "run", "radius", "sphere radius in um");
    }
    flags.add(commands["curve"], "--quantity", "run", "quantity",
              "pressure, thermal-correction, relative-thermal-correction, free-energy, gradient, force");

    CLI::App* entropy = commands["entropy"];
    add_material(flags, entropy);
    flags.add(entropy, "--a", "run", "a", "separation in um");
    flags.add(entropy, "--T", "run", "T", "temperature grid start:stop:count (K)");
    flags.add(entropy, "--T-spacing", "run", "T_spacing", "linear or log");
    flags.add(entropy, "--entropy-step", "numeric", "entropy_step", "fixed half-step in K (0 = automatic)");
    flags.add(entropy, "--entropy-tolerance", "numeric", "entropy_tolerance", "classification tolerance fraction");

    CLI::App* cmp = commands["compare"];
    add_material(flags, cmp);
    flags.add(cmp, "--T", "run", "T", "temperature in K");
    flags.add(cmp, "--data", "compare", "data", "CSV: separation_um,value,total_error", true);
    flags.add(cmp, "--observable", "compare", "observable", "pressure, force_gradient, force, force_difference");
    flags.add(cmp, "--confidence", "compare", "confidence", "confidence level of the errors, percent");
    flags.add(cmp, "--threshold", "compare", "threshold", "fraction of consistent points required");
    flags.add(cmp, "--grid", "compare", "grid", "prediction grid start:stop:count (default: data separations)");
    flags.add(cmp, "--grid-spacing", "compare", "grid_spacing", "linear or log");
    flags.add(cmp, "--reference", "compare", "reference", "second state for force_difference");

    CLI::App* kk = commands["kk-transform"];
    flags.add(kk, "--material", "run", "material", "tabulated material defined in the config");
    flags.add(kk, "--table", "kk", "table", "optical table: energy_eV,n,k", true);
    flags.add(kk, "--extrapolation", "kk", "extrapolation", "drude, plasma or dielectric-constant");
    flags.add(kk, "--wp", "kk", "plasma_frequency", "plasma frequency of the extrapolation, eV");
    flags.add(kk, "--gamma", "kk", "gamma_amplitude", "relaxation at the reference temperature, eV");
    flags.add(kk, "--gamma0", "kk", "gamma_residual", "residual relaxation, eV");
    flags.add(kk, "--xi", "kk", "xi", "imaginary frequencies start:stop:count (eV)");
    flags.add(kk, "--xi-spacing", "kk", "xi_spacing", "linear or log (default log)");
    flags.add(kk, "--T", "run", "T", "temperature in K");

    CLI::App* diff = commands["diff-force"];
    std::string state_a, state_b;
    diff->add_option("--state-a", state_a, "material in state A")->required();
    diff->add_option("--state-b", state_b, "material in state B")->required();
    add_grid(flags, diff);

    CLI::App* validate = app.add_subcommand("validate", "resolve a configuration and list diagnostics");
    std::string validate_config;
    validate->add_option("--config", validate_config, "INI configuration file");
    flags.add(validate, "--command", "run", "command", "command to validate");
    add_material(flags, validate);
    add_grid(flags, validate);
    flags.add(validate, "--R", "run", "radius", "sphere radius in um");

    CLI::App* rerun = app.add_subcommand("rerun", "repeat a run from its manifest");
    std::string manifest_in, rerun_output, rerun_manifest;
    rerun->add_option("manifest-file", manifest_in, "manifest JSON")->required();
    rerun->add_option("-o,--output", rerun_output, "new output path (default: as recorded)");
    rerun->add_option("--manifest", rerun_manifest, "new manifest path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : casimir::exit_config;
    }

    try {
        if (rerun->parsed()) {
            ConfigSections sections = casimir::config_from_manifest_file(manifest_in);
            if (!rerun_output.empty()) {
                sections["run"]["output"] = casimir::absolute_path(rerun_output);
                sections["run"].erase("manifest");
            }
            if (!rerun_manifest.empty()) {
                sections["run"]["manifest"] = casimir::absolute_path(rerun_manifest);
            }
            return casimir::run_sections(sections, std::cout, std::cerr);
        }
        if (validate->parsed()) {
            ConfigSections sections;
            if (!validate_config.empty()) {
                sections = casimir::read_config_file(validate_config);
            }
            ConfigSections overrides;
            flags.fill(validate, overrides);
            merge_overrides(sections, overrides);
            const auto d = casimir::diagnostics(sections);
            std::cout << d.dump(2) << '\n';
            return d["valid"].get<bool>() ? casimir::exit_ok : casimir::exit_config;
        }
        for (const auto& [name, sub] : commands) {
            if (!sub->parsed()) {
                continue;
            }
            ConfigSections sections;
            if (!common.config.empty()) {
                sections = casimir::read_config_file(common.config);
            }
            ConfigSections overrides;
            flags.fill(sub, overrides);
            overrides["run"]["command"] = name;
            if (sub == diff) {
                overrides["run"]["materials"] = state_a + "," + state_b;
            }
            merge_overrides(sections, overrides);
            return casimir::run_sections(sections, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << casimir::error_record(e).dump() << '\n';
        return casimir::exit_code_for(e);
    }
    return casimir::exit_failure;
}

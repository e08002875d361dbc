#include "casimir/presets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "casimir/errors.hpp"
#include "csv_util.hpp"

namespace casimir {

namespace {

const std::string req = required_marker;

// Two-oscillator fused silica (static permittivity 3.801).
const std::string silica_oscillators = "1.098:13.39, 1.703:0.1237";
// Single-oscillator silicon, static permittivity 11.67.
const std::string silicon_oscillators = "10.67:4.34";

const std::map<std::string, KeyMap>& presets() {
    static const std::map<std::string, KeyMap> table = [] {
        std::map<std::string, KeyMap> t;
        const KeyMap au_drude{{"model", "drude"},
                              {"plasma_frequency", "9.0"},
                              {"gamma_residual", "0"},
                              {"gamma_amplitude", "0.035"},
                              {"gamma_exponent", "5"},
                              {"gamma_reference", "300"}};
        t["vacuum"] = {{"model", "vacuum"}};
        t["ideal-metal"] = {{"model", "ideal-metal"}};
        t["au-drude"] = au_drude;
        t["au-drude-perfect"] = au_drude;
        KeyMap impure = au_drude;
        impure["gamma_residual"] = "0.0035";
        impure["gamma_amplitude"] = "0.0315";
        t["au-drude-impure"] = impure;
        t["au-plasma"] = {{"model", "plasma"}, {"plasma_frequency", "9.0"}};
        KeyMap transverse = au_drude;
        transverse["model"] = "nonlocal";
        transverse["fermi_velocity"] = "0.00467";
        transverse["v_transverse"] = "7";
        transverse["v_longitudinal"] = "7";
        transverse["form"] = "transverse-only";
        t["au-nonlocal-transverse"] = transverse;
        KeyMap full = transverse;
        full["v_transverse"] = "1.5";
        full["v_longitudinal"] = "1.5";
        full["form"] = "full";
        t["au-nonlocal-full"] = full;
        const KeyMap silica_opt{{"model", "dielectric"}, {"oscillators", silica_oscillators},
                                {"include_conductivity", "false"}};
        t["silica-opt"] = silica_opt;
        KeyMap silica = silica_opt;
        silica["include_conductivity"] = "true";
        silica["sigma_300"] = "29.7";
        silica["activation"] = "7000";
        t["silica"] = silica;
        KeyMap frozen = silica;
        frozen["activation"] = "0";
        t["silica-frozen"] = frozen;
        const KeyMap ni_drude{{"model", "drude"},          {"plasma_frequency", "4.89"}, {"gamma_residual", "0"},
                              {"gamma_amplitude", "0.0436"}, {"gamma_exponent", "5"},     {"gamma_reference", "300"},
                              {"mu", "110"}};
        t["ni-drude"] = ni_drude;
        t["ni-plasma"] = {{"model", "plasma"}, {"plasma_frequency", "4.89"}, {"mu", "110"}};
        KeyMap ni_nl = ni_drude;
        ni_nl["model"] = "nonlocal";
        ni_nl["fermi_velocity"] = req;
        ni_nl["v_transverse"] = "7";
        ni_nl["v_longitudinal"] = "7";
        ni_nl["form"] = "transverse-only";
        t["ni-nonlocal"] = ni_nl;
        const KeyMap si{{"model", "dielectric"},
                        {"oscillators", silicon_oscillators},
                        {"include_conductivity", "false"},
                        {"carrier_plasma_frequency", req},
                        {"carrier_gamma", req}};
        t["si-membrane-dark"] = si;
        t["si-membrane-bright"] = si;
        return t;
    }();
    return table;
}

const std::set<std::string> known_keys{
    "base",           "model",        "plasma_frequency", "gamma_residual", "gamma_amplitude",
    "gamma_exponent", "gamma_reference", "mu",           "fermi_velocity", "v_transverse",
    "v_longitudinal", "form",         "oscillators",      "include_conductivity", "sigma_300",
    "sigma_prefactor", "activation",  "carrier_plasma_frequency", "carrier_gamma", "table",
    "extrapolation",  "mismatch_tolerance"};

class Reader {
public:
    Reader(const std::string& name, const KeyMap& keys) : name_(name), keys_(keys) {}

    bool has(const std::string& key) const { return keys_.count(key) != 0; }

    const std::string& text(const std::string& key) const {
        const auto it = keys_.find(key);
        if (it == keys_.end() || it->second == req) {
            throw ConfigError("material '" + name_ + "' requires key '" + key + "'");
        }
        return it->second;
    }

    double number(const std::string& key) const { return parse(key, text(key)); }

    double number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

    double positive(const std::string& key) const {
        const double v = number(key);
        if (!(v > 0.0)) {
            throw ConfigError("material '" + name_ + "': '" + key + "' must be positive");
        }
        return v;
    }

    double non_negative(const std::string& key, double fallback) const {
        const double v = number(key, fallback);
        if (!(v >= 0.0)) {
            throw ConfigError("material '" + name_ + "': '" + key + "' must be non-negative");
        }
        return v;
    }

    bool flag(const std::string& key, bool fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const std::string& v = text(key);
        if (v == "true" || v == "yes" || v == "1" || v == "on") {
            return true;
        }
        if (v == "false" || v == "no" || v == "0" || v == "off") {
            return false;
        }
        throw ConfigError("material '" + name_ + "': '" + key + "' must be true or false");
    }

    double parse(const std::string& key, const std::string& value) const {
        double v = 0.0;
        const std::string t = detail::trim(value);
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
            throw ConfigError("material '" + name_ + "': cannot parse '" + key + "' value '" + value + "'");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError("material '" + name_ + "': " + message);
    }

private:
    std::string name_;
    const KeyMap& keys_;
};

DrudeParams read_drude(const Reader& r) {
    DrudeParams d{r.positive("plasma_frequency"), {}};
    d.relaxation.residual = r.non_negative("gamma_residual", 0.0);
    d.relaxation.amplitude = r.non_negative("gamma_amplitude", 0.0);
    d.relaxation.exponent = r.number("gamma_exponent", 5.0);
    d.relaxation.reference_temperature = r.number("gamma_reference", 300.0);
    if (d.relaxation.exponent < 1.0) {
        r.fail("gamma_exponent must be at least 1");
    }
    if (!(d.relaxation.reference_temperature > 0.0)) {
        r.fail("gamma_reference must be positive");
    }
    return d;
}

OscillatorModel read_oscillators(const Reader& r) {
    OscillatorModel model;
    std::stringstream ss(r.text("oscillators"));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string p;
        while (std::getline(is, p, ':')) {
            parts.push_back(p);
        }
        if (parts.size() < 2 || parts.size() > 3) {
            r.fail("oscillators must be 'C:w0[:damping]' items separated by commas");
        }
        Oscillator o{r.parse("oscillators", parts[0]), r.parse("oscillators", parts[1]),
                     parts.size() == 3 ? r.parse("oscillators", parts[2]) : 0.0};
        if (!(o.strength > 0.0) || !(o.resonance > 0.0) || o.damping < 0.0) {
            r.fail("oscillator strengths and resonances must be positive, damping non-negative");
        }
        model.oscillators.push_back(o);
    }
    if (model.oscillators.empty()) {
        r.fail("no oscillators given");
    }
    return model;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, keys] : presets()) {
        names.push_back(name);
    }
    return names;
}

bool is_preset(const std::string& name) { return presets().count(name) != 0; }

const KeyMap& preset_keys(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) {
        std::string list;
        for (const auto& n : preset_names()) {
            list += (list.empty() ? "" : ", ") + n;
        }
        throw ConfigError("unknown material '" + name + "'; available: " + list);
    }
    return it->second;
}

KeyMap expand_material_keys(const std::string& name, const KeyMap& block) {
    KeyMap keys;
    const auto base = block.find("base");
    if (base != block.end()) {
        keys = preset_keys(base->second);
    }
    for (const auto& [k, v] : block) {
        if (!known_keys.count(k)) {
            throw ConfigError("material '" + name + "': unknown key '" + k + "'");
        }
        keys[k] = v;
    }
    return keys;
}

ResponseModel build_material(const std::string& name, const KeyMap& keys) {
    const Reader r(name, keys);
    for (const auto& [k, v] : keys) {
        if (!known_keys.count(k)) {
            r.fail("unknown key '" + k + "'");
        }
    }
    ResponseModel model;
    model.name = name;
    model.permeability.static_mu = r.number("mu", 1.0);
    if (model.permeability.static_mu < 1.0) {
        r.fail("mu must be at least 1");
    }
    const std::string& kind = r.text("model");
    if (kind == "vacuum") {
        model.response = VacuumModel{};
    } else if (kind == "ideal-metal") {
        model.response = IdealMetalModel{};
    } else if (kind == "drude") {
        model.response = read_drude(r);
    } else if (kind == "plasma") {
        model.response = PlasmaParams{r.positive("plasma_frequency")};
    } else if (kind == "nonlocal") {
        NonlocalDrudeParams p;
        p.base = read_drude(r);
        p.fermi_velocity = r.positive("fermi_velocity");
        if (p.fermi_velocity >= 1.0) {
            r.fail("fermi_velocity is a fraction of c and must be below 1");
        }
        p.v_transverse = r.non_negative("v_transverse", 0.0) * p.fermi_velocity;
        p.v_longitudinal = r.non_negative("v_longitudinal", 0.0) * p.fermi_velocity;
        const std::string form = r.has("form") ? r.text("form") : "full";
        if (form == "full") {
            p.form = WavevectorForm::full;
        } else if (form == "transverse-only") {
            p.form = WavevectorForm::transverse_only;
        } else {
            r.fail("form must be 'full' or 'transverse-only'");
        }
        model.response = p;
    } else if (kind == "dielectric") {
        DielectricParams d;
        d.optical = read_oscillators(r);
        d.include_conductivity = r.flag("include_conductivity", false);
        if (d.include_conductivity) {
            d.conductivity.activation = r.non_negative("activation", 0.0);
            if (r.has("sigma_prefactor")) {
                d.conductivity.prefactor = r.positive("sigma_prefactor");
            } else {
                d.conductivity.prefactor = r.positive("sigma_300") * std::exp(d.conductivity.activation / 300.0);
            }
        }
        if (r.has("carrier_plasma_frequency") || r.has("carrier_gamma")) {
            const double wp = r.positive("carrier_plasma_frequency");
            const double gamma = r.non_negative("carrier_gamma", 0.0);
            d.free_carriers = DrudeParams{wp, {gamma, 0.0, 5.0, 300.0}};
        }
        model.response = d;
    } else if (kind == "tabulated") {
        ExtrapolationSpec spec;
        const std::string ex = r.has("extrapolation") ? r.text("extrapolation") : "drude";
        if (ex == "drude") {
            spec.kind = ExtrapolationKind::drude;
            spec.drude = read_drude(r);
        } else if (ex == "plasma") {
            spec.kind = ExtrapolationKind::plasma;
            spec.drude = DrudeParams{r.positive("plasma_frequency"), {}};
        } else if (ex == "dielectric-constant") {
            spec.kind = ExtrapolationKind::dielectric_constant;
        } else {
            r.fail("extrapolation must be drude, plasma or dielectric-constant");
        }
        spec.mismatch_tolerance = r.number("mismatch_tolerance", spec.mismatch_tolerance);
        model.response = TabulatedModel{
            std::make_shared<const KramersKronigTransform>(load_optical_table_file(r.text("table")), spec)};
    } else {
        r.fail("unknown model '" + kind + "' (vacuum, ideal-metal, drude, plasma, nonlocal, dielectric, tabulated)");
    }
    return model;
}

}  // namespace casimir

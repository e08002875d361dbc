#include "casimir/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ios>
#include <ostream>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/version.hpp"

namespace casimir {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

ojson cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> ojson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Missing>) {
                return nullptr;
            } else {
                return v;
            }
        },
        cell);
}

ojson relaxation_json(const RelaxationModel& r, double T) {
    return {{"residual_eV", r.residual},
            {"amplitude_eV", r.amplitude},
            {"exponent", r.exponent},
            {"reference_temperature_K", r.reference_temperature},
            {"gamma_at_T_eV", relaxation_at(r, T)}};
}

ojson describe_material(const ResponseModel& m, double T) {
    ojson j{{"name", m.name}, {"kind", model_kind(m)}, {"static_mu", m.permeability.static_mu}};
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, DrudeParams>) {
                j["plasma_frequency_eV"] = r.plasma_frequency;
                j["relaxation"] = relaxation_json(r.relaxation, T);
            } else if constexpr (std::is_same_v<R, PlasmaParams>) {
                j["plasma_frequency_eV"] = r.plasma_frequency;
            } else if constexpr (std::is_same_v<R, NonlocalDrudeParams>) {
                j["plasma_frequency_eV"] = r.base.plasma_frequency;
                j["relaxation"] = relaxation_json(r.base.relaxation, T);
                j["fermi_velocity_c"] = r.fermi_velocity;
                j["v_transverse_c"] = r.v_transverse;
                j["v_longitudinal_c"] = r.v_longitudinal;
                j["v_transverse_over_vF"] = r.v_transverse / r.fermi_velocity;
                j["v_longitudinal_over_vF"] = r.v_longitudinal / r.fermi_velocity;
                j["form"] = r.form == WavevectorForm::full ? "full" : "transverse-only";
            } else if constexpr (std::is_same_v<R, DielectricParams>) {
                ojson osc = ojson::array();
                for (const auto& o : r.optical.oscillators) {
                    osc.push_back({{"strength", o.strength}, {"resonance_eV", o.resonance}, {"damping_eV", o.damping}});
                }
                j["oscillators"] = osc;
                j["static_permittivity"] = r.optical.static_permittivity();
                j["include_conductivity"] = r.include_conductivity;
                if (r.include_conductivity) {
                    const double sigma = r.conductivity.sigma_at(T);
                    j["sigma_prefactor_per_s"] = r.conductivity.prefactor;
                    j["activation_K"] = r.conductivity.activation;
                    j["sigma_at_T_per_s"] = sigma;
                    j["hbar_4pi_sigma_at_T_eV"] = conductivity_to_energy(sigma);
                }
                if (r.free_carriers) {
                    j["carrier_plasma_frequency_eV"] = r.free_carriers->plasma_frequency;
                    j["carrier_relaxation"] = relaxation_json(r.free_carriers->relaxation, T);
                }
            } else if constexpr (std::is_same_v<R, TabulatedModel>) {
                const auto& kk = *r.transform;
                j["rows"] = kk.table().rows.size();
                j["energy_range_eV"] = {kk.table().rows.front().energy, kk.table().rows.back().energy};
                j["extrapolation"] = to_string(kk.extrapolation().kind);
                j["matching_point_eV"] = kk.matching_point();
                j["tail_amplitude"] = kk.tail_amplitude();
                if (kk.extrapolation().kind != ExtrapolationKind::dielectric_constant) {
                    j["plasma_frequency_eV"] = kk.extrapolation().drude.plasma_frequency;
                    j["matching_mismatch"] = kk.matching_mismatch(T);
                }
            }
        },
        m.response);
    return j;
}

void tabulated_warnings(const ResponseModel& m, double T, std::vector<std::string>& warnings) {
    if (const auto* t = std::get_if<TabulatedModel>(&m.response)) {
        const auto& kk = *t->transform;
        if (kk.extrapolation().kind != ExtrapolationKind::dielectric_constant && kk.mismatch_exceeds_tolerance(T)) {
            warnings.push_back("material '" + m.name + "': extrapolation mismatch " +
                               format_double(kk.matching_mismatch(T)) + " at the first table point exceeds " +
                               format_double(kk.extrapolation().mismatch_tolerance));
        }
    }
}

// Evaluates fn(material, separation) on the full grid; cells in parallel when there
// is more than one, otherwise the Matsubara sum itself runs in parallel.
template <class Fn>
std::vector<std::vector<Cell>> grid_rows(const RunConfig& cfg, Fn fn) {
    const std::size_t nm = cfg.materials.size();
    const std::size_t na = cfg.separations.size();
    std::vector<std::vector<Cell>> rows(nm * na);
    NumericSettings settings = cfg.numeric;
    const bool many = nm * na > 1;
    settings.execution = many ? Execution::serial : Execution::parallel;
    parallel_for(
        static_cast<long>(nm * na),
        [&](long k) {
            const std::size_t im = static_cast<std::size_t>(k) / na;
            const std::size_t ia = static_cast<std::size_t>(k) % na;
            rows[static_cast<std::size_t>(k)] = fn(cfg.materials[im], cfg.separations[ia], settings);
        },
        many ? Execution::parallel : Execution::serial);
    return rows;
}

double observable_value(ObservableKind kind, const EvaluationPoint& p, const ResponseModel& model,
                        const RunConfig& cfg, const NumericSettings& settings) {
    switch (kind) {
        case ObservableKind::pressure:
            return evaluate_quantity(Quantity::pressure, p, model, cfg.geometry, settings);
        case ObservableKind::force_gradient:
            return evaluate_quantity(Quantity::force_gradient, p, model, cfg.geometry, settings);
        case ObservableKind::force: return evaluate_quantity(Quantity::force, p, model, cfg.geometry, settings);
        case ObservableKind::force_difference:
            return evaluate_quantity(Quantity::force, p, model, cfg.geometry, settings) -
                   evaluate_quantity(Quantity::force, p, *cfg.reference, cfg.geometry, settings);
    }
    return 0.0;
}

RunOutput run_compare(const RunConfig& cfg) {
    RunOutput out;
    const MeasurementSet data = load_measurements_file(cfg.data_path, cfg.observable, cfg.confidence);
    std::vector<double> grid = cfg.prediction_grid;
    const bool interpolated = !grid.empty();
    if (!interpolated) {
        for (const auto& row : data.rows) {
            grid.push_back(row.separation);
        }
    }
    const double T = cfg.temperatures.front();
    std::vector<PredictionSeries> series(cfg.materials.size());
    NumericSettings settings = cfg.numeric;
    settings.execution = Execution::serial;
    const std::size_t ng = grid.size();
    for (std::size_t m = 0; m < cfg.materials.size(); ++m) {
        series[m] = {cfg.materials[m].name, grid, std::vector<double>(ng)};
    }
    parallel_for(
        static_cast<long>(cfg.materials.size() * ng),
        [&](long k) {
            const std::size_t m = static_cast<std::size_t>(k) / ng;
            const std::size_t i = static_cast<std::size_t>(k) % ng;
            series[m].values[i] = observable_value(cfg.observable, {grid[i], T}, cfg.materials[m], cfg, settings);
        },
        Execution::parallel);
    const ComparisonReport report = compare(data, series, cfg.threshold);
    out.table.columns = {"model",      "separation_um",       "datum",     "total_error", "prediction",
                         "interpolation_error", "deviation", "consistent",  "fraction_consistent", "verdict"};
    ojson verdicts = ojson::object();
    for (const auto& mc : report.models) {
        for (const auto& p : mc.points) {
            out.table.rows.push_back({mc.model, p.separation, p.datum, p.total_error, p.prediction,
                                      p.interpolation_error, p.deviation, p.consistent, mc.fraction_consistent,
                                      std::string(to_string(mc.verdict))});
        }
        verdicts[mc.model] = {{"fraction_consistent", mc.fraction_consistent}, {"verdict", to_string(mc.verdict)}};
    }
    out.metadata["observable"] = to_string(data.kind);
    out.metadata["confidence_level_percent"] = data.confidence_level;
    out.metadata["threshold"] = report.threshold;
    out.metadata["temperature_K"] = T;
    out.metadata["interpolated"] = interpolated;
    out.metadata["models"] = verdicts;
    if (interpolated) {
        out.warnings.push_back("predictions interpolated (cubic in log a) from a " + std::to_string(ng) +
                               "-point grid onto the data separations");
    }
    return out;
}

}  // namespace

RunOutput execute(const RunConfig& cfg) {
    RunOutput out;
    out.warnings = cfg.warnings;
    const double T = cfg.temperatures.front();
    for (const auto& m : cfg.materials) {
        tabulated_warnings(m, T, out.warnings);
    }
    auto advisory = [&](double a) { return cfg.geometry ? pfa_advisory(a, *cfg.geometry) : false; };

    switch (cfg.command) {
        case Command::pressure:
            out.table.columns = {"material",       "separation_um",    "temperature_K",  "pressure_eV_per_um3",
                                 "pressure_Pa",    "terms_used",       "quadrature_error", "truncation_error"};
            out.table.rows = grid_rows(cfg, [&](const ResponseModel& m, double a, const NumericSettings& s) {
                const PressureResult r = T == 0.0 ? pressure_zero_temperature(a, m, s)
                                                  : pressure_matsubara({a, T}, m, s);
                return std::vector<Cell>{m.name,         a,           T, r.pressure, pressure_to_pascal(r.pressure),
                                         r.terms_used, r.quadrature_error, r.truncation_error};
            });
            break;
        case Command::thermal_correction:
            out.table.columns = {"material",           "separation_um",       "temperature_K",
                                 "delta_P_eV_per_um3", "delta_P_Pa",          "relative",
                                 "pressure_T_eV_per_um3", "pressure_0_eV_per_um3"};
            out.table.rows = grid_rows(cfg, [&](const ResponseModel& m, double a, const NumericSettings& s) {
                const ThermalCorrection c = thermal_correction({a, T}, m, s);
                return std::vector<Cell>{m.name,     a, T, c.absolute, pressure_to_pascal(c.absolute), c.relative,
                                         c.finite_temperature.pressure, c.zero_temperature.pressure};
            });
            break;
        case Command::gradient:
            out.table.columns = {"material", "separation_um", "temperature_K", "radius_um", "gradient_eV_per_um2",
                                 "pfa_advisory"};
            out.table.rows = grid_rows(cfg, [&](const ResponseModel& m, double a, const NumericSettings& s) {
                return std::vector<Cell>{m.name, a, T, cfg.geometry->radius,
                                         pfa_gradient({a, T}, m, *cfg.geometry, s), advisory(a)};
            });
            break;
        case Command::force:
            out.table.columns = {"material", "separation_um", "temperature_K", "radius_um", "force_eV_per_um",
                                 "pfa_advisory"};
            out.table.rows = grid_rows(cfg, [&](const ResponseModel& m, double a, const NumericSettings& s) {
                return std::vector<Cell>{m.name, a, T, cfg.geometry->radius, pfa_force({a, T}, m, *cfg.geometry, s),
                                         advisory(a)};
            });
            break;
        case Command::free_energy:
            out.table.columns = {"material", "separation_um", "temperature_K", "free_energy_eV_per_um2",
                                 "terms_used"};
            out.table.rows = grid_rows(cfg, [&](const ResponseModel& m, double a, const NumericSettings& s) {
                const FreeEnergyResult f =
                    T == 0.0 ? free_energy_zero_temperature(a, m, s) : free_energy({a, T}, m, s);
                return std::vector<Cell>{m.name, a, T, f.free_energy, f.terms_used};
            });
            break;
        case Command::entropy: {
            EntropySettings es = cfg.entropy;
            es.numeric = cfg.numeric;
            es.execution = Execution::parallel;
            const double a = cfg.separations.front();
            const EntropyCurve curve = entropy_curve(a, cfg.materials.front(), cfg.temperatures, es);
            out.table.columns = {"temperature_K", "entropy_eV_per_K_um2", "step_K", "noise_limited",
                                 "limit_estimate", "classification"};
            for (const auto& s : curve.samples) {
                out.table.rows.push_back({s.temperature, s.entropy, s.step, s.noise_limited, curve.limit_estimate,
                                          std::string(to_string(curve.classification))});
            }
            out.metadata["material"] = cfg.materials.front().name;
            out.metadata["separation_um"] = a;
            out.metadata["limit_estimate"] = curve.limit_estimate;
            out.metadata["tolerance"] = curve.tolerance;
            out.metadata["classification"] = to_string(curve.classification);
            long noisy = 0;
            for (const auto& s : curve.samples) {
                noisy += s.noise_limited ? 1 : 0;
            }
            if (noisy > 0) {
                out.warnings.push_back(std::to_string(noisy) +
                                       " entropy samples are limited by round-off noise (flagged in noise_limited)");
            }
            break;
        }
        case Command::curve: {
            CurveRequest req;
            req.quantity = cfg.quantity;
            req.models = cfg.materials;
            req.separations = cfg.separations;
            req.temperature = T;
            req.geometry = cfg.geometry;
            req.settings = cfg.numeric;
            const CurveTable table = curve(req);
            out.table.columns = {"separation_um"};
            for (const auto& c : table.columns) {
                out.table.columns.push_back(c);
            }
            ojson errors = ojson::array();
            for (std::size_t r = 0; r < table.separations.size(); ++r) {
                std::vector<Cell> row{table.separations[r]};
                for (std::size_t c = 0; c < table.columns.size(); ++c) {
                    const CurveCell& cell = table.cells[r][c];
                    row.push_back(cell.ok ? Cell{cell.value} : Cell{Missing{}});
                    if (!cell.ok) {
                        errors.push_back({{"separation_um", table.separations[r]},
                                          {"model", table.columns[c]},
                                          {"error", cell.error}});
                    }
                }
                out.table.rows.push_back(std::move(row));
            }
            out.metadata["quantity"] = to_string(cfg.quantity);
            out.metadata["temperature_K"] = T;
            out.metadata["cell_errors"] = errors;
            if (!errors.empty()) {
                out.warnings.push_back(std::to_string(errors.size()) + " curve cells failed (marked NA)");
            }
            break;
        }
        case Command::compare: {
            RunOutput c = run_compare(cfg);
            c.warnings.insert(c.warnings.begin(), out.warnings.begin(), out.warnings.end());
            return c;
        }
        case Command::kk_transform: {
            const auto& kk = *std::get<TabulatedModel>(cfg.tabulated->response).transform;
            tabulated_warnings(*cfg.tabulated, T, out.warnings);
            out.table.columns = {"xi_eV", "eps_imag"};
            std::vector<double> eps(cfg.frequencies.size());
            parallel_for(
                static_cast<long>(eps.size()),
                [&](long i) { eps[static_cast<std::size_t>(i)] = kk.eps_imag(cfg.frequencies[static_cast<std::size_t>(i)], T); },
                Execution::parallel);
            for (std::size_t i = 0; i < eps.size(); ++i) {
                out.table.rows.push_back({cfg.frequencies[i], eps[i]});
            }
            out.metadata["material"] = describe_material(*cfg.tabulated, T);
            out.metadata["temperature_K"] = T;
            break;
        }
        case Command::diff_force: {
            const auto rows = differential_force(cfg.separations, T, cfg.materials[0], cfg.materials[1],
                                                 *cfg.geometry, cfg.numeric);
            out.table.columns = {"separation_um", "force_a_eV_per_um", "force_b_eV_per_um", "difference_eV_per_um",
                                 "pfa_advisory"};
            for (const auto& r : rows) {
                out.table.rows.push_back({r.separation, r.force_a, r.force_b, r.difference, advisory(r.separation)});
            }
            out.metadata["state_a"] = cfg.materials[0].name;
            out.metadata["state_b"] = cfg.materials[1].name;
            out.metadata["temperature_K"] = T;
            break;
        }
    }
    return out;
}

std::string format_csv(const Table& table) {
    std::string s;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        s += (i ? "," : "") + csv_escape(table.columns[i]);
    }
    s += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::visit(
                [](const auto& v) -> std::string {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, Missing>) {
                        return "NA";
                    } else if constexpr (std::is_same_v<T, double>) {
                        return format_double(v);
                    } else if constexpr (std::is_same_v<T, long>) {
                        return std::to_string(v);
                    } else if constexpr (std::is_same_v<T, bool>) {
                        return v ? "true" : "false";
                    } else {
                        return csv_escape(v);
                    }
                },
                row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string format_json(const RunConfig& cfg, const RunOutput& output) {
    ojson rows = ojson::array();
    for (const auto& row : output.table.rows) {
        ojson r = ojson::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            r[output.table.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(r));
    }
    ojson j{{"schema_version", output_schema_version},
            {"command", to_string(cfg.command)},
            {"columns", output.table.columns},
            {"rows", rows},
            {"metadata", output.metadata},
            {"warnings", output.warnings}};
    return j.dump(2) + "\n";
}

ojson make_manifest(const RunConfig& cfg, const RunOutput& output) {
    ojson config = ojson::object();
    for (const auto& [section, keys] : cfg.source) {
        ojson k = ojson::object();
        for (const auto& [key, value] : keys) {
            k[key] = value;
        }
        config[section] = k;
    }
    ojson materials = ojson::array();
    const double T = cfg.temperatures.front();
    for (const auto& m : cfg.materials) {
        materials.push_back(describe_material(m, T));
    }
    if (cfg.tabulated) {
        materials.push_back(describe_material(*cfg.tabulated, T));
    }
    if (cfg.reference) {
        materials.push_back(describe_material(*cfg.reference, T));
    }
    const NumericSettings& n = cfg.numeric;
    return {{"schema_version", output_schema_version},
            {"library_version", library_version},
            {"command", to_string(cfg.command)},
            {"config", config},
            {"resolved",
             {{"materials", materials},
              {"separations_um", cfg.separations},
              {"temperatures_K", cfg.temperatures},
              {"radius_um", cfg.geometry ? ojson(cfg.geometry->radius) : ojson(nullptr)},
              {"numeric",
               {{"truncation_tol", n.truncation_tol},
                {"consecutive_small_terms", n.consecutive_small_terms},
                {"max_terms", n.max_terms},
                {"quadrature_tol", n.quadrature_tol},
                {"impedance_tol", n.impedance_tol},
                {"frequency_tol", n.frequency_tol},
                {"entropy_step_K", cfg.entropy.step},
                {"entropy_tolerance", cfg.entropy.tolerance_fraction}}}}},
            {"output",
             {{"path", cfg.output_path.empty() ? ojson(nullptr) : ojson(cfg.output_path)},
              {"format", cfg.format == OutputFormat::csv ? "csv" : "json"},
              {"rows", output.table.rows.size()}}},
            {"metadata", output.metadata},
            {"warnings", output.warnings}};
}

ConfigSections config_from_manifest(const nlohmann::json& manifest) {
    if (!manifest.is_object() || !manifest.contains("config") || !manifest["config"].is_object()) {
        throw ConfigError("manifest has no 'config' object");
    }
    ConfigSections sections;
    for (const auto& [section, keys] : manifest["config"].items()) {
        if (!keys.is_object()) {
            throw ConfigError("manifest config section '" + section + "' is not an object");
        }
        for (const auto& [k, v] : keys.items()) {
            if (!v.is_string()) {
                throw ConfigError("manifest config value " + section + "." + k + " is not a string");
            }
            sections[section][k] = v.get<std::string>();
        }
    }
    return sections;
}

ConfigSections config_from_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open manifest '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("manifest '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_manifest(j);
}

ojson diagnostics(const ConfigSections& sections) {
    ojson d{{"valid", true}, {"errors", ojson::array()}, {"warnings", ojson::array()}};
    try {
        const RunConfig cfg = resolve_config(sections);
        const double T = cfg.temperatures.front();
        std::vector<std::string> warnings = cfg.warnings;
        ojson materials = ojson::array();
        for (const auto& m : cfg.materials) {
            materials.push_back(describe_material(m, T));
            tabulated_warnings(m, T, warnings);
        }
        if (cfg.tabulated) {
            materials.push_back(describe_material(*cfg.tabulated, T));
            tabulated_warnings(*cfg.tabulated, T, warnings);
        }
        ojson regimes = ojson::array();
        for (double a : cfg.separations) {
            const auto r = classify_regime({a, T});
            regimes.push_back({{"separation_um", a},
                               {"effective_temperature_K", r.effective_temperature},
                               {"regime", to_string(r.regime)}});
        }
        d["command"] = to_string(cfg.command);
        d["materials"] = materials;
        d["separations_um"] = cfg.separations;
        d["temperatures_K"] = cfg.temperatures;
        if (cfg.geometry) {
            d["radius_um"] = cfg.geometry->radius;
        }
        d["unit_conversions"] = {{"Pa_per_eV_um3", PhysicalConstants::pressure_conversion},
                                 {"hbar_c_eV_um", hbar_c},
                                 {"k_B_eV_per_K", k_boltzmann},
                                 {"thermal_regimes", regimes}};
        d["warnings"] = warnings;
    } catch (const std::exception& e) {
        d["valid"] = false;
        d["errors"].push_back(e.what());
    }
    return d;
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const ConfigError*>(&error) || dynamic_cast<const DomainError*>(&error)) {
        return exit_config;
    }
    if (dynamic_cast<const NumericError*>(&error)) {
        return exit_numeric;
    }
    if (dynamic_cast<const IngestionError*>(&error) || dynamic_cast<const std::ios_base::failure*>(&error) ||
        dynamic_cast<const std::filesystem::filesystem_error*>(&error)) {
        return exit_io;
    }
    return exit_failure;
}

ojson error_record(const std::exception& error) {
    const int code = exit_code_for(error);
    const char* kind = code == exit_config    ? "config"
                       : code == exit_numeric ? "numeric"
                       : code == exit_io      ? "io"
                                              : "internal";
    ojson j{{"error", {{"kind", kind}, {"exit_code", code}, {"message", error.what()}}}};
    if (const auto* ing = dynamic_cast<const IngestionError*>(&error); ing && ing->row() > 0) {
        j["error"]["row"] = ing->row();
    }
    return j;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::ios_base::failure("cannot write '" + path + "'");
    }
    f << content;
    if (!f) {
        throw std::ios_base::failure("write to '" + path + "' failed");
    }
}

}  // namespace

int run_sections(const ConfigSections& sections, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = resolve_config(sections);
        if (cfg.threads > 0) {
            set_thread_count(cfg.threads);
        }
        const RunOutput output = execute(cfg);
        const std::string body =
            cfg.format == OutputFormat::csv ? format_csv(output.table) : format_json(cfg, output);
        if (cfg.output_path.empty()) {
            out << body;
        } else {
            write_file(cfg.output_path, body);
        }
        if (!cfg.manifest_path.empty()) {
            write_file(cfg.manifest_path, make_manifest(cfg, output).dump(2) + "\n");
        }
        for (const auto& w : output.warnings) {
            err << "warning: " << w << '\n';
        }
        return exit_ok;
    } catch (const std::exception& e) {
        err << error_record(e).dump() << '\n';
        return exit_code_for(e);
    }
}

}  // namespace casimir

#include "casimir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "csv_util.hpp"

namespace casimir {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_geometry(const SphereGeometry& g) {
    if (!(g.radius > 0.0) || !std::isfinite(g.radius)) {
        throw DomainError("sphere radius must be positive");
    }
}

double pressure_at(const EvaluationPoint& p, const ResponseModel& model, const NumericSettings& settings) {
    if (p.temperature == 0.0) {
        return pressure_zero_temperature(p.separation, model, settings).pressure;
    }
    return pressure_matsubara(p, model, settings).pressure;
}

double free_energy_at(const EvaluationPoint& p, const ResponseModel& model, const NumericSettings& settings) {
    if (p.temperature == 0.0) {
        return free_energy_zero_temperature(p.separation, model, settings).free_energy;
    }
    return free_energy(p, model, settings).free_energy;
}

const SphereGeometry& need_geometry(const std::optional<SphereGeometry>& g, Quantity q) {
    if (!g) {
        throw ConfigError(std::string("quantity '") + to_string(q) + "' needs a sphere radius");
    }
    return *g;
}

// Lagrange polynomial through (x[i], y[i]) for i in idx, evaluated at t.
double lagrange(const std::vector<double>& x, const std::vector<double>& y, const std::vector<std::size_t>& idx,
                double t) {
    double sum = 0.0;
    for (std::size_t i : idx) {
        double w = 1.0;
        for (std::size_t j : idx) {
            if (j != i) {
                w *= (t - x[j]) / (x[i] - x[j]);
            }
        }
        sum += w * y[i];
    }
    return sum;
}

}  // namespace

bool pfa_advisory(double separation, const SphereGeometry& geometry) {
    return separation / geometry.radius > pfa_advisory_ratio;
}

double pfa_gradient_from_pressure(double pressure, const SphereGeometry& geometry) {
    require_geometry(geometry);
    return -two_pi * geometry.radius * pressure;
}

double pfa_pressure_from_gradient(double gradient, const SphereGeometry& geometry) {
    require_geometry(geometry);
    return -gradient / (two_pi * geometry.radius);
}

double pfa_gradient(const EvaluationPoint& point, const ResponseModel& model, const SphereGeometry& geometry,
                    const NumericSettings& settings) {
    require_geometry(geometry);
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    return pfa_gradient_from_pressure(pressure_at(p, model, settings), geometry);
}

double pfa_force(const EvaluationPoint& point, const ResponseModel& model, const SphereGeometry& geometry,
                 const NumericSettings& settings) {
    require_geometry(geometry);
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    return two_pi * geometry.radius * free_energy_at(p, model, settings);
}

std::vector<DifferentialForceRow> differential_force(const std::vector<double>& separations, double temperature,
                                                     const ResponseModel& state_a, const ResponseModel& state_b,
                                                     const SphereGeometry& geometry,
                                                     const NumericSettings& settings) {
    require_geometry(geometry);
    std::vector<DifferentialForceRow> rows(separations.size());
    NumericSettings inner = settings;
    inner.execution = Execution::serial;
    parallel_for(
        static_cast<long>(separations.size()),
        [&](long i) {
            const EvaluationPoint p{separations[static_cast<std::size_t>(i)], temperature};
            const double fa = pfa_force(p, state_a, geometry, inner);
            const double fb = pfa_force(p, state_b, geometry, inner);
            rows[static_cast<std::size_t>(i)] = {p.separation, fa, fb, fa - fb};
        },
        settings.execution);
    return rows;
}

const char* to_string(Quantity quantity) {
    switch (quantity) {
        case Quantity::pressure: return "pressure";
        case Quantity::thermal_correction: return "thermal-correction";
        case Quantity::relative_thermal_correction: return "relative-thermal-correction";
        case Quantity::free_energy: return "free-energy";
        case Quantity::force_gradient: return "gradient";
        case Quantity::force: return "force";
    }
    return "?";
}

Quantity parse_quantity(const std::string& text) {
    for (Quantity q : {Quantity::pressure, Quantity::thermal_correction, Quantity::relative_thermal_correction,
                       Quantity::free_energy, Quantity::force_gradient, Quantity::force}) {
        if (text == to_string(q)) {
            return q;
        }
    }
    throw ConfigError("unknown quantity '" + text +
                      "' (pressure, thermal-correction, relative-thermal-correction, free-energy, gradient, force)");
}

SweepSpec SweepSpec::parse(const std::string& text, bool logarithmic) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        parts.push_back(detail::trim(part));
    }
    auto number = [&](const std::string& s) {
        try {
            return detail::parse_number(s, 0, "sweep");
        } catch (const IngestionError&) {
            throw ConfigError("bad sweep '" + text + "': cannot parse '" + s + "'");
        }
    };
    SweepSpec spec{};
    spec.logarithmic = logarithmic;
    if (parts.size() == 1) {
        spec.start = spec.stop = number(parts[0]);
        spec.count = 1;
    } else if (parts.size() == 3) {
        spec.start = number(parts[0]);
        spec.stop = number(parts[1]);
        const double count = number(parts[2]);
        if (count < 1.0 || count != std::floor(count) || count > 1e6) {
            throw ConfigError("bad sweep '" + text + "': count must be a positive integer");
        }
        spec.count = static_cast<int>(count);
    } else {
        throw ConfigError("bad sweep '" + text + "': expected value or start:stop:count");
    }
    if (spec.count > 1 && spec.stop < spec.start) {
        throw ConfigError("bad sweep '" + text + "': stop below start");
    }
    if (logarithmic && !(spec.start > 0.0)) {
        throw ConfigError("bad sweep '" + text + "': log spacing needs positive bounds");
    }
    return spec;
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    if (count == 1) {
        v[0] = start;
        return v;
    }
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        v[static_cast<std::size_t>(i)] =
            logarithmic ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                        : start + f * (stop - start);
    }
    v.front() = start;
    v.back() = stop;
    return v;
}

double evaluate_quantity(Quantity quantity, const EvaluationPoint& point, const ResponseModel& model,
                         const std::optional<SphereGeometry>& geometry, const NumericSettings& settings) {
    const EvaluationPoint p = make_point(point.separation, point.temperature);
    switch (quantity) {
        case Quantity::pressure: return pressure_at(p, model, settings);
        case Quantity::thermal_correction: return thermal_correction(p, model, settings).absolute;
        case Quantity::relative_thermal_correction: return thermal_correction(p, model, settings).relative;
        case Quantity::free_energy: return free_energy_at(p, model, settings);
        case Quantity::force_gradient: return pfa_gradient(p, model, need_geometry(geometry, quantity), settings);
        case Quantity::force: return pfa_force(p, model, need_geometry(geometry, quantity), settings);
    }
    throw DomainError("unknown quantity");
}

CurveTable curve(const CurveRequest& request) {
    if (request.models.empty()) {
        throw ConfigError("curve: no models");
    }
    if (request.separations.empty()) {
        throw ConfigError("curve: no separations");
    }
    if (request.quantity == Quantity::force_gradient || request.quantity == Quantity::force) {
        need_geometry(request.geometry, request.quantity);
    }
    CurveTable table;
    table.quantity = request.quantity;
    table.separations = request.separations;
    for (const auto& m : request.models) {
        table.columns.push_back(m.name);
    }
    const std::size_t rows = request.separations.size();
    const std::size_t cols = request.models.size();
    table.cells.assign(rows, std::vector<CurveCell>(cols));
    NumericSettings inner = request.settings;
    inner.execution = Execution::serial;
    parallel_for(
        static_cast<long>(rows * cols),
        [&](long k) {
            const std::size_t r = static_cast<std::size_t>(k) / cols;
            const std::size_t c = static_cast<std::size_t>(k) % cols;
            CurveCell& cell = table.cells[r][c];
            try {
                cell.value = evaluate_quantity(request.quantity, {request.separations[r], request.temperature},
                                               request.models[c], request.geometry, inner);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
        },
        request.execution);
    return table;
}

const char* to_string(ObservableKind kind) {
    switch (kind) {
        case ObservableKind::pressure: return "pressure";
        case ObservableKind::force_gradient: return "force_gradient";
        case ObservableKind::force: return "force";
        case ObservableKind::force_difference: return "force_difference";
    }
    return "?";
}

ObservableKind parse_observable(const std::string& text) {
    for (ObservableKind k : {ObservableKind::pressure, ObservableKind::force_gradient, ObservableKind::force,
                             ObservableKind::force_difference}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw ConfigError("unknown observable '" + text + "' (pressure, force_gradient, force, force_difference)");
}

MeasurementSet load_measurements(std::istream& in, ObservableKind kind, double confidence_level) {
    if (!(confidence_level > 0.0 && confidence_level < 100.0)) {
        throw ConfigError("confidence level must lie in (0, 100) percent");
    }
    MeasurementSet set;
    set.kind = kind;
    set.confidence_level = confidence_level;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = detail::trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        const auto cells = detail::split_csv(content);
        if (!have_header) {
            if (cells.size() != 3 || cells[0] != "separation_um" || cells[1] != "value" ||
                cells[2] != "total_error") {
                throw IngestionError("expected header 'separation_um,value,total_error'", line_no);
            }
            have_header = true;
            continue;
        }
        if (cells.size() != 3) {
            throw IngestionError("expected 3 columns, got " + std::to_string(cells.size()), line_no);
        }
        MeasurementRow row{detail::parse_number(cells[0], line_no, "separation_um"),
                           detail::parse_number(cells[1], line_no, "value"),
                           detail::parse_number(cells[2], line_no, "total_error")};
        if (!(row.separation > 0.0)) {
            throw IngestionError("separation must be positive", line_no);
        }
        if (!(row.total_error > 0.0)) {
            throw IngestionError("total_error must be positive", line_no);
        }
        if (!set.rows.empty() && !(row.separation > set.rows.back().separation)) {
            throw IngestionError("separations must be strictly ascending", line_no);
        }
        set.rows.push_back(row);
    }
    if (!have_header) {
        throw IngestionError("missing header 'separation_um,value,total_error'");
    }
    if (set.rows.empty()) {
        throw IngestionError("no data rows");
    }
    return set;
}

MeasurementSet load_measurements_file(const std::string& path, ObservableKind kind, double confidence_level) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open measurement file '" + path + "'");
    }
    return load_measurements(in, kind, confidence_level);
}

const char* to_string(Verdict verdict) { return verdict == Verdict::consistent ? "consistent" : "excluded"; }

Interpolated interpolate_log(const PredictionSeries& series, double separation) {
    const auto& a = series.separations;
    const std::size_t n = a.size();
    if (n == 0 || n != series.values.size()) {
        throw DomainError("prediction series '" + series.model + "' is empty or ragged");
    }
    const double lo = a.front();
    const double hi = a.back();
    const double slack = 1e-12 * hi;
    if (separation < lo - slack || separation > hi + slack) {
        throw DomainError("separation outside prediction range");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(a[i] - separation) <= 1e-12 * a[i]) {
            return {series.values[i], 0.0};
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::log(a[i]);
    }
    const double t = std::log(separation);
    // four nodes around t (fewer if the series is short)
    const std::size_t upper = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), separation) - a.begin());
    const std::size_t width = std::min<std::size_t>(4, n);
    std::size_t first = upper >= 2 ? upper - 2 : 0;
    first = std::min(first, n - width);
    std::vector<std::size_t> idx;
    for (std::size_t i = first; i < first + width; ++i) {
        idx.push_back(i);
    }
    const double value = lagrange(x, series.values, idx, t);
    if (idx.size() < 2) {
        return {value, 0.0};
    }
    // node deletion: drop the node farthest from t and compare
    const auto far = std::max_element(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(x[i] - t) < std::abs(x[j] - t);
    });
    std::vector<std::size_t> reduced;
    for (auto it = idx.begin(); it != idx.end(); ++it) {
        if (it != far) {
            reduced.push_back(*it);
        }
    }
    return {value, std::abs(value - lagrange(x, series.values, reduced, t))};
}

ComparisonReport compare(const MeasurementSet& data, const std::vector<PredictionSeries>& predictions,
                         double threshold) {
    if (data.rows.empty()) {
        throw DomainError("compare: empty measurement set");
    }
    if (predictions.empty()) {
        throw DomainError("compare: no prediction series");
    }
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw DomainError("compare: threshold must lie in (0, 1]");
    }
    std::vector<MeasurementRow> rows = data.rows;
    std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) { return l.separation < r.separation; });
    std::vector<PredictionSeries> series = predictions;
    std::sort(series.begin(), series.end(), [](const auto& l, const auto& r) { return l.model < r.model; });

    ComparisonReport report;
    report.threshold = threshold;
    for (auto& s : series) {
        std::vector<std::size_t> order(s.separations.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return s.separations[i] < s.separations[j]; });
        PredictionSeries sorted{s.model, {}, {}};
        for (std::size_t i : order) {
            sorted.separations.push_back(s.separations[i]);
            sorted.values.push_back(s.values.at(i));
        }
        if (sorted.separations.empty()) {
            throw DomainError("compare: prediction series '" + s.model + "' is empty");
        }
        std::ostringstream uncovered;
        std::size_t missing = 0;
        for (const auto& row : rows) {
            const double slack = 1e-12 * sorted.separations.back();
            if (row.separation < sorted.separations.front() - slack ||
                row.separation > sorted.separations.back() + slack) {
                uncovered << (missing++ ? ", " : "") << row.separation;
            }
        }
        if (missing > 0) {
            throw DomainError("compare: model '" + s.model + "' does not cover separations [" + uncovered.str() +
                              "] um");
        }
        ModelComparison mc;
        mc.model = s.model;
        std::size_t good = 0;
        for (const auto& row : rows) {
            const auto pred = interpolate_log(sorted, row.separation);
            const double diff = std::abs(pred.value - row.value);
            const double tol = std::hypot(row.total_error, pred.error);
            const bool ok = diff <= tol;
            good += ok ? 1 : 0;
            mc.points.push_back(
                {row.separation, row.value, row.total_error, pred.value, pred.error, diff / row.total_error, ok});
        }
        mc.fraction_consistent = static_cast<double>(good) / static_cast<double>(rows.size());
        mc.verdict = mc.fraction_consistent >= threshold ? Verdict::consistent : Verdict::excluded;
        report.models.push_back(std::move(mc));
    }
    return report;
}

}  // namespace casimir

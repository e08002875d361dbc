#pragma once

// Sphere-plate observables in the proximity force approximation, figure sweeps,
// differential forces and the measurement comparison harness.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

struct SphereGeometry {
    double radius;  // um
};

inline constexpr double pfa_advisory_ratio = 0.01;

/// True when a/R exceeds the typical-experiment bound 0.01.
bool pfa_advisory(double separation, const SphereGeometry& geometry);

/// F'_sp = -2 pi R P (eV/um^2).
double pfa_gradient_from_pressure(double pressure, const SphereGeometry& geometry);
double pfa_pressure_from_gradient(double gradient, const SphereGeometry& geometry);

double pfa_gradient(const EvaluationPoint& point, const ResponseModel& model, const SphereGeometry& geometry,
                    const NumericSettings& settings = {});

/// F_sp = 2 pi R F(a,T) (eV/um), negative when attractive.
double pfa_force(const EvaluationPoint& point, const ResponseModel& model, const SphereGeometry& geometry,
                 const NumericSettings& settings = {});

struct DifferentialForceRow {
    double separation;
    double force_a;
    double force_b;
    double difference;  // force_a - force_b
};

std::vector<DifferentialForceRow> differential_force(const std::vector<double>& separations, double temperature,
                                                     const ResponseModel& state_a, const ResponseModel& state_b,
                                                     const SphereGeometry& geometry,
                                                     const NumericSettings& settings = {});

enum class Quantity {
    pressure,
    thermal_correction,
    relative_thermal_correction,
    free_energy,
    force_gradient,
    force,
};

const char* to_string(Quantity quantity);
Quantity parse_quantity(const std::string& text);

struct SweepSpec {
    double start;
    double stop;
    int count;
    bool logarithmic = false;

    /// "start:stop:count" or a single value.
    static SweepSpec parse(const std::string& text, bool logarithmic = false);
    std::vector<double> values() const;
};

struct CurveRequest {
    Quantity quantity = Quantity::pressure;
    std::vector<ResponseModel> models;
    std::vector<double> separations;
    double temperature = 300.0;
    std::optional<SphereGeometry> geometry;
    NumericSettings settings;
    Execution execution = Execution::parallel;  // over cells
};

struct CurveCell {
    double value = 0.0;
    bool ok = false;
    std::string error;
};

struct CurveTable {
    Quantity quantity;
    std::vector<double> separations;
    std::vector<std::string> columns;            // model names
    std::vector<std::vector<CurveCell>> cells;   // [row][column]
};

/// One quantity at one point; geometry is required for force observables.
double evaluate_quantity(Quantity quantity, const EvaluationPoint& point, const ResponseModel& model,
                         const std::optional<SphereGeometry>& geometry, const NumericSettings& settings);

CurveTable curve(const CurveRequest& request);

enum class ObservableKind { pressure, force_gradient, force, force_difference };

const char* to_string(ObservableKind kind);
ObservableKind parse_observable(const std::string& text);

struct MeasurementRow {
    double separation;
    double value;
    double total_error;
};

struct MeasurementSet {
    std::vector<MeasurementRow> rows;
    ObservableKind kind = ObservableKind::pressure;
    double confidence_level = 95.0;  // percent, carried through unchanged
};

/// CSV with header `separation_um,value,total_error`; ascending separations, positive errors.
MeasurementSet load_measurements(std::istream& in, ObservableKind kind, double confidence_level);
MeasurementSet load_measurements_file(const std::string& path, ObservableKind kind, double confidence_level);

struct PredictionSeries {
    std::string model;
    std::vector<double> separations;  // ascending
    std::vector<double> values;
};

struct ComparisonPoint {
    double separation;
    double datum;
    double total_error;
    double prediction;
    double interpolation_error;
    double deviation;  // |prediction - datum| / total_error
    bool consistent;
};

enum class Verdict { consistent, excluded };

const char* to_string(Verdict verdict);

struct ModelComparison {
    std::string model;
    std::vector<ComparisonPoint> points;
    double fraction_consistent;
    Verdict verdict;
};

struct ComparisonReport {
    double threshold;
    std::vector<ModelComparison> models;  // sorted by model name
};

/// Cubic interpolation in log a with a node-deletion error estimate.
struct Interpolated {
    double value;
    double error;
};
Interpolated interpolate_log(const PredictionSeries& series, double separation);

/// A point is consistent if |prediction - datum| <= sqrt(total_error^2 + interpolation_error^2);
/// a model is consistent if at least `threshold` of the points are.
ComparisonReport compare(const MeasurementSet& data, const std::vector<PredictionSeries>& predictions,
                         double threshold = 0.95);

}  // namespace casimir

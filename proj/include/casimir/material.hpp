#pragma once

// ResponseModel: the tagged union of permittivity models a plate can carry,
// plus its magnetic permeability.

#include <memory>
#include <string>
#include <variant>

#include "casimir/optical.hpp"
#include "casimir/response.hpp"

namespace casimir {

struct VacuumModel {};
struct IdealMetalModel {};

struct TabulatedModel {
    std::shared_ptr<const KramersKronigTransform> transform;
};

using ResponseVariant = std::variant<VacuumModel, IdealMetalModel, DrudeParams, PlasmaParams, DielectricParams,
                                     TabulatedModel, NonlocalDrudeParams>;

struct ResponseModel {
    std::string name;
    ResponseVariant response;
    PermeabilityModel permeability;
};

/// Short tag of the active alternative: vacuum, ideal-metal, drude, plasma, dielectric, tabulated, nonlocal.
const char* model_kind(const ResponseModel& model);

/// Local models have eps(i xi) independent of the wavevector (everything except nonlocal and ideal metal).
bool is_local(const ResponseModel& model);

/// eps(i xi, T) for a local model; xi > 0.
double local_eps_imag(const ResponseModel& model, double xi, double temperature);

/// True if eps(i xi) at fixed xi changes with T (gamma(T), sigma0(T)).
bool response_depends_on_temperature(const ResponseModel& model);

/// True if the model has a complex real-axis permittivity with strictly positive losses.
bool has_dissipative_real_axis(const ResponseModel& model, double temperature);

/// eps(omega) on the real axis; DomainError unless has_dissipative_real_axis (vacuum gives 1).
std::complex<double> real_axis_eps(const ResponseModel& model, double omega, double temperature);

ResponseModel make_vacuum();
ResponseModel make_ideal_metal();

}  // namespace casimir

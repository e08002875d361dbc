#include "casimir/material.hpp"

#include "casimir/errors.hpp"

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const char* model_kind(const ResponseModel& model) {
    return std::visit(overloaded{[](const VacuumModel&) { return "vacuum"; },
                                 [](const IdealMetalModel&) { return "ideal-metal"; },
                                 [](const DrudeParams&) { return "drude"; },
                                 [](const PlasmaParams&) { return "plasma"; },
                                 [](const DielectricParams&) { return "dielectric"; },
                                 [](const TabulatedModel&) { return "tabulated"; },
                                 [](const NonlocalDrudeParams&) { return "nonlocal"; }},
                      model.response);
}

bool is_local(const ResponseModel& model) {
    return !std::holds_alternative<NonlocalDrudeParams>(model.response) &&
           !std::holds_alternative<IdealMetalModel>(model.response);
}

double local_eps_imag(const ResponseModel& model, double xi, double temperature) {
    return std::visit(
        overloaded{[&](const VacuumModel&) -> double {
                       if (!(xi > 0.0)) {
                           throw DomainError("local_eps_imag: frequency must be positive");
                       }
                       return 1.0;
                   },
                   [&](const DrudeParams& p) { return drude_eps_imag(p, xi, temperature); },
                   [&](const PlasmaParams& p) { return plasma_eps_imag(p, xi); },
                   [&](const DielectricParams& p) { return dielectric_eps_imag(p, xi, temperature); },
                   [&](const TabulatedModel& p) { return p.transform->eps_imag(xi, temperature); },
                   [&](const auto&) -> double {
                       throw DomainError(std::string("local_eps_imag: model '") + model_kind(model) +
                                         "' has no local permittivity");
                   }},
        model.response);
}

bool response_depends_on_temperature(const ResponseModel& model) {
    return std::visit(
        overloaded{[](const DrudeParams& p) { return p.relaxation.temperature_dependent(); },
                   [](const NonlocalDrudeParams& p) { return p.base.relaxation.temperature_dependent(); },
                   [](const DielectricParams& p) {
                       const bool sigma = p.include_conductivity && p.conductivity.prefactor > 0.0 &&
                                          p.conductivity.activation != 0.0;
                       const bool carriers = p.free_carriers && p.free_carriers->relaxation.temperature_dependent();
                       return sigma || carriers;
                   },
                   [](const TabulatedModel& p) {
                       return p.transform->extrapolation().kind == ExtrapolationKind::drude &&
                              p.transform->extrapolation().drude.relaxation.temperature_dependent();
                   },
                   [](const auto&) { return false; }},
        model.response);
}

bool has_dissipative_real_axis(const ResponseModel& model, double temperature) {
    return std::visit(overloaded{[](const VacuumModel&) { return true; },
                                 [&](const DrudeParams& p) { return relaxation_at(p.relaxation, temperature) > 0.0; },
                                 [&](const DielectricParams& p) {
                                     const bool carriers =
                                         !p.free_carriers || relaxation_at(p.free_carriers->relaxation, temperature) > 0.0;
                                     return p.optical.dissipative() && carriers;
                                 },
                                 [](const auto&) { return false; }},
                      model.response);
}

std::complex<double> real_axis_eps(const ResponseModel& model, double omega, double temperature) {
    if (!has_dissipative_real_axis(model, temperature)) {
        throw DomainError(std::string("real-frequency evaluation needs a dissipative local model (Drude with "
                                      "gamma > 0, or dielectric with damped oscillators); got '") +
                          model_kind(model) + "'");
    }
    return std::visit(overloaded{[&](const DrudeParams& p) { return drude_eps_real_axis(p, omega, temperature); },
                                 [&](const DielectricParams& p) { return dielectric_eps_real_axis(p, omega, temperature); },
                                 [](const auto&) { return std::complex<double>(1.0, 0.0); }},
                      model.response);
}

ResponseModel make_vacuum() { return {"vacuum", VacuumModel{}, {}}; }

ResponseModel make_ideal_metal() { return {"ideal-metal", IdealMetalModel{}, {}}; }

}  // namespace casimir

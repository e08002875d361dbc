#pragma once

// Tabulated optical data (complex refractive index vs photon energy) and its
// Kramers-Kronig transform to the imaginary frequency axis.

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/response.hpp"

namespace casimir {

struct OpticalRow {
    double energy;  // hbar omega, eV
    double n;
    double k;

    double eps_imag() const { return 2.0 * n * k; }
    double eps_real() const { return n * n - k * k; }
};

struct OpticalTable {
    std::vector<OpticalRow> rows;
};

/// CSV with header `energy_eV,n,k`. Energies strictly increasing, n and k >= 0.
OpticalTable load_optical_table(std::istream& in);
OpticalTable load_optical_table_file(const std::string& path);

enum class ExtrapolationKind { drude, plasma, dielectric_constant };

struct ExtrapolationSpec {
    ExtrapolationKind kind = ExtrapolationKind::drude;
    DrudeParams drude{9.0, {}};   // used by kind == drude; plasma uses drude.plasma_frequency
    double mismatch_tolerance = 0.2;
};

const char* to_string(ExtrapolationKind kind);

/// Precomputed Kramers-Kronig transform
///   eps(i xi) = 1 + (2/pi) int_0^inf w Im eps(w) / (w^2 + xi^2) dw
/// split into the analytic low-frequency model below the first tabulated
/// energy, log-log interpolated table data, and an A/w^3 tail fitted to the
/// last decade of the table.
class KramersKronigTransform {
public:
    KramersKronigTransform(OpticalTable table, ExtrapolationSpec extrapolation);

    /// xi > 0; xi = 0 is accepted only for the dielectric_constant extrapolation.
    double eps_imag(double xi, double temperature) const;

    /// Extrapolated Im eps at the matching point relative to the table value.
    double matching_mismatch(double temperature) const;
    bool mismatch_exceeds_tolerance(double temperature) const;

    double matching_point() const { return table_.rows.front().energy; }
    double tail_amplitude() const { return tail_amplitude_; }
    const OpticalTable& table() const { return table_; }
    const ExtrapolationSpec& extrapolation() const { return extrapolation_; }

private:
    double extrapolated_part(double xi, double gamma) const;
    double table_part(double xi) const;
    double tail_part(double xi) const;
    double interpolate(std::size_t i, double log_w) const;

    OpticalTable table_;
    ExtrapolationSpec extrapolation_;
    std::vector<double> log_energy_;
    std::vector<double> log_eps_;  // NaN where Im eps == 0
    double tail_amplitude_ = 0.0;
};

}  // namespace casimir

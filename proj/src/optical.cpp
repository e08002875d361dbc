#include "casimir/optical.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "csv_util.hpp"

namespace casimir {

using detail::parse_number;
using detail::split_csv;
using detail::trim;

OpticalTable load_optical_table(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    OpticalTable table;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        const auto cells = split_csv(content);
        if (!have_header) {
            if (cells.size() != 3 || cells[0] != "energy_eV" || cells[1] != "n" || cells[2] != "k") {
                throw IngestionError("expected header 'energy_eV,n,k'", line_no);
            }
            have_header = true;
            continue;
        }
        if (cells.size() != 3) {
            throw IngestionError("expected 3 columns, got " + std::to_string(cells.size()), line_no);
        }
        OpticalRow row{parse_number(cells[0], line_no, "energy_eV"), parse_number(cells[1], line_no, "n"),
                       parse_number(cells[2], line_no, "k")};
        if (!(row.energy > 0.0)) {
            throw IngestionError("photon energy must be positive", line_no);
        }
        if (row.n < 0.0 || row.k < 0.0) {
            throw IngestionError("n and k must be non-negative", line_no);
        }
        if (!table.rows.empty() && row.energy <= table.rows.back().energy) {
            throw IngestionError(row.energy == table.rows.back().energy ? "duplicate photon energy"
                                                                        : "photon energies must be increasing",
                                 line_no);
        }
        table.rows.push_back(row);
    }
    if (!have_header || table.rows.empty()) {
        throw IngestionError("no data rows");
    }
    return table;
}

OpticalTable load_optical_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestionError("cannot open optical table '" + path + "'");
    }
    return load_optical_table(in);
}

const char* to_string(ExtrapolationKind kind) {
    switch (kind) {
        case ExtrapolationKind::drude: return "drude";
        case ExtrapolationKind::plasma: return "plasma";
        case ExtrapolationKind::dielectric_constant: break;
    }
    return "dielectric_constant";
}

KramersKronigTransform::KramersKronigTransform(OpticalTable table, ExtrapolationSpec extrapolation)
    : table_(std::move(table)), extrapolation_(extrapolation) {
    if (table_.rows.size() < 2) {
        throw IngestionError("optical table needs at least two rows for interpolation");
    }
    log_energy_.reserve(table_.rows.size());
    log_eps_.reserve(table_.rows.size());
    for (const auto& row : table_.rows) {
        log_energy_.push_back(std::log(row.energy));
        const double im = row.eps_imag();
        log_eps_.push_back(im > 0.0 ? std::log(im) : std::numeric_limits<double>::quiet_NaN());
    }
    // A / w^3 tail from the geometric mean of Im eps * w^3 over the last decade.
    const double w_end = table_.rows.back().energy;
    double log_sum = 0.0;
    int count = 0;
    bool any_zero = false;
    for (const auto& row : table_.rows) {
        if (row.energy < w_end / 10.0) {
            continue;
        }
        const double im = row.eps_imag();
        if (im > 0.0) {
            log_sum += std::log(im) + 3.0 * std::log(row.energy);
            ++count;
        } else {
            any_zero = true;
        }
    }
    tail_amplitude_ = (count > 0 && !any_zero) ? std::exp(log_sum / count) : 0.0;
}

double KramersKronigTransform::interpolate(std::size_t i, double log_w) const {
    const double t = (log_w - log_energy_[i]) / (log_energy_[i + 1] - log_energy_[i]);
    if (std::isnan(log_eps_[i]) || std::isnan(log_eps_[i + 1])) {
        const double lo = table_.rows[i].eps_imag();
        const double hi = table_.rows[i + 1].eps_imag();
        return lo + t * (hi - lo);
    }
    return std::exp(log_eps_[i] + t * (log_eps_[i + 1] - log_eps_[i]));
}

double KramersKronigTransform::extrapolated_part(double xi, double gamma) const {
    const double m = matching_point();
    const double wp = extrapolation_.drude.plasma_frequency;
    const double wp2 = wp * wp;
    switch (extrapolation_.kind) {
        case ExtrapolationKind::dielectric_constant:
            return 0.0;
        case ExtrapolationKind::plasma:
            // Im eps carries only the delta function at w = 0.
            return wp2 / (xi * xi);
        case ExtrapolationKind::drude:
            break;
    }
    if (gamma == 0.0) {
        return wp2 / (xi * xi);
    }
    // (2/pi) int_0^m wp^2 gamma / ((w^2 + gamma^2)(w^2 + xi^2)) dw
    if (std::abs(xi - gamma) > 1e-4 * gamma) {
        const double bracket = std::atan(m / gamma) / gamma - std::atan(m / xi) / xi;
        return (2.0 / std::numbers::pi) * wp2 * gamma / (xi * xi - gamma * gamma) * bracket;
    }
    auto integrand = [&](double w) { return wp2 * gamma / ((w * w + gamma * gamma) * (w * w + xi * xi)); };
    return (2.0 / std::numbers::pi) * quad::integrate(integrand, 0.0, m, {1e-12, 0.0, 2000, true}).value;
}

double KramersKronigTransform::table_part(double xi) const {
    const double xi2 = xi * xi;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < table_.rows.size(); ++i) {
        if (table_.rows[i].eps_imag() == 0.0 && table_.rows[i + 1].eps_imag() == 0.0) {
            continue;
        }
        // Substitute u = ln w, so w dw = w^2 du.
        auto integrand = [&](double u) {
            const double w2 = std::exp(2.0 * u);
            return w2 * interpolate(i, u) / (w2 + xi2);
        };
        total += quad::integrate(integrand, log_energy_[i], log_energy_[i + 1], {1e-11, 0.0, 200, true}).value;
    }
    return (2.0 / std::numbers::pi) * total;
}

double KramersKronigTransform::tail_part(double xi) const {
    if (tail_amplitude_ == 0.0) {
        return 0.0;
    }
    const double we = table_.rows.back().energy;
    const double ratio = xi / we;
    double integral = 0.0;
    if (ratio < 1e-2) {
        // A int_we^inf dw / (w^2 (w^2 + xi^2)) = A / we^3 * sum_k (-1)^k r^(2k) / (2k + 3)
        double term = 1.0;
        double sum = 0.0;
        for (int k = 0; k < 8; ++k) {
            sum += term / (2.0 * k + 3.0);
            term *= -ratio * ratio;
        }
        integral = tail_amplitude_ / (we * we * we) * sum;
    } else {
        integral = tail_amplitude_ / (xi * xi) * (1.0 / we - std::atan(xi / we) / xi);
    }
    return (2.0 / std::numbers::pi) * integral;
}

double KramersKronigTransform::eps_imag(double xi, double temperature) const {
    if (xi < 0.0 || (xi == 0.0 && extrapolation_.kind != ExtrapolationKind::dielectric_constant)) {
        throw DomainError("kramers_kronig_imag_axis: frequency must be positive");
    }
    if (std::isnan(xi)) {
        throw DomainError("kramers_kronig_imag_axis: frequency is NaN");
    }
    const double gamma = relaxation_at(extrapolation_.drude.relaxation, temperature);
    const double low = xi == 0.0 ? 0.0 : extrapolated_part(xi, gamma);
    return 1.0 + low + table_part(xi) + tail_part(xi);
}

double KramersKronigTransform::matching_mismatch(double temperature) const {
    const double m = matching_point();
    const double tabulated = table_.rows.front().eps_imag();
    double extrapolated = 0.0;
    if (extrapolation_.kind == ExtrapolationKind::drude) {
        const double gamma = relaxation_at(extrapolation_.drude.relaxation, temperature);
        const double wp = extrapolation_.drude.plasma_frequency;
        extrapolated = wp * wp * gamma / (m * (m * m + gamma * gamma));
    }
    if (tabulated == 0.0) {
        return extrapolated == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(extrapolated - tabulated) / tabulated;
}

bool KramersKronigTransform::mismatch_exceeds_tolerance(double temperature) const {
    return matching_mismatch(temperature) > extrapolation_.mismatch_tolerance;
}

}  // namespace casimir

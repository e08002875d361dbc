#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation (a <= 0, xi <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature or summation that failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (optical tables, measurement files). `row` is 1-based, 0 if not row-specific.
class IngestionError : public std::runtime_error {
public:
    IngestionError(const std::string& message, std::size_t row = 0)
        : std::runtime_error(row == 0 ? message : "row " + std::to_string(row) + ": " + message), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Invalid or incomplete run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace casimir

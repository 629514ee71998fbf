#pragma once

#include <stdexcept>
#include <string>

namespace nse {

/// Argument outside the mathematical domain of an operation (x <= 0 for
/// log_gamma, phi outside (0, 1], windows leaving the support, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid configuration: grid sizes, method/domain mismatches, bad flags.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Target value not enclosed by the bracket handed to a root finder.
class BracketError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative method ran out of budget. The best available estimate is kept.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

}  // namespace nse

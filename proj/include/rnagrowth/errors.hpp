#ifndef RNAGROWTH_ERRORS_HPP
#define RNAGROWTH_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace rnagrowth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series combined at different truncation orders
struct OrderMismatchError : Error {
    using Error::Error;
};

// evaluation point leaves a variable unbound, or an operation names a
// variable the polynomial does not contain
struct VariableError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ModelLookupError : Error {
    using Error::Error;
};

struct ModelFileError : Error {
    using Error::Error;
};

// resultant of a system whose equations share a component
struct DegenerateSystemError : Error {
    using Error::Error;
};

// implicit-equation coefficient extraction cannot pick a unique branch
struct BranchAmbiguityError : Error {
    using Error::Error;
};

// a model flagged as counting produced a non-integer or negative coefficient
struct ModelInconsistencyError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

// no positive real root under the positive-real selection strategy
struct StrategyError : Error {
    using Error::Error;
};

// root iteration ran out of iterations; carries the best iterate seen
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, std::complex<double> iterate, double residual)
        : Error(msg), best_iterate(iterate), best_residual(residual) {}
    std::complex<double> best_iterate;
    double best_residual;
};

}  // namespace rnagrowth

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace mercer {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument fell outside a function's domain, or a segment left it.
// Raised eagerly so that non-finite values never leak into chain verdicts.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed input: bad weights, empty point lists, inverted intervals, ...
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// A quadrature routine ran out of subdivision budget. Carries the best
// estimate obtained so the caller can decide whether it is still usable.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, double best, double error_estimate)
        : Error(what), best_estimate(best), error_estimate(error_estimate) {}

    double best_estimate;
    double error_estimate;
};

// A convex-but-not-operator-convex function was passed to an operator check.
class NotOperatorConvex : public Error {
public:
    explicit NotOperatorConvex(const std::string& what) : Error(what) {}
};

}  // namespace mercer

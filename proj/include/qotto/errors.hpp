#ifndef QOTTO_ERRORS_HPP
#define QOTTO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qotto {

// Bad user-supplied input (CLI exit code 2).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Requested quantity is undefined for the given inputs (CLI exit code 2).
class OutOfDomainError : public std::domain_error {
public:
    explicit OutOfDomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Iterative scheme hit its cap without meeting tolerance (CLI exit code 3).
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double penultimate, double last)
        : std::runtime_error(msg), penultimate_estimate(penultimate), last_estimate(last) {}
    double penultimate_estimate;
    double last_estimate;
};

// Inverse lookup found no solution below its cap (CLI exit code 3).
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace qotto

#endif

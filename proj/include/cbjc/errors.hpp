// errors.hpp — exception hierarchy shared by the library and the CLI.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbjc {

// Base class. kind() is a stable token used by the CLI error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct UnsupportedConfiguration : Error {
    explicit UnsupportedConfiguration(const std::string& w) : Error("unsupported-configuration", w) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& w) : Error("range", w) {}
};

struct ConfigurationError : Error {
    explicit ConfigurationError(const std::string& w) : Error("configuration", w) {}
};

struct UnstableConfiguration : Error {
    explicit UnstableConfiguration(const std::string& w) : Error("unstable-configuration", w) {}
};

struct ContractViolation : Error {
    explicit ContractViolation(const std::string& w) : Error("contract-violation", w) {}
};

struct UndefinedState : Error {
    explicit UndefinedState(const std::string& w) : Error("undefined-state", w) {}
};

struct InvalidDensityMatrix : Error {
    explicit InvalidDensityMatrix(const std::string& w) : Error("invalid-density-matrix", w) {}
};

struct NoPeakError : Error {
    explicit NoPeakError(const std::string& w) : Error("no-peak", w) {}
};

struct SolverError : Error {
    explicit SolverError(const std::string& w) : Error("solver", w) {}
};

struct IoError : Error {
    explicit IoError(const std::string& w) : Error("io", w) {}
};

class IntegrationError : public Error {
public:
    IntegrationError(double t, const std::string& w)
        : Error("integration", w + " (t = " + std::to_string(t) + ")"), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

class DegenerateSteadyState : public Error {
public:
    explicit DegenerateSteadyState(std::size_t dim)
        : Error("degenerate-steady-state",
                "generator kernel has dimension " + std::to_string(dim) + ", expected 1"),
          dim_(dim) {}
    std::size_t kernel_dimension() const noexcept { return dim_; }

private:
    std::size_t dim_;
};

}  // namespace cbjc

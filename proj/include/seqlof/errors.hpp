#pragma once

#include <stdexcept>
#include <string>

namespace seqlof {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The first d design points cannot identify the coefficient vector.
class SingularInitialDesign : public Error {
public:
    using Error::Error;
};

// A batch design matrix is rank deficient.
class SingularDesign : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

// Argument outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature did not converge within the configured depth.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

// A q-design cannot be realized with the requested clustering parameters.
class InfeasiblePlacement : public Error {
public:
    using Error::Error;
};

// More residuals fed to a monitor than the planned horizon allows.
class OverrunError : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Invalid Monte Carlo / CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace seqlof

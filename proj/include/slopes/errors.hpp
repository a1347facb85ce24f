#pragma once

#include <stdexcept>
#include <string>

namespace slopes {

// Input outside the documented domain of an operation (pole, sign, range).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A curvature profile violated K <= -1 at some grid point.
class ProfileError : public std::runtime_error {
public:
    ProfileError(const std::string& what, double u) : std::runtime_error(what), offending_u(u) {}
    double offending_u;
};

// Numerical integration left its validity region (blow-up guard).
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double u) : std::runtime_error(what), blowup_u(u) {}
    double blowup_u;
};

// Inconsistent or incomplete run configuration.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace slopes

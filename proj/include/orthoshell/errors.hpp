#pragma once

#include <stdexcept>
#include <string>

namespace orthoshell {

/// Argument outside the admissible domain (geometry ratios, stations, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Constitutive determinant Delta <= 0; the stiffness has no inverse on the
/// constraint space.
struct NonPositiveDelta : std::runtime_error {
    explicit NonPositiveDelta(const std::string& msg) : std::runtime_error(msg) {}
};

/// A denominator in the stiffness -> technical-moduli map vanished.
struct SingularStiffness : std::runtime_error {
    explicit SingularStiffness(const std::string& msg) : std::runtime_error(msg) {}
};

/// Station (x1, zeta) outside the shell body.
struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& msg) : std::runtime_error(msg) {}
};

/// Repeated characteristic roots; the two-mode ansatz fails.
struct DegenerateRoots : std::runtime_error {
    explicit DegenerateRoots(const std::string& msg) : std::runtime_error(msg) {}
};

/// The affine thickness-stretch equation has a vanishing coefficient.
struct SingularGamma : std::runtime_error {
    explicit SingularGamma(const std::string& msg) : std::runtime_error(msg) {}
};

/// The discrete boundary-value system could not be factorized.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& msg) : std::runtime_error(msg) {}
};

/// An identification record with a vanishing denominator.
struct DegenerateExperiment : std::runtime_error {
    explicit DegenerateExperiment(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed configuration or input file.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace orthoshell

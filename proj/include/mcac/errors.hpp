#pragma once

#include <stdexcept>
#include <string>

namespace mcac {

struct SolvabilityViolation : std::runtime_error {
    explicit SolvabilityViolation(const std::string& m) : std::runtime_error(m) {}
};

struct SolverDivergence : std::runtime_error {
    explicit SolverDivergence(const std::string& m) : std::runtime_error(m) {}
};

struct DegeneratePhase : std::runtime_error {
    explicit DegeneratePhase(const std::string& m) : std::runtime_error(m) {}
};

struct OvershootAbort : std::runtime_error {
    explicit OvershootAbort(const std::string& m) : std::runtime_error(m) {}
};

struct CurveTouchesBoundary : std::runtime_error {
    explicit CurveTouchesBoundary(const std::string& m) : std::runtime_error(m) {}
};

struct SelfIntersection : std::runtime_error {
    explicit SelfIntersection(const std::string& m) : std::runtime_error(m) {}
};

struct EigSolverStall : std::runtime_error {
    explicit EigSolverStall(const std::string& m) : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace mcac

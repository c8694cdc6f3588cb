#pragma once

#include <cmath>

// Cubic bistable nonlinearity f(u) = u(1-u^2) and the matching double-well
// potential W(u) = (1-u^2)^2/4, shared by every other module.
namespace mcac::potential {

inline double f(double u) { return u * (1.0 - u * u); }

inline double W(double u) {
    const double q = 1.0 - u * u;
    return 0.25 * q * q;
}

// sqrt(4 W(u)) = |1-u^2|; the absolute value keeps it defined under small
// discrete overshoot beyond [-1,1].
inline double sqrt4W(double u) { return std::abs(1.0 - u * u); }

inline double fprime(double u) { return 1.0 - 3.0 * u * u; }

} // namespace mcac::potential

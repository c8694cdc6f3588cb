#pragma once

#include <functional>
#include <vector>

namespace mcac {

// Uniform symmetric grid in the stretched variable rho, with rho = 0 on a node.
struct RhoGrid {
    double rho_max = 20.0;
    int n = 4001; // odd, so 0 is a node and Simpson applies

    double drho() const { return 2.0 * rho_max / (n - 1); }
    double rho(int j) const { return -rho_max + j * drho(); }
    int center() const { return (n - 1) / 2; }

    static RhoGrid standard() { return RhoGrid{}; }
};

struct Profile {
    RhoGrid grid;
    std::vector<double> values;
};

// Standing wave theta0(rho) = tanh(rho/sqrt(2)) and its derivative.
double theta0(double rho);
double theta0_prime(double rho);

Profile sample_profile(const RhoGrid& grid, const std::function<double(double)>& fn);

// Composite Simpson over the full grid (n odd).
double simpson(const RhoGrid& grid, const std::vector<double>& values);

struct ProfileConstants {
    double sigma;              // int (1-theta0^2) theta0' / int theta0'^2
    double sigma_star;         // 1 / int theta0'^2
    double int_theta_prime;    // int theta0'
    double int_theta_prime_sq; // int theta0'^2
};

ProfileConstants profile_constants(const RhoGrid& grid);

inline constexpr double kTolSolvability = 1e-8;

// Quadrature of int A theta0' (the Fredholm orthogonality integral).
double check_solvability(const Profile& A);

// Bounded solution psi of -psi'' - f'(theta0) psi = A with psi(0) = 0, by
// variation of constants: psi(rho) = theta0'(rho) *
//   int_0^rho theta0'(z)^-2 [ int_z^inf A theta0' ] dz.
// The inner improper integral is truncated at rho_max and accumulated by a
// running sum from each end toward 0, so its relative accuracy survives the
// exp(2*sqrt(2)|z|) growth of theta0'^-2. Throws SolvabilityViolation when
// |check_solvability(A)| >= kTolSolvability.
Profile solve_linearized(const Profile& A);

} // namespace mcac

#include "mcac/profile1d.hpp"

#include "mcac/errors.hpp"

#include <cmath>
#include <sstream>

namespace mcac {

namespace {
const double kSqrt2 = std::sqrt(2.0);

// Integral over [x_j, x_{j+1}] of the cubic through nodes j-1..j+2 (clamped
// at the ends). Local O(h^5) error, so running sums stay O(h^4) globally.
double cell_increment(const std::vector<double>& g, int j, double h, int n) {
    const int jm = j > 0 ? j - 1 : 0;
    const int jp2 = j + 2 < n ? j + 2 : n - 1;
    return h / 24.0 * (-g[jm] + 13.0 * g[j] + 13.0 * g[j + 1] - g[jp2]);
}
} // namespace

double theta0(double rho) { return std::tanh(rho / kSqrt2); }

double theta0_prime(double rho) {
    const double c = std::cosh(rho / kSqrt2);
    return 1.0 / (kSqrt2 * c * c);
}

Profile sample_profile(const RhoGrid& grid, const std::function<double(double)>& fn) {
    Profile p{grid, std::vector<double>(grid.n)};
    for (int j = 0; j < grid.n; ++j) p.values[j] = fn(grid.rho(j));
    return p;
}

double simpson(const RhoGrid& grid, const std::vector<double>& values) {
    const int n = grid.n;
    double odd = 0.0, even = 0.0;
    for (int j = 1; j < n - 1; j += 2) odd += values[j];
    for (int j = 2; j < n - 1; j += 2) even += values[j];
    return grid.drho() / 3.0 * (values[0] + values[n - 1] + 4.0 * odd + 2.0 * even);
}

ProfileConstants profile_constants(const RhoGrid& grid) {
    std::vector<double> tp(grid.n), tpsq(grid.n), num(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double r = grid.rho(j);
        const double d = theta0_prime(r);
        const double t = theta0(r);
        tp[j] = d;
        tpsq[j] = d * d;
        num[j] = (1.0 - t * t) * d;
    }
    ProfileConstants c{};
    c.int_theta_prime = simpson(grid, tp);
    c.int_theta_prime_sq = simpson(grid, tpsq);
    c.sigma = simpson(grid, num) / c.int_theta_prime_sq;
    c.sigma_star = 1.0 / c.int_theta_prime_sq;
    return c;
}

double check_solvability(const Profile& A) {
    std::vector<double> g(A.grid.n);
    for (int j = 0; j < A.grid.n; ++j) g[j] = A.values[j] * theta0_prime(A.grid.rho(j));
    return simpson(A.grid, g);
}

Profile solve_linearized(const Profile& A) {
    const double defect = check_solvability(A);
    if (std::abs(defect) >= kTolSolvability) {
        std::ostringstream os;
        os << "solve_linearized: solvability integral " << defect
           << " exceeds tolerance " << kTolSolvability;
        throw SolvabilityViolation(os.str());
    }

    const RhoGrid& grid = A.grid;
    const int n = grid.n;
    const int c = grid.center();
    const double h = grid.drho();

    std::vector<double> tp(n), g(n);
    for (int j = 0; j < n; ++j) {
        tp[j] = theta0_prime(grid.rho(j));
        g[j] = A.values[j] * tp[j];
    }

    // inner integral I(z) = int_z^{rho_max} g; on the left half use
    // I(z) = -int_{-rho_max}^z g (total is 0 by solvability), so each running
    // sum starts where the integrand is exponentially small
    std::vector<double> inner(n, 0.0);
    for (int j = n - 2; j >= c; --j) inner[j] = inner[j + 1] + cell_increment(g, j, h, n);
    double lsum = 0.0;
    std::vector<double> left(n, 0.0);
    for (int j = 0; j < c; ++j) {
        lsum += cell_increment(g, j, h, n);
        left[j + 1] = lsum;
    }
    for (int j = 0; j < c; ++j) inner[j] = -left[j];

    // outer integrand: product formed before the running sum
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = inner[j] / (tp[j] * tp[j]);

    std::vector<double> outer(n, 0.0);
    for (int j = c; j < n - 1; ++j) outer[j + 1] = outer[j] + cell_increment(w, j, h, n);
    for (int j = c; j > 0; --j) outer[j - 1] = outer[j] - cell_increment(w, j - 1, h, n);

    Profile psi{grid, std::vector<double>(n)};
    for (int j = 0; j < n; ++j) psi.values[j] = tp[j] * outer[j];
    psi.values[c] = 0.0;
    return psi;
}

} // namespace mcac

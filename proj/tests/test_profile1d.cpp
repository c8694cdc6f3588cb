#include "mcac/profile1d.hpp"

#include "mcac/errors.hpp"
#include "mcac/potential.hpp"
#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace mcac;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// 4th-order discrete realization of L psi = -psi'' - f'(theta0) psi; the
// 3-point stencil's own truncation floor (~2e-5 at drho = 0.01) would mask
// the solver.
double residual_max(const Profile& psi, const Profile& A) {
    const RhoGrid& g = psi.grid;
    const double h2 = g.drho() * g.drho();
    double worst = 0.0;
    for (int j = 2; j < g.n - 2; ++j) {
        const double d2 = (-psi.values[j + 2] + 16.0 * psi.values[j + 1] - 30.0 * psi.values[j] +
                           16.0 * psi.values[j - 1] - psi.values[j - 2]) /
                          (12.0 * h2);
        const double r =
            -d2 - potential::fprime(theta0(g.rho(j))) * psi.values[j] - A.values[j];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace

int main() {
    using testing::check_close;
    const RhoGrid grid = RhoGrid::standard();

    // standing wave values
    check_close("theta0(0)", theta0(0.0), 0.0, 0.0);
    // |theta0(20) - 1| = 2 exp(-2 sqrt(2) * 10) = 1.04e-12
    check_close("theta0(rho_max)", theta0(grid.rho_max), 1.0, 1.1e-12);
    check_close("theta0(-rho_max)", theta0(-grid.rho_max), -1.0, 1.1e-12);
    check_close("theta0 inverse", theta0(kSqrt2 * std::atanh(0.5)), 0.5, 1e-14);
    CHECK(theta0(1.0) > theta0(0.5), "theta0 increasing");
    CHECK(theta0(-2.0) == -theta0(2.0), "theta0 odd");

    check_close("theta0'(0)", theta0_prime(0.0), 1.0 / kSqrt2, 1e-15);
    check_close("1-theta0^2 = sqrt2 theta0' at 1.3",
                1.0 - theta0(1.3) * theta0(1.3), kSqrt2 * theta0_prime(1.3), 1e-14);
    CHECK(theta0_prime(-2.0) == theta0_prime(2.0), "theta0' even");

    // theta0'' + f(theta0) = 0 and L theta0' = 0, second differences
    {
        double worst_ode = 0.0, worst_ker = 0.0;
        const double h = grid.drho();
        for (int j = 1; j < grid.n - 1; ++j) {
            const double r = grid.rho(j);
            const double d2t =
                (theta0(r + h) - 2.0 * theta0(r) + theta0(r - h)) / (h * h);
            worst_ode = std::max(worst_ode, std::abs(d2t + potential::f(theta0(r))));
            const double d2p =
                (theta0_prime(r + h) - 2.0 * theta0_prime(r) + theta0_prime(r - h)) / (h * h);
            worst_ker = std::max(
                worst_ker, std::abs(-d2p - potential::fprime(theta0(r)) * theta0_prime(r)));
        }
        CHECK(worst_ode < 5e-5, "theta0'' + f(theta0) = O(drho^2)");
        CHECK(worst_ker < 5e-5, "L theta0' = O(drho^2)");
    }

    // tail decay rate ~ sqrt(2) over rho in [5, 15]
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (double r = 5.0; r <= 15.0; r += 0.1) {
            const double lx = r, ly = std::log(std::abs(theta0(r) - 1.0));
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            ++n;
        }
        const double rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(std::abs(rate - kSqrt2) / kSqrt2 < 0.05, "decay rate within 5% of sqrt2");
    }

    // profile constants
    const ProfileConstants c = profile_constants(grid);
    check_close("sigma", c.sigma, kSqrt2, 1e-8);
    check_close("sigma_star", c.sigma_star, 0.75 * kSqrt2, 1e-8);
    check_close("int theta0'", c.int_theta_prime, 2.0, 1e-8);
    check_close("int theta0'^2", c.int_theta_prime_sq, 2.0 * kSqrt2 / 3.0, 1e-8);

    // solvability integrals
    const Profile odd_rhs =
        sample_profile(grid, [](double r) { return r * theta0_prime(r); });
    check_close("solvability(rho theta0')", check_solvability(odd_rhs), 0.0, 1e-10);
    const Profile tp = sample_profile(grid, [](double r) { return theta0_prime(r); });
    check_close("solvability(theta0') = 1/sigma*", check_solvability(tp), 1.0 / c.sigma_star,
                1e-10);
    const Profile zero = sample_profile(grid, [](double) { return 0.0; });
    check_close("solvability(0)", check_solvability(zero), 0.0, 0.0);

    // solve_linearized: zero rhs, residual, linearity, decay, parity
    {
        const Profile psi0 = solve_linearized(zero);
        double m = 0.0;
        for (double v : psi0.values) m = std::max(m, std::abs(v));
        check_close("solve(0) = 0", m, 0.0, 0.0);
    }
    {
        const Profile A = sample_profile(grid, [](double r) { return r * theta0_prime(r); });
        const Profile psi = solve_linearized(A);
        CHECK(residual_max(psi, A) < 1e-6, "residual of solve(rho theta0') < 1e-6");
        check_close("psi(0)", psi.values[grid.center()], 0.0, 0.0);

        Profile A3{grid, A.values};
        for (double& v : A3.values) v *= -3.0;
        const Profile psi3 = solve_linearized(A3);
        double worst = 0.0;
        for (int j = 0; j < grid.n; ++j)
            worst = std::max(worst, std::abs(psi3.values[j] + 3.0 * psi.values[j]));
        CHECK(worst < 1e-12, "linearity: solve(-3A) = -3 solve(A)");

        // A has A^+- = 0 with |rho| e^{-sqrt2|rho|} decay, so psi decays too
        CHECK(std::abs(psi.values.front()) < 1e-8, "psi decays at -rho_max");
        CHECK(std::abs(psi.values.back()) < 1e-8, "psi decays at +rho_max");

        // odd rhs with the psi(0)=0 normalization gives an odd solution; the
        // even kernel mode theta0' would break it (spec's 'even' claim has
        // the parity backwards, see ledger)
        double asym = 0.0;
        for (int j = 0; j < grid.n; ++j)
            asym = std::max(asym,
                            std::abs(psi.values[j] + psi.values[grid.n - 1 - j]));
        CHECK(asym < 1e-10, "psi odd for odd rhs");
    }

    // solvability violation rejected
    CHECK_THROWS(solve_linearized(tp), SolvabilityViolation,
                 "theta0' rhs violates solvability");

    return testing::finish("test_profile1d");
}

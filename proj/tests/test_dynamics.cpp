#include "mcac/dynamics.hpp"

#include "mcac/approx.hpp"
#include "mcac/diagnostics.hpp"
#include "mcac/errors.hpp"
#include "mcac/profile1d.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace mcac;

namespace {

Field tanh_stripe(const GridSpec& spec, double eps, double x0) {
    Field u(spec);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) u.at(i, j) = theta0((spec.x(i) - x0) / eps);
    return u;
}

Field admissible_random(const GridSpec& spec, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-0.95, 0.95);
    Field u(spec);
    for (double& x : u.v) x = dist(rng);
    return u;
}

} // namespace

int main() {
    using testing::check_close;

    const GridSpec spec{128, 128, 1.0, 1.0};

    // multiplier values
    {
        check_close("bb multiplier of u=0", compute_multiplier(Field(spec, 0.0), MultiplierKind::BB),
                    0.0, 0.0);
        check_close("bb multiplier of u=0.5",
                    compute_multiplier(Field(spec, 0.5), MultiplierKind::BB), 0.5, 1e-13);
        check_close("rs multiplier of u=0.5",
                    compute_multiplier(Field(spec, 0.5), MultiplierKind::RS), 0.375, 1e-13);
        check_close("none multiplier", compute_multiplier(Field(spec, 0.5), MultiplierKind::NONE),
                    0.0, 0.0);

        // centered straight interface: odd symmetry cancels the numerator
        const Field stripe = tanh_stripe(spec, 0.02, 0.5);
        check_close("bb multiplier of centered stripe",
                    compute_multiplier(stripe, MultiplierKind::BB), 0.0, 1e-8);

        CHECK_THROWS(compute_multiplier(Field(spec, 1.0), MultiplierKind::BB), DegeneratePhase,
                     "pure phase denominator floor");
    }

    // multiplier sign equivariance under u -> -u composed with grid reflection
    {
        const Field u = admissible_random(spec, 3);
        Field refl(spec);
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) refl.at(i, j) = -u.at(spec.nx - 1 - i, j);
        const double a = compute_multiplier(u, MultiplierKind::BB);
        const double b = compute_multiplier(refl, MultiplierKind::BB);
        check_close("bb multiplier odd equivariance", b, -a, 1e-13);
    }

    // pure phases are fixed points for RS and NONE
    {
        HelmholtzSolver helm(spec);
        for (MultiplierKind kind : {MultiplierKind::RS, MultiplierKind::NONE}) {
            SimState st = make_sim_state(Field(spec, 1.0), 0.05, dt_default(0.05), kind);
            const SimState st1 = step(st, helm);
            double worst = 0.0;
            for (double x : st1.u.v) worst = std::max(worst, std::abs(x - 1.0));
            CHECK(worst < 1e-14, "u = +1 is a fixed point");
        }
    }

    // exact mass conservation per step on random admissible fields
    {
        HelmholtzSolver helm(spec);
        for (MultiplierKind kind : {MultiplierKind::BB, MultiplierKind::RS}) {
            const Field u0 = admissible_random(spec, kind == MultiplierKind::BB ? 10 : 11);
            SimState st = make_sim_state(u0, 0.05, dt_default(0.05), kind);
            const double m0 = integrate(st.u);
            const SimState st1 = step(st, helm);
            CHECK(std::abs(integrate(st1.u) - m0) < 1e-12 * spec.area(),
                  "per-step mass conservation");
        }
    }

    // kinds agree when both multipliers vanish by antisymmetry
    {
        HelmholtzSolver helm(spec);
        const Field stripe = tanh_stripe(spec, 0.05, 0.5);
        Field us[3];
        int t = 0;
        for (MultiplierKind kind :
             {MultiplierKind::BB, MultiplierKind::RS, MultiplierKind::NONE}) {
            SimState st = make_sim_state(stripe, 0.05, dt_default(0.05), kind);
            us[t++] = step(st, helm).u;
        }
        double worst = 0.0;
        for (size_t k = 0; k < us[0].v.size(); ++k) {
            worst = std::max(worst, std::abs(us[0].v[k] - us[2].v[k]));
            worst = std::max(worst, std::abs(us[1].v[k] - us[2].v[k]));
        }
        CHECK(worst < 1e-13, "kinds agree when multipliers vanish");
    }

    // NONE is an energy descent scheme at dt = 0.1 eps^2
    {
        const GridSpec g2{128, 128, 2.0, 2.0};
        HelmholtzSolver helm(g2);
        const double eps = 0.05;
        const Curve ell = make_ellipse({1.0, 1.0}, 0.35, 0.25, 512);
        Field u0 = assemble_on_curve(ell, ApproxSpec{eps, 2}, g2).u;
        // smooth non-equilibrium perturbation
        for (int j = 0; j < g2.ny; ++j)
            for (int i = 0; i < g2.nx; ++i) {
                const double p = 0.05 * std::sin(3.0 * g2.x(i)) * std::cos(2.0 * g2.y(j));
                double& x = u0.at(i, j);
                x = std::clamp(x + p, -1.0, 1.0);
            }
        SimState st = make_sim_state(u0, eps, dt_default(eps), MultiplierKind::NONE);
        double E = gl_energy(st.u, eps);
        const double E0 = E;
        bool descending = true;
        for (int s = 0; s < 200; ++s) {
            st = step(st, helm);
            const double E2 = gl_energy(st.u, eps);
            if (E2 > E + 1e-12) descending = false;
            E = E2;
        }
        CHECK(descending, "gl energy non-increasing for NONE");
        CHECK(E < E0, "one-step (and cumulative) strict decrease");
    }

    // overshoot rail: a field past the rail stays past it after one step
    {
        HelmholtzSolver helm(spec);
        SimState st = make_sim_state(Field(spec, 1.2), 0.05, dt_default(0.05),
                                     MultiplierKind::NONE);
        bool threw = false;
        try {
            st = step(st, helm);
        } catch (const OvershootAbort& e) {
            threw = true;
            CHECK(std::string(e.what()).find("reduce dt") != std::string::npos,
                  "abort recommends smaller dt");
        }
        CHECK(threw, "overshoot abort triggered");
    }

    // dt guard
    CHECK_THROWS(make_sim_state(Field(spec, 0.0), 0.05, 0.3 * 0.05 * 0.05, MultiplierKind::BB),
                 ConfigError, "dt above 0.2 eps^2 rejected");

    return testing::finish("test_dynamics");
}

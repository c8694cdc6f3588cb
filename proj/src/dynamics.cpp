#include "mcac/dynamics.hpp"

#include "mcac/errors.hpp"
#include "mcac/potential.hpp"

#include <cmath>
#include <sstream>

namespace mcac {

const char* to_string(MultiplierKind k) {
    switch (k) {
        case MultiplierKind::BB: return "bb";
        case MultiplierKind::RS: return "rs";
        case MultiplierKind::NONE: return "none";
    }
    return "?";
}

SimState make_sim_state(Field u0, double eps, double dt, MultiplierKind kind) {
    if (eps <= 0.0) throw ConfigError("make_sim_state: eps must be positive");
    if (dt <= 0.0) throw ConfigError("make_sim_state: dt must be positive");
    if (dt > dt_max(eps)) {
        std::ostringstream os;
        os << "make_sim_state: dt " << dt << " exceeds dt_max(eps) = " << dt_max(eps);
        throw ConfigError(os.str());
    }
    SimState st;
    st.eps = eps;
    st.dt = dt;
    st.kind = kind;
    st.u = std::move(u0);
    st.mass0 = integrate(st.u);
    return st;
}

double compute_multiplier(const Field& u, MultiplierKind kind) {
    if (kind == MultiplierKind::NONE) return 0.0;
    std::vector<double> fu(u.v.size());
    for (size_t k = 0; k < u.v.size(); ++k) fu[k] = potential::f(u.v[k]);
    const double sum_f = compensated_sum(fu);
    if (kind == MultiplierKind::RS)
        return u.spec.hx() * u.spec.hy() * sum_f / u.spec.area();

    std::vector<double> w(u.v.size());
    for (size_t k = 0; k < u.v.size(); ++k) w[k] = potential::sqrt4W(u.v[k]);
    const double sum_w = compensated_sum(w);
    const double denom_integral = u.spec.hx() * u.spec.hy() * sum_w;
    if (denom_integral < kDegenerateFloor * u.spec.area()) {
        std::ostringstream os;
        os << "compute_multiplier: integral of sqrt(4W) = " << denom_integral
           << " below floor " << kDegenerateFloor * u.spec.area()
           << " (field is a pure phase)";
        throw DegeneratePhase(os.str());
    }
    return sum_f / sum_w;
}

SimState step(const SimState& state, HelmholtzSolver& helm) {
    const Field& u = state.u;
    const double lam = compute_multiplier(u, state.kind);
    const double a = state.dt / (state.eps * state.eps);

    Field g(u.spec);
    switch (state.kind) {
        case MultiplierKind::BB:
            for (size_t k = 0; k < u.v.size(); ++k) {
                const double x = u.v[k];
                g.v[k] = x + a * (potential::f(x) - lam * potential::sqrt4W(x));
            }
            break;
        case MultiplierKind::RS:
            for (size_t k = 0; k < u.v.size(); ++k) {
                const double x = u.v[k];
                g.v[k] = x + a * (potential::f(x) - lam);
            }
            break;
        case MultiplierKind::NONE:
            for (size_t k = 0; k < u.v.size(); ++k) {
                const double x = u.v[k];
                g.v[k] = x + a * potential::f(x);
            }
            break;
    }

    SimState next = state;
    next.u = helm.solve(g, state.dt);
    next.time += state.dt;
    next.lambda_last = lam;

    const double rail = state.kind == MultiplierKind::RS ? kTolOvershootRS : kTolOvershoot;
    const double m = max_abs(next.u);
    if (m > 1.0 + rail) {
        std::ostringstream os;
        os << "step: max|u| = " << m << " exceeds 1 + " << rail << " at t = " << next.time
           << " (" << to_string(state.kind) << "); reduce dt";
        throw OvershootAbort(os.str());
    }
    return next;
}

} // namespace mcac

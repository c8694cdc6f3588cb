#pragma once

#include "mcac/grid.hpp"

namespace mcac {

enum class MultiplierKind { BB, RS, NONE };

const char* to_string(MultiplierKind k);

inline constexpr double kTolOvershoot = 1e-3;
// RS has no maximum principle; its bulk values sit O(eps) outside [-1,1], so
// its instability rail is wider (see decisions ledger).
inline constexpr double kTolOvershootRS = 1e-1;
inline constexpr double kDegenerateFloor = 1e-10;

inline double dt_default(double eps) { return 0.1 * eps * eps; }
inline double dt_max(double eps) { return 0.2 * eps * eps; }

struct SimState {
    Field u;
    double time = 0.0;
    double eps = 0.0;
    double dt = 0.0;
    MultiplierKind kind = MultiplierKind::BB;
    double mass0 = 0.0;
    double lambda_last = 0.0; // eps*lambda_eps for BB, the RS scalar for RS, 0 for NONE
};

SimState make_sim_state(Field u0, double eps, double dt, MultiplierKind kind);

// BB: sum f(u) / sum sqrt(4W(u)) (throws DegeneratePhase below the floor);
// RS: (hx*hy/|Omega|) * sum f(u); NONE: 0.
double compute_multiplier(const Field& u, MultiplierKind kind);

// One IMEX Euler step: explicit reaction r = f(u) - lambda*w(u) with the
// discrete multiplier making sum(r) vanish, implicit diffusion via
// helmholtz_solve. Conserves the discrete mass to roundoff for BB and RS.
// Throws OvershootAbort past the kind's rail.
SimState step(const SimState& state, HelmholtzSolver& helm);

} // namespace mcac

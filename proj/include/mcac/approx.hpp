#pragma once

#include "mcac/fronttrack.hpp"
#include "mcac/geometry.hpp"
#include "mcac/grid.hpp"
#include "mcac/profile1d.hpp"

namespace mcac {

// Leading multiplier of the expansion: average_curvature / sqrt(2).
double lambda0(const Curve& c);

// Bounded kernel psi solving L psi = -rho * theta0', psi(0) = 0. The layer
// correction is u2 = kappa^2 * psi (2D); built once and cached.
struct U2Kernel {
    Profile psi_hat;
    double eval(double rho) const; // linear interpolation, tails clamped
};

const U2Kernel& shared_u2_kernel();
U2Kernel build_u2_kernel();

struct ApproxSpec {
    double eps = 0.0;
    int order = 2; // 0 or 2 (order 1 coincides with 0)
};

struct ApproxField {
    Field u;
    double lambda_k = 0.0;
};

// Assembly of the approximate solution on one curve: tanh layer plus the
// order-2 correction, blended into +-1 through the quintic cutoff supported
// on sqrt(eps) <= |d| <= 2 sqrt(eps). No mass shift is applied here.
ApproxField assemble_on_curve(const Curve& curve, const ApproxSpec& spec, const GridSpec& grid);

// Time-indexed family over a front-tracked flow; at(t) applies the scalar
// mass-correcting shift relative to the t = 0 assembly (exactly 0 at t = 0).
class ApproxFamily {
  public:
    ApproxFamily(FlowPath flow, ApproxSpec spec, GridSpec grid);

    ApproxField at(double t) const;
    double mass0() const { return mass0_; }
    const FlowPath& flow() const { return flow_; }
    const ApproxSpec& spec() const { return spec_; }

  private:
    FlowPath flow_;
    ApproxSpec spec_;
    GridSpec grid_;
    double mass0_ = 0.0;
};

struct AlphaBeta {
    double alpha; // (int kappa ds) * int rho f(theta0) drho
    double beta;  // 2 sqrt(2) * perimeter
};

AlphaBeta alpha_beta(const Curve& c);

// I_rho = int rho f(theta0) drho by quadrature (equals 2).
double i_rho_quadrature();

// C2 quintic cutoff: 1 for |z| <= sqrt(eps), 0 for |z| >= 2 sqrt(eps).
double cutoff_zeta(double z, double eps);

} // namespace mcac

#include "mcac/approx.hpp"

#include "mcac/errors.hpp"
#include "mcac/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcac {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

double lambda0(const Curve& c) { return average_curvature(c) / kSqrt2; }

double U2Kernel::eval(double rho) const {
    const RhoGrid& g = psi_hat.grid;
    if (rho <= -g.rho_max) return psi_hat.values.front();
    if (rho >= g.rho_max) return psi_hat.values.back();
    const double pos = (rho + g.rho_max) / g.drho();
    const int j = std::min(static_cast<int>(pos), g.n - 2);
    const double t = pos - j;
    return psi_hat.values[j] * (1.0 - t) + psi_hat.values[j + 1] * t;
}

U2Kernel build_u2_kernel() {
    const RhoGrid grid = RhoGrid::standard();
    const Profile rhs =
        sample_profile(grid, [](double r) { return -r * theta0_prime(r); });
    return U2Kernel{solve_linearized(rhs)};
}

const U2Kernel& shared_u2_kernel() {
    static const U2Kernel kernel = build_u2_kernel();
    return kernel;
}

double cutoff_zeta(double z, double eps) {
    const double se = std::sqrt(eps);
    const double x = std::clamp((std::abs(z) - se) / se, 0.0, 1.0);
    const double s01 = x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
    return 1.0 - s01;
}

ApproxField assemble_on_curve(const Curve& curve, const ApproxSpec& spec, const GridSpec& grid) {
    validate_curve(curve);
    if (spec.order != 0 && spec.order != 2)
        throw ConfigError("assemble_on_curve: order must be 0 or 2");

    const double clearance_needed = 2.0 * std::sqrt(spec.eps);
    for (const Vec2& p : curve.pts) {
        const double clear =
            std::min(std::min(p.x, grid.Lx - p.x), std::min(p.y, grid.Ly - p.y));
        if (clear < clearance_needed) {
            std::ostringstream os;
            os << "assemble_on_curve: cutoff support 2*sqrt(eps) = " << clearance_needed
               << " exceeds curve clearance " << clear;
            throw CurveTouchesBoundary(os.str());
        }
    }

    const DistanceField df = distance_field(curve, grid);
    const std::vector<double> kappa = curvature(curve);
    const size_t nseg = curve.pts.size();
    const U2Kernel* kernel = spec.order == 2 ? &shared_u2_kernel() : nullptr;

    ApproxField out;
    out.u = Field(grid);
    out.lambda_k = lambda0(curve);

    const double eps = spec.eps;
    for (size_t k = 0; k < out.u.v.size(); ++k) {
        const double d = df.d.v[k];
        const double z = cutoff_zeta(d, eps);
        const double uout = d >= 0.0 ? 1.0 : -1.0;
        if (z == 0.0) {
            out.u.v[k] = uout;
            continue;
        }
        const double rho = d / eps;
        double uin = theta0(rho);
        if (kernel) {
            // nearest-vertex curvature, linearly interpolated along the segment
            const int s = df.seg[k];
            const double t = df.seg_t[k];
            const double ks = kappa[s] * (1.0 - t) + kappa[(s + 1) % nseg] * t;
            // layer coefficient sum(kappa_i^2); kills the eps^2 interior term
            uin += eps * eps * (ks * ks) * kernel->eval(rho);
        }
        out.u.v[k] = z * uin + (1.0 - z) * uout;
    }
    return out;
}

ApproxFamily::ApproxFamily(FlowPath flow, ApproxSpec spec, GridSpec grid)
    : flow_(std::move(flow)), spec_(spec), grid_(grid) {
    mass0_ = integrate(assemble_on_curve(flow_.curves.front(), spec_, grid_).u);
}

ApproxField ApproxFamily::at(double t) const {
    const Curve curve = flow_.at(t);
    ApproxField f = assemble_on_curve(curve, spec_, grid_);
    const double shift = (mass0_ - integrate(f.u)) / grid_.area();
    for (double& x : f.u.v) x += shift;
    return f;
}

double i_rho_quadrature() {
    const RhoGrid grid = RhoGrid::standard();
    const Profile p = sample_profile(
        grid, [](double r) { return r * potential::f(theta0(r)); });
    return simpson(grid, p.values);
}

AlphaBeta alpha_beta(const Curve& c) {
    const std::vector<double> k = curvature(c);
    const size_t n = c.pts.size();
    double total_kappa = 0.0; // arclength-weighted int kappa ds
    for (size_t i = 0; i < n; ++i) {
        const double lp = norm(c.pts[i] - c.pts[(i + n - 1) % n]);
        const double ln = norm(c.pts[(i + 1) % n] - c.pts[i]);
        total_kappa += k[i] * 0.5 * (lp + ln);
    }
    return AlphaBeta{total_kappa * i_rho_quadrature(), 2.0 * kSqrt2 * perimeter(c)};
}

} // namespace mcac

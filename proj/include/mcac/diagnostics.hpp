#pragma once

#include "mcac/geometry.hpp"
#include "mcac/grid.hpp"

#include <string>
#include <vector>

namespace mcac {

struct TimeSeriesRecord {
    long step = 0;
    double time = 0.0;
    double mass = 0.0;
    double lambda = 0.0;
    double area_levelset = 0.0;
    double area_phase = 0.0;
    double gl_energy = 0.0;
    double l2_err_step = 0.0;
    double l2_err_approx = 0.0; // NaN when no approx family is configured
    int levelset_count = 0;
};

inline constexpr const char* kTimeSeriesHeader =
    "step,time,mass,lambda,area_levelset,area_phase,gl_energy,l2_err_step,l2_err_approx,"
    "levelset_count";

void write_timeseries_csv(const std::string& path, const std::vector<TimeSeriesRecord>& records);

// || u - u_tilde ||_L2 with u_tilde = sign of the signed distance to the curve.
double l2_error_vs_step(const Field& u, const Curve& curve);

double l2_error(const Field& a, const Field& b);

// integrate( (eps/2)|grad u|^2 + W(u)/eps ), centered gradient, reflective closure.
double gl_energy(const Field& u, double eps);

// Smallest eigenvalue of -lap + q, q = -(f'(u_k) + ratio*2*u_k)/eps^2, by
// shifted inverse power iteration. Shifts are certified below the bottom
// eigenvalue by banded Cholesky success; a failed factorization tightens the
// upper bracket instead. Relative eigenvalue tolerance 1e-6.
double spectral_lower_bound(const Field& u_k, double eps, double ratio);

struct VolumeDrift {
    double max_rel_levelset = 0.0;
    double max_rel_phase = 0.0;
};

VolumeDrift volume_drift(const std::vector<TimeSeriesRecord>& records);

// Largest-|area| closed contour statistics used by the per-record diagnostics.
struct LevelsetSummary {
    double area = 0.0; // |area| of the dominant contour, 0 when none
    int count = 0;     // number of closed contours
};

LevelsetSummary levelset_summary(const Field& u);

} // namespace mcac

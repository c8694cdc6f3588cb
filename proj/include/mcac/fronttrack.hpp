#pragma once

#include "mcac/geometry.hpp"

#include <vector>

namespace mcac {

// Per-vertex plane curvature from the circumscribed circle of consecutive
// vertex triples; positive for a convex positively-oriented curve. Collinear
// triples fall back to 0.
std::vector<double> curvature(const Curve& c);

// Arclength-weighted trapezoidal mean of per-vertex curvature.
double average_curvature(const Curve& c);

std::vector<Vec2> outward_normals(const Curve& c);

// Uniform-arclength resample through Catmull-Rom segments.
Curve resample_closed(const Curve& c, size_t n_out);

struct FlowState {
    Curve curve;
    double time = 0.0;
    double dt = 0.0;
    double area0 = 0.0;
    bool projection = true;
    double target_spacing = 0.0;
    long step_index = 0;
    int check_stride = 64; // simplicity sweep cadence
};

FlowState make_flow_state(const Curve& c0, double dt, bool projection);

// Explicit Euler step of V = -kappa + kappa_bar along outward normals, with
// optional exact-area projection (uniform normal shift) and arclength
// resampling once spacing drifts outside [0.5, 2] x target.
FlowState step_flow(const FlowState& state);

struct FlowPath {
    std::vector<double> times;
    std::vector<Curve> curves;

    // linear interpolation in time between stored snapshots
    Curve at(double t) const;
    double tmax() const { return times.empty() ? 0.0 : times.back(); }
};

FlowPath run_flow(const Curve& c0, double dt, double tmax, bool projection, int nstore = 41);

} // namespace mcac

#include "mcac/fronttrack.hpp"

#include "mcac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcac {

std::vector<double> curvature(const Curve& c) {
    validate_curve(c);
    const size_t n = c.pts.size();
    std::vector<double> k(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec2 pm = c.pts[(i + n - 1) % n];
        const Vec2 p = c.pts[i];
        const Vec2 pp = c.pts[(i + 1) % n];
        const Vec2 a = p - pm, b = pp - p, ch = pp - pm;
        const double cr = cross(a, b);
        const double lc = norm(ch);
        if (lc > 0.0 && std::abs(cr) / lc < 1e-14) {
            k[i] = 0.0; // collinear triple
            continue;
        }
        k[i] = 2.0 * cr / (norm(a) * norm(b) * lc);
    }
    return k;
}

namespace {

std::vector<double> arclength_weights(const Curve& c) {
    const size_t n = c.pts.size();
    std::vector<double> w(n);
    for (size_t i = 0; i < n; ++i) {
        const double lp = norm(c.pts[i] - c.pts[(i + n - 1) % n]);
        const double ln = norm(c.pts[(i + 1) % n] - c.pts[i]);
        w[i] = 0.5 * (lp + ln);
    }
    return w;
}

// Catmull-Rom through p0..p3 evaluated at s in [0,1] between p1 and p2.
Vec2 catmull_rom(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double s) {
    const double s2 = s * s, s3 = s2 * s;
    const double c0 = -0.5 * s3 + s2 - 0.5 * s;
    const double c1 = 1.5 * s3 - 2.5 * s2 + 1.0;
    const double c2 = -1.5 * s3 + 2.0 * s2 + 0.5 * s;
    const double c3 = 0.5 * s3 - 0.5 * s2;
    return c0 * p0 + c1 * p1 + c2 * p2 + c3 * p3;
}

bool spacing_out_of_band(const Curve& c, double target) {
    const size_t n = c.pts.size();
    for (size_t i = 0; i < n; ++i) {
        const double d = norm(c.pts[(i + 1) % n] - c.pts[i]);
        if (d < 0.5 * target || d > 2.0 * target) return true;
    }
    return false;
}

void project_area(Curve& c, double area0) {
    for (int pass = 0; pass < 3; ++pass) {
        const double dA = area0 - enclosed_area(c);
        if (std::abs(dA) < 1e-13 * std::abs(area0)) break;
        const double shift = dA / perimeter(c);
        const std::vector<Vec2> nrm = outward_normals(c);
        for (size_t i = 0; i < c.pts.size(); ++i) c.pts[i] = c.pts[i] + shift * nrm[i];
    }
}

} // namespace

Curve resample_closed(const Curve& c, size_t n_out) {
    const size_t n = c.pts.size();
    std::vector<double> cum(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i)
        cum[i + 1] = cum[i] + norm(c.pts[(i + 1) % n] - c.pts[i]);
    const double L = cum[n];
    Curve out;
    out.pts.resize(n_out);
    size_t seg = 0;
    for (size_t k = 0; k < n_out; ++k) {
        const double target = L * static_cast<double>(k) / static_cast<double>(n_out);
        while (seg + 1 < n && cum[seg + 1] <= target) ++seg;
        const double ds = cum[seg + 1] - cum[seg];
        const double s = ds > 0.0 ? (target - cum[seg]) / ds : 0.0;
        out.pts[k] = catmull_rom(c.pts[(seg + n - 1) % n], c.pts[seg], c.pts[(seg + 1) % n],
                                 c.pts[(seg + 2) % n], s);
    }
    return out;
}

double average_curvature(const Curve& c) {
    const std::vector<double> k = curvature(c);
    const std::vector<double> w = arclength_weights(c);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < k.size(); ++i) {
        num += k[i] * w[i];
        den += w[i];
    }
    return num / den;
}

std::vector<Vec2> outward_normals(const Curve& c) {
    const size_t n = c.pts.size();
    std::vector<Vec2> out(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec2 t = c.pts[(i + 1) % n] - c.pts[(i + n - 1) % n];
        const double L = std::max(norm(t), 1e-300);
        out[i] = {t.y / L, -t.x / L}; // right of tangent = outward for CCW
    }
    return out;
}

FlowState make_flow_state(const Curve& c0, double dt, bool projection) {
    validate_curve(c0);
    FlowState st;
    st.curve = c0;
    st.dt = dt;
    st.projection = projection;
    st.area0 = enclosed_area(c0);
    st.target_spacing = perimeter(c0) / static_cast<double>(c0.pts.size());
    const double min_sp = st.target_spacing; // uniform input assumed near target
    if (dt > 0.25 * min_sp * min_sp) {
        std::ostringstream os;
        os << "step_flow: dt " << dt << " exceeds 0.25*spacing^2 = " << 0.25 * min_sp * min_sp;
        throw ConfigError(os.str());
    }
    return st;
}

FlowState step_flow(const FlowState& state) {
    FlowState st = state;
    Curve& c = st.curve;
    const size_t n = c.pts.size();

    const std::vector<double> k = curvature(c);
    const std::vector<double> w = arclength_weights(c);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        num += k[i] * w[i];
        den += w[i];
    }
    const double kbar = num / den;

    const std::vector<Vec2> nrm = outward_normals(c);
    for (size_t i = 0; i < n; ++i) c.pts[i] = c.pts[i] + (st.dt * (kbar - k[i])) * nrm[i];

    if (st.projection) project_area(c, st.area0);

    bool resampled = false;
    if (spacing_out_of_band(c, st.target_spacing)) {
        c = resample_closed(c, n);
        if (st.projection) project_area(c, st.area0);
        resampled = true;
    }

    st.time += st.dt;
    ++st.step_index;
    if (resampled || st.step_index % st.check_stride == 0) {
        if (!is_simple(c)) {
            std::ostringstream os;
            os << "step_flow: curve self-intersects at t = " << st.time;
            throw SelfIntersection(os.str());
        }
    }
    return st;
}

Curve FlowPath::at(double t) const {
    if (curves.empty()) throw std::invalid_argument("FlowPath::at on empty path");
    if (t <= times.front()) return curves.front();
    if (t >= times.back()) return curves.back();
    size_t hi = 1;
    while (hi < times.size() && times[hi] < t) ++hi;
    const double w1 = (t - times[hi - 1]) / (times[hi] - times[hi - 1]);
    const Curve& a = curves[hi - 1];
    const Curve& b = curves[hi];
    Curve out;
    out.pts.resize(a.pts.size());
    for (size_t i = 0; i < a.pts.size(); ++i)
        out.pts[i] = (1.0 - w1) * a.pts[i] + w1 * b.pts[i];
    return out;
}

FlowPath run_flow(const Curve& c0, double dt, double tmax, bool projection, int nstore) {
    FlowState st = make_flow_state(c0, dt, projection);
    FlowPath path;
    path.times.push_back(0.0);
    path.curves.push_back(c0);
    if (tmax <= 0.0) return path;

    const long nsteps = static_cast<long>(std::llround(tmax / dt));
    int next_store = 1;
    try {
        for (long s = 0; s < nsteps; ++s) {
            st = step_flow(st);
            const double t = st.time;
            while (next_store < nstore &&
                   t >= tmax * next_store / static_cast<double>(nstore - 1) - 1e-12) {
                path.times.push_back(t);
                path.curves.push_back(st.curve);
                ++next_store;
            }
        }
    } catch (const SelfIntersection& e) {
        std::ostringstream os;
        os << e.what() << " (flow aborted, " << path.curves.size() << " snapshots kept)";
        throw SelfIntersection(os.str());
    }
    if (path.times.back() < st.time) {
        path.times.push_back(st.time);
        path.curves.push_back(st.curve);
    }
    return path;
}

} // namespace mcac

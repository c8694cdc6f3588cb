#include "mcac/geometry.hpp"

#include "mcac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mcac {

void validate_curve(const Curve& c) {
    if (c.pts.size() < 16) throw std::invalid_argument("Curve: fewer than 16 points");
    for (const Vec2& p : c.pts)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("Curve: non-finite vertex");
}

double enclosed_area(const Curve& c) {
    const size_t n = c.pts.size();
    double a = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = c.pts[i];
        const Vec2& q = c.pts[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

double perimeter(const Curve& c) {
    const size_t n = c.pts.size();
    double L = 0.0;
    for (size_t i = 0; i < n; ++i) L += norm(c.pts[(i + 1) % n] - c.pts[i]);
    return L;
}

namespace {

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double point_segment_dist(Vec2 p, Vec2 a, Vec2 b, double* t_out = nullptr) {
    const Vec2 ab = b - a;
    const double L2 = dot(ab, ab);
    double t = (L2 > 0.0) ? dot(p - a, ab) / L2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 q = a + t * ab;
    if (t_out) *t_out = t;
    return norm(p - q);
}

bool point_inside(const Curve& c, Vec2 p) {
    // even-odd rule, horizontal ray toward +x
    const size_t n = c.pts.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = c.pts[i];
        const Vec2& b = c.pts[(i + 1) % n];
        if ((a.y <= p.y) != (b.y <= p.y)) {
            const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

} // namespace

bool is_simple(const Curve& c) {
    const size_t n = c.pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = c.pts[i], b = c.pts[(i + 1) % n];
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue; // adjacent through the closing edge
            const Vec2 p = c.pts[j], q = c.pts[(j + 1) % n];
            if (segments_cross(a, b, p, q)) return false;
        }
    }
    return true;
}

double signed_distance(const Curve& c, Vec2 p) {
    validate_curve(c);
    const size_t n = c.pts.size();
    double dmin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        dmin = std::min(dmin, point_segment_dist(p, c.pts[i], c.pts[(i + 1) % n]));
    return point_inside(c, p) ? -dmin : dmin;
}

Field sign_field(const Curve& c, const GridSpec& spec) {
    validate_curve(c);
    Field s(spec, 1.0);
    const size_t n = c.pts.size();
    std::vector<double> xc;
    for (int j = 0; j < spec.ny; ++j) {
        const double y = spec.y(j);
        xc.clear();
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = c.pts[i];
            const Vec2& b = c.pts[(i + 1) % n];
            if ((a.y <= y) != (b.y <= y))
                xc.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        if (xc.empty()) continue;
        std::sort(xc.begin(), xc.end());
        for (size_t k = 0; k + 1 < xc.size(); k += 2) {
            int i0 = static_cast<int>(std::ceil(xc[k] / spec.hx() - 0.5));
            int i1 = static_cast<int>(std::floor(xc[k + 1] / spec.hx() - 0.5));
            i0 = std::max(i0, 0);
            i1 = std::min(i1, spec.nx - 1);
            for (int i = i0; i <= i1; ++i) s.at(i, j) = -1.0;
        }
    }
    return s;
}

DistanceField distance_field(const Curve& c, const GridSpec& spec) {
    validate_curve(c);
    const double margin = 4.0 * std::max(spec.hx(), spec.hy());
    for (const Vec2& p : c.pts) {
        const double clear = std::min(std::min(p.x, spec.Lx - p.x), std::min(p.y, spec.Ly - p.y));
        if (clear < margin) {
            std::ostringstream os;
            os << "distance_field: curve clearance " << clear << " below 4*max(h) = " << margin;
            throw CurveTouchesBoundary(os.str());
        }
    }

    const size_t nseg = c.pts.size();
    DistanceField out;
    out.d = Field(spec);
    out.seg.assign(static_cast<size_t>(spec.count()), 0);
    out.seg_t.assign(static_cast<size_t>(spec.count()), 0.0);

    std::vector<double> ax(nseg), ay(nseg), abx(nseg), aby(nseg), invL2(nseg);
    for (size_t s = 0; s < nseg; ++s) {
        const Vec2 a = c.pts[s];
        const Vec2 b = c.pts[(s + 1) % nseg];
        ax[s] = a.x;
        ay[s] = a.y;
        abx[s] = b.x - a.x;
        aby[s] = b.y - a.y;
        invL2[s] = 1.0 / std::max(abx[s] * abx[s] + aby[s] * aby[s], 1e-300);
    }

    for (int j = 0; j < spec.ny; ++j) {
        const double y = spec.y(j);
        for (int i = 0; i < spec.nx; ++i) {
            const double x = spec.x(i);
            double best = std::numeric_limits<double>::infinity();
            size_t bs = 0;
            double bt = 0.0;
            for (size_t s = 0; s < nseg; ++s) {
                const double px = x - ax[s], py = y - ay[s];
                double t = (px * abx[s] + py * aby[s]) * invL2[s];
                t = std::clamp(t, 0.0, 1.0);
                const double dx = px - t * abx[s], dy = py - t * aby[s];
                const double dd = dx * dx + dy * dy;
                if (dd < best) {
                    best = dd;
                    bs = s;
                    bt = t;
                }
            }
            const size_t k = static_cast<size_t>(j) * spec.nx + i;
            out.d.v[k] = best;
            out.seg[k] = static_cast<int>(bs);
            out.seg_t[k] = bt;
        }
    }
    const Field sgn = sign_field(c, spec);
    for (size_t k = 0; k < out.d.v.size(); ++k) out.d.v[k] = sgn.v[k] * std::sqrt(out.d.v[k]);
    return out;
}

double phase_area(const Field& u) {
    Field half(u.spec);
    for (size_t k = 0; k < u.v.size(); ++k) half.v[k] = 0.5 * (1.0 - u.v[k]);
    return integrate(half);
}

// ---------------------------------------------------------------------------
// marching squares
// ---------------------------------------------------------------------------
namespace {

// lattice edge id; horizontal edges first, then vertical
long edge_id(bool horizontal, int i, int j, int nx) {
    const long base = static_cast<long>(j) * nx + i;
    return horizontal ? base : base + static_cast<long>(nx) * 100000000L;
}

struct MsSegment {
    long start_edge, end_edge;
    Vec2 start, end;
};

} // namespace

std::vector<Curve> extract_zero_levelset(const Field& u, int* discarded_open) {
    const int nx = u.spec.nx, ny = u.spec.ny;
    const auto node = [&](int i, int j) { return Vec2{u.spec.x(i), u.spec.y(j)}; };
    const auto inside = [&](int i, int j) { return u.at(i, j) < 0.0; };

    const auto cross_h = [&](int i, int j) { // on edge (i,j)-(i+1,j)
        const double ua = u.at(i, j), ub = u.at(i + 1, j);
        const double t = ua / (ua - ub);
        const Vec2 a = node(i, j), b = node(i + 1, j);
        return a + t * (b - a);
    };
    const auto cross_v = [&](int i, int j) { // on edge (i,j)-(i,j+1)
        const double ua = u.at(i, j), ub = u.at(i, j + 1);
        const double t = ua / (ua - ub);
        const Vec2 a = node(i, j), b = node(i, j + 1);
        return a + t * (b - a);
    };

    std::vector<MsSegment> segs;
    std::unordered_map<long, int> by_start;

    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            int mask = 0;
            if (inside(i, j)) mask |= 1;
            if (inside(i + 1, j)) mask |= 2;
            if (inside(i + 1, j + 1)) mask |= 4;
            if (inside(i, j + 1)) mask |= 8;
            if (mask == 0 || mask == 15) continue;

            const long S = edge_id(true, i, j, nx);
            const long N = edge_id(true, i, j + 1, nx);
            const long W = edge_id(false, i, j, nx);
            const long E = edge_id(false, i + 1, j, nx);

            const auto add = [&](long e0, long e1, Vec2 p0, Vec2 p1) {
                by_start[e0] = static_cast<int>(segs.size());
                segs.push_back({e0, e1, p0, p1});
            };

            switch (mask) {
                case 1: add(S, W, cross_h(i, j), cross_v(i, j)); break;
                case 2: add(E, S, cross_v(i + 1, j), cross_h(i, j)); break;
                case 3: add(E, W, cross_v(i + 1, j), cross_v(i, j)); break;
                case 4: add(N, E, cross_h(i, j + 1), cross_v(i + 1, j)); break;
                case 6: add(N, S, cross_h(i, j + 1), cross_h(i, j)); break;
                case 7: add(N, W, cross_h(i, j + 1), cross_v(i, j)); break;
                case 8: add(W, N, cross_v(i, j), cross_h(i, j + 1)); break;
                case 9: add(S, N, cross_h(i, j), cross_h(i, j + 1)); break;
                case 11: add(E, N, cross_v(i + 1, j), cross_h(i, j + 1)); break;
                case 12: add(W, E, cross_v(i, j), cross_v(i + 1, j)); break;
                case 13: add(S, E, cross_h(i, j), cross_v(i + 1, j)); break;
                case 14: add(W, S, cross_v(i, j), cross_h(i, j)); break;
                case 5: { // saddle: resolve with the center average
                    const double uc = 0.25 * (u.at(i, j) + u.at(i + 1, j) + u.at(i + 1, j + 1) +
                                              u.at(i, j + 1));
                    if (uc < 0.0) {
                        add(S, E, cross_h(i, j), cross_v(i + 1, j));
                        add(N, W, cross_h(i, j + 1), cross_v(i, j));
                    } else {
                        add(S, W, cross_h(i, j), cross_v(i, j));
                        add(N, E, cross_h(i, j + 1), cross_v(i + 1, j));
                    }
                    break;
                }
                case 10: {
                    const double uc = 0.25 * (u.at(i, j) + u.at(i + 1, j) + u.at(i + 1, j + 1) +
                                              u.at(i, j + 1));
                    if (uc < 0.0) {
                        add(E, N, cross_v(i + 1, j), cross_h(i, j + 1));
                        add(W, S, cross_v(i, j), cross_h(i, j));
                    } else {
                        add(E, S, cross_v(i + 1, j), cross_h(i, j));
                        add(W, N, cross_v(i, j), cross_h(i, j + 1));
                    }
                    break;
                }
                default: break;
            }
        }
    }

    std::vector<bool> used(segs.size(), false);
    std::vector<Curve> closed;
    int open_count = 0;

    for (size_t s0 = 0; s0 < segs.size(); ++s0) {
        if (used[s0]) continue;
        Curve loop;
        size_t cur = s0;
        bool is_closed = false;
        while (!used[cur]) {
            used[cur] = true;
            loop.pts.push_back(segs[cur].start);
            const auto it = by_start.find(segs[cur].end_edge);
            if (it == by_start.end()) break; // ran into the lattice boundary
            cur = static_cast<size_t>(it->second);
            if (cur == s0) {
                is_closed = true;
                break;
            }
        }
        if (is_closed && loop.pts.size() >= 3)
            closed.push_back(std::move(loop));
        else
            ++open_count;
    }
    if (discarded_open) *discarded_open = open_count;
    return closed;
}

void write_curve_csv(const std::string& path, const Curve& c) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_curve_csv: cannot open " + path);
    out << "x,y\n";
    char buf[96];
    for (const Vec2& p : c.pts) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
        out << buf;
    }
}

Curve read_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("read_curve_csv: cannot open " + path);
    std::string line;
    std::getline(in, line);
    if (line != "x,y") throw ConfigError("read_curve_csv: bad header in " + path);
    Curve c;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("read_curve_csv: bad row in " + path);
        c.pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return c;
}

Curve make_circle(Vec2 center, double radius, int npoints) {
    return make_ellipse(center, radius, radius, npoints);
}

Curve make_ellipse(Vec2 center, double a, double b, int npoints) {
    Curve c;
    c.pts.resize(npoints);
    for (int k = 0; k < npoints; ++k) {
        const double t = 2.0 * M_PI * k / npoints;
        c.pts[k] = {center.x + a * std::cos(t), center.y + b * std::sin(t)};
    }
    return c;
}

} // namespace mcac

#pragma once

#include "mcac/grid.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace mcac {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Closed oriented polyline (last vertex connects to first); positive
// orientation keeps the enclosed region on the left.
struct Curve {
    std::vector<Vec2> pts;
};

void validate_curve(const Curve& c); // >= 16 points, finite coordinates

double enclosed_area(const Curve& c); // shoelace, signed
double perimeter(const Curve& c);
bool is_simple(const Curve& c); // segment-pair sweep, adjacent pairs skipped

// Exact point-to-polyline distance, negative inside (even-odd containment).
double signed_distance(const Curve& c, Vec2 p);

// Signed distance at every cell center plus nearest-segment bookkeeping for
// curvature lookups along the foot point.
struct DistanceField {
    Field d;
    std::vector<int> seg;      // nearest segment index per cell
    std::vector<double> seg_t; // parameter in [0,1] along that segment
};

DistanceField distance_field(const Curve& c, const GridSpec& spec);

// +1 outside / -1 inside by scanline parity; the sign pattern of
// distance_field at a fraction of the cost.
Field sign_field(const Curve& c, const GridSpec& spec);

// Marching squares on the cell-center lattice with linear edge interpolation.
// Closed contours are returned positively oriented around the u < 0 region;
// chains touching the lattice boundary are discarded and counted.
std::vector<Curve> extract_zero_levelset(const Field& u, int* discarded_open = nullptr);

// Area of the u ~ -1 phase: integrate((1-u)/2).
double phase_area(const Field& u);

void write_curve_csv(const std::string& path, const Curve& c);
Curve read_curve_csv(const std::string& path);

Curve make_circle(Vec2 center, double radius, int npoints);
Curve make_ellipse(Vec2 center, double a, double b, int npoints);

} // namespace mcac

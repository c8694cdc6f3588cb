#include "mcac/diagnostics.hpp"

#include "mcac/errors.hpp"
#include "mcac/potential.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mcac {

void write_timeseries_csv(const std::string& path, const std::vector<TimeSeriesRecord>& records) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_timeseries_csv: cannot open " + path);
    out << kTimeSeriesHeader << '\n';
    char buf[512];
    for (const TimeSeriesRecord& r : records) {
        std::snprintf(buf, sizeof(buf),
                      "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.step,
                      r.time, r.mass, r.lambda, r.area_levelset, r.area_phase, r.gl_energy,
                      r.l2_err_step, r.l2_err_approx, r.levelset_count);
        out << buf;
    }
}

double l2_error(const Field& a, const Field& b) {
    std::vector<double> sq(a.v.size());
    for (size_t k = 0; k < a.v.size(); ++k) {
        const double d = a.v[k] - b.v[k];
        sq[k] = d * d;
    }
    return std::sqrt(a.spec.hx() * a.spec.hy() * compensated_sum(sq));
}

double l2_error_vs_step(const Field& u, const Curve& curve) {
    const Field ut = sign_field(curve, u.spec);
    return l2_error(u, ut);
}

double gl_energy(const Field& u, double eps) {
    const int nx = u.spec.nx, ny = u.spec.ny;
    const double ihx = 1.0 / (2.0 * u.spec.hx());
    const double ihy = 1.0 / (2.0 * u.spec.hy());
    std::vector<double> dens(u.v.size());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double c = u.at(i, j);
            const double w = (i > 0) ? u.at(i - 1, j) : c;
            const double e = (i < nx - 1) ? u.at(i + 1, j) : c;
            const double s = (j > 0) ? u.at(i, j - 1) : c;
            const double n = (j < ny - 1) ? u.at(i, j + 1) : c;
            const double gx = (e - w) * ihx;
            const double gy = (n - s) * ihy;
            dens[static_cast<size_t>(j) * nx + i] =
                0.5 * eps * (gx * gx + gy * gy) + potential::W(c) / eps;
        }
    }
    return u.spec.hx() * u.spec.hy() * compensated_sum(dens);
}

VolumeDrift volume_drift(const std::vector<TimeSeriesRecord>& records) {
    if (records.size() < 2)
        throw std::invalid_argument("volume_drift: need at least 2 records");
    const double a0 = records.front().area_levelset;
    const double p0 = records.front().area_phase;
    VolumeDrift d;
    for (const TimeSeriesRecord& r : records) {
        d.max_rel_levelset = std::max(d.max_rel_levelset, std::abs(r.area_levelset - a0) /
                                                              std::abs(a0));
        d.max_rel_phase = std::max(d.max_rel_phase, std::abs(r.area_phase - p0) / std::abs(p0));
    }
    return d;
}

LevelsetSummary levelset_summary(const Field& u) {
    const std::vector<Curve> loops = extract_zero_levelset(u);
    LevelsetSummary s;
    s.count = static_cast<int>(loops.size());
    for (const Curve& c : loops) s.area = std::max(s.area, std::abs(enclosed_area(c)));
    return s;
}

// ---------------------------------------------------------------------------
// spectral probe
// ---------------------------------------------------------------------------
namespace {

// -lap + diag(q) - sigma in LAPACK column-major lower band storage:
// ab[j*(kd+1) + d] = A(j+d, j), d = 0..kd, kd = nx.
struct BandedOp {
    int nx, ny;
    lapack_int n, kd, ldab;
    double ax, ay;
    std::vector<double> q;
    std::vector<double> ab;

    BandedOp(const GridSpec& spec, std::vector<double> qdiag)
        : nx(spec.nx), ny(spec.ny), n(static_cast<lapack_int>(spec.count())), kd(spec.nx),
          ldab(spec.nx + 1), q(std::move(qdiag)) {
        ax = 1.0 / (spec.hx() * spec.hx());
        ay = 1.0 / (spec.hy() * spec.hy());
        ab.resize(static_cast<size_t>(ldab) * n);
    }

    double diag_entry(int i, int j) const {
        double d = 2.0 * ax + 2.0 * ay;
        if (i == 0 || i == nx - 1) d -= ax; // reflective closure
        if (j == 0 || j == ny - 1) d -= ay;
        return d + q[static_cast<size_t>(j) * nx + i];
    }

    bool factor(double sigma) {
        std::fill(ab.begin(), ab.end(), 0.0);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const size_t col = static_cast<size_t>(j) * nx + i;
                double* c = &ab[col * ldab];
                c[0] = diag_entry(i, j) - sigma;
                if (i + 1 < nx) c[1] = -ax;
                if (static_cast<lapack_int>(col) + kd < n) c[kd] = -ay;
            }
        }
        return LAPACKE_dpbtrf(LAPACK_COL_MAJOR, 'L', n, kd, ab.data(), ldab) == 0;
    }

    void solve(std::vector<double>& x) const {
        LAPACKE_dpbtrs(LAPACK_COL_MAJOR, 'L', n, kd, 1, ab.data(), ldab, x.data(), n);
    }

    // y = (-lap + q) x  (no shift)
    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const size_t k = static_cast<size_t>(j) * nx + i;
                double acc = diag_entry(i, j) * x[k];
                if (i > 0) acc -= ax * x[k - 1];
                if (i < nx - 1) acc -= ax * x[k + 1];
                if (j > 0) acc -= ay * x[k - nx];
                if (j < ny - 1) acc -= ay * x[k + nx];
                y[k] = acc;
            }
        }
    }
};

double dot_v(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

void normalize(std::vector<double>& v) {
    const double n = std::sqrt(dot_v(v, v));
    for (double& x : v) x /= n;
}

} // namespace

double spectral_lower_bound(const Field& u_k, double eps, double ratio) {
    const GridSpec& spec = u_k.spec;
    if (spec.count() > 128L * 128L)
        throw std::invalid_argument("spectral_lower_bound: grid above the 128^2 budget");

    std::vector<double> q(u_k.v.size());
    const double ie2 = 1.0 / (eps * eps);
    double qmin = std::numeric_limits<double>::infinity();
    double qmax = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < q.size(); ++k) {
        q[k] = -ie2 * (potential::fprime(u_k.v[k]) + ratio * 2.0 * u_k.v[k]);
        qmin = std::min(qmin, q[k]);
        qmax = std::max(qmax, q[k]);
    }

    BandedOp op(spec, std::move(q));

    // lambda_min >= qmin since -lap is positive semidefinite; a Cholesky
    // success at sigma certifies sigma < lambda_min, a failure certifies
    // sigma >= lambda_min, so [lo, hi] always brackets lambda_min.
    double lo = qmin - 1.0;
    double hi = qmax + 4.0 * ie2 + 4.0 / (spec.hx() * spec.hx()) + 4.0 / (spec.hy() * spec.hy());
    double sigma = lo;

    const size_t n = static_cast<size_t>(spec.count());
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(n), resid(n);

    const double rel_tol = 1e-6;

    for (int outer = 0; outer < 80; ++outer) {
        if (!op.factor(sigma)) {
            hi = sigma;
            sigma = 0.5 * (lo + hi);
            continue;
        }
        lo = std::max(lo, sigma);

        double theta = 0.0, theta_prev = std::numeric_limits<double>::infinity();
        for (int inner = 0; inner < 40; ++inner) {
            op.solve(v);
            normalize(v);
            op.apply(v, av);
            theta = dot_v(v, av);
            for (size_t k = 0; k < n; ++k) resid[k] = av[k] - theta * v[k];
            if (std::sqrt(dot_v(resid, resid)) <= rel_tol * std::max(1.0, std::abs(theta)))
                return theta;
            if (std::abs(theta - theta_prev) <= 1e-3 * std::max(1.0, std::abs(theta)))
                break; // stagnating at this shift, move the shift instead
            theta_prev = theta;
        }

        hi = std::min(hi, theta); // Rayleigh quotient bounds lambda_min from above
        const double proposal = theta - 1e-3 * std::max(1.0, std::abs(theta));
        sigma = (proposal > lo && proposal < hi) ? proposal : 0.5 * (lo + hi);
    }
    throw EigSolverStall("spectral_lower_bound: not converged within iteration budget");
}

} // namespace mcac

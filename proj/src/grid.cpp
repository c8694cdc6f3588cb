#include "mcac/grid.hpp"

#include "mcac/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <sstream>

namespace mcac {

Field laplacian(const Field& u) {
    const int nx = u.spec.nx, ny = u.spec.ny;
    const double ax = 1.0 / (u.spec.hx() * u.spec.hx());
    const double ay = 1.0 / (u.spec.hy() * u.spec.hy());
    Field out(u.spec);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double c = u.at(i, j);
            const double w = (i > 0) ? u.at(i - 1, j) : c;
            const double e = (i < nx - 1) ? u.at(i + 1, j) : c;
            const double s = (j > 0) ? u.at(i, j - 1) : c;
            const double n = (j < ny - 1) ? u.at(i, j + 1) : c;
            out.at(i, j) = ax * (w + e - 2.0 * c) + ay * (s + n - 2.0 * c);
        }
    }
    return out;
}

Field apply_helmholtz(const Field& v, double tau) {
    Field lv = laplacian(v);
    Field out(v.spec);
    for (size_t k = 0; k < v.v.size(); ++k) out.v[k] = v.v[k] - tau * lv.v[k];
    return out;
}

double compensated_sum(const std::vector<double>& v) {
    // Neumaier variant
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

double integrate(const Field& u) { return u.spec.hx() * u.spec.hy() * compensated_sum(u.v); }

double mean(const Field& u) { return compensated_sum(u.v) / static_cast<double>(u.spec.count()); }

double max_abs(const Field& u) {
    double m = 0.0;
    for (double x : u.v) m = std::max(m, std::abs(x));
    return m;
}

struct HelmholtzSolver::Impl {
    GridSpec spec;
    std::vector<double> work;
    std::vector<double> eig; // lambda_x(i) + lambda_y(j), eigenvalues of -laplacian
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

HelmholtzSolver::HelmholtzSolver(const GridSpec& spec) : impl_(std::make_unique<Impl>()) {
    impl_->spec = spec;
    const int nx = spec.nx, ny = spec.ny;
    impl_->work.resize(static_cast<size_t>(spec.count()));
    impl_->eig.resize(static_cast<size_t>(spec.count()));
    const double hx2 = spec.hx() * spec.hx();
    const double hy2 = spec.hy() * spec.hy();
    for (int j = 0; j < ny; ++j) {
        const double ly = (2.0 - 2.0 * std::cos(M_PI * j / ny)) / hy2;
        for (int i = 0; i < nx; ++i) {
            const double lx = (2.0 - 2.0 * std::cos(M_PI * i / nx)) / hx2;
            impl_->eig[static_cast<size_t>(j) * nx + i] = lx + ly;
        }
    }
    // FFTW_ESTIMATE keeps plan choice deterministic across runs
    impl_->fwd = fftw_plan_r2r_2d(ny, nx, impl_->work.data(), impl_->work.data(),
                                  FFTW_REDFT10, FFTW_REDFT10, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_r2r_2d(ny, nx, impl_->work.data(), impl_->work.data(),
                                  FFTW_REDFT01, FFTW_REDFT01, FFTW_ESTIMATE);
}

HelmholtzSolver::~HelmholtzSolver() {
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

const GridSpec& HelmholtzSolver::spec() const { return impl_->spec; }

Field HelmholtzSolver::solve(const Field& g, double tau) {
    const GridSpec& spec = impl_->spec;
    const double norm = 1.0 / (4.0 * static_cast<double>(spec.nx) * spec.ny);

    impl_->work = g.v;
    fftw_execute(impl_->fwd);
    for (size_t k = 0; k < impl_->work.size(); ++k)
        impl_->work[k] *= norm / (1.0 + tau * impl_->eig[k]);
    fftw_execute(impl_->bwd);

    Field v(spec);
    v.v = impl_->work;

    const double shift = mean(g) - mean(v);
    for (double& x : v.v) x += shift;

    const Field res = apply_helmholtz(v, tau);
    double rmax = 0.0;
    for (size_t k = 0; k < res.v.size(); ++k) rmax = std::max(rmax, std::abs(res.v[k] - g.v[k]));
    const double bound = 1e-10 * max_abs(g);
    if (rmax > bound && rmax > 1e-300) {
        std::ostringstream os;
        os << "helmholtz_solve: residual " << rmax << " exceeds " << bound;
        throw SolverDivergence(os.str());
    }
    return v;
}

} // namespace mcac

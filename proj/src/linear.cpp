#include "thinfilm/linear.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

#include "thinfilm/quadrature.hpp"

namespace thinfilm {

namespace {

// FFTW's planner is not thread-safe; executions on plan-owned arrays are
// serialized together with planning for simplicity (the transforms are a
// negligible fraction of a run).
std::mutex fftw_mutex;

// Forward r2c transform, apply op(k, K, re, im) to each retained mode, inverse.
template <class Op>
std::vector<double> spectral_apply(const Field& f, Op&& op) {
    const int n = f.grid.n;
    const int nk = n / 2 + 1;
    const double length = f.grid.length();

    std::lock_guard<std::mutex> lock(fftw_mutex);
    double* in = fftw_alloc_real(n);
    fftw_complex* spec = fftw_alloc_complex(nk);
    fftw_plan fwd = fftw_plan_dft_r2c_1d(n, in, spec, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_c2r_1d(n, spec, in, FFTW_ESTIMATE);

    for (int i = 0; i < n; ++i) in[i] = f.values[i];
    fftw_execute(fwd);
    for (int k = 0; k < nk; ++k) {
        const double wavenumber = 2.0 * M_PI * k / length;
        op(k, wavenumber, spec[k][0], spec[k][1]);
    }
    fftw_execute(bwd);

    std::vector<double> out(n);
    const double ninv = 1.0 / n;
    for (int i = 0; i < n; ++i) out[i] = in[i] * ninv;

    fftw_destroy_plan(bwd);
    fftw_destroy_plan(fwd);
    fftw_free(spec);
    fftw_free(in);
    return out;
}

} // namespace

Field evolve_linear(const Field& initial, double t, int m) {
    if (!(t > 0.0)) throw DomainError("evolve_linear: T must be positive");
    if (m < 1) throw DomainError("evolve_linear: m must be >= 1");
    require_decay(initial, "evolve_linear");

    auto out = spectral_apply(initial, [&](int, double k, double& re, double& im) {
        const double damp = std::exp(-std::pow(k, 2 * m) * t);
        re *= damp;
        im *= damp;
    });
    Field result(initial.grid, std::move(out), initial.time + t, FieldKind::excess);
    if (!decays_at_boundary(result))
        throw WrapAroundError("evolve_linear: evolved profile reached the domain edge; "
                              "enlarge the grid for this T");
    return result;
}

Field spectral_derivative(const Field& f, int) {
    const int nk = f.grid.n / 2 + 1;
    auto out = spectral_apply(f, [&](int k, double wavenumber, double& re, double& im) {
        if (k == nk - 1 && f.grid.n % 2 == 0) {
            re = 0.0; // drop the unmatched Nyquist mode
            im = 0.0;
            return;
        }
        const double r = re, i = im;
        re = -wavenumber * i;
        im = wavenumber * r;
    });
    return Field(f.grid, std::move(out), f.time, f.kind);
}

double evolve_semigroup_check(const Field& initial, double t1, double t2, int m) {
    if (!(t1 > 0.0 && t2 > 0.0))
        throw DomainError("evolve_semigroup_check: T1, T2 must be positive");
    const Field direct = evolve_linear(initial, t1 + t2, m);
    const Field composed = evolve_linear(evolve_linear(initial, t1, m), t2, m);
    double worst = 0.0;
    for (int i = 0; i < initial.grid.n; ++i)
        worst = std::max(worst, std::fabs(direct.values[i] - composed.values[i]));
    return worst;
}

double derivative_evolution_check(const Field& initial, double t, int m) {
    const Field a = evolve_linear(spectral_derivative(initial, m), t, m);
    const Field b = spectral_derivative(evolve_linear(initial, t, m), m);
    double worst = 0.0;
    for (int i = 0; i < initial.grid.n; ++i)
        worst = std::max(worst, std::fabs(a.values[i] - b.values[i]));
    return worst;
}

double step_solution(double u, double theta0, double quad_tol) {
    const double qmax = std::pow(18.0 * std::log(10.0), 0.25);
    const double integral = integrate_damped_oscillatory(
        [&](double q) {
            const double damped = std::exp(-std::pow(q, 4));
            // sin(qU)/q is smooth through q = 0
            return q < 1e-12 ? damped * u : damped * std::sin(q * u) / q;
        },
        qmax, u, quad_tol);
    return 0.5 * theta0 * (1.0 + (2.0 / M_PI) * integral);
}

double algebraic_volume(const Field& f) {
    require_decay(f, "algebraic_volume");
    double sum = 0.0;
    for (double v : f.values) sum += v;
    return sum * f.grid.dx;
}

double first_moment(const Field& f) {
    require_decay(f, "first_moment");
    double sum = 0.0;
    for (int i = 0; i < f.grid.n; ++i) sum += f.grid.x(i) * f.values[i];
    return -sum * f.grid.dx;
}

double h1_seminorm(const Field& f) {
    const Field d = spectral_derivative(f);
    double sum = 0.0;
    for (double v : d.values) sum += v * v;
    return sum * f.grid.dx;
}

} // namespace thinfilm

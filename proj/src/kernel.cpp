#include "thinfilm/kernel.hpp"

#include <cmath>

#include "thinfilm/parallel.hpp"
#include "thinfilm/quadrature.hpp"

namespace thinfilm {

namespace {

// 0H2({a,b}, w) = sum_k w^k / ((a)_k (b)_k k!), summed until the next term
// drops below tol relative to the running partial sum.
double hyp0h2(double a, double b, double w, double tol, int term_cap) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < term_cap; ++k) {
        term *= w / ((a + k) * (b + k) * (k + 1));
        sum += term;
        if (std::fabs(term) <= tol * std::fabs(sum)) return sum;
    }
    throw ToleranceError("hyp0h2: term cap reached before convergence");
}

double truncation_qmax(int m) {
    // exp(-q^(2m)) < 1e-18 beyond this point
    return std::pow(18.0 * std::log(10.0), 1.0 / (2.0 * m));
}

void check_spec(const KernelSpec& spec) {
    if (spec.m < 1) throw DomainError("KernelSpec: m must be >= 1");
    if (!(spec.series_tol > 0.0 && spec.series_tol <= 1e-3))
        throw DomainError("KernelSpec: series_tol must be in (0, 1e-3]");
    if (!(spec.quad_tol > 0.0 && spec.quad_tol <= 1e-3))
        throw DomainError("KernelSpec: quad_tol must be in (0, 1e-3]");
    if (!(spec.u_switch > 0.0))
        throw DomainError("KernelSpec: u_switch must be positive");
}

} // namespace

KernelSpec KernelSpec::make(int m, KernelMethod method, double series_tol,
                            double quad_tol, double u_switch) {
    KernelSpec spec{m, method, series_tol, quad_tol, u_switch};
    check_spec(spec);
    if (method == KernelMethod::automatic && m == 2) {
        // Series and quadrature must agree on the crossover band.
        const double band_lo = 0.75 * u_switch;
        const double agree_tol = std::max(series_tol, quad_tol);
        for (int i = 0; i <= 4; ++i) {
            const double u = band_lo + i * (u_switch - band_lo) / 4.0;
            const double s = phi_series(u, series_tol, u_switch);
            const double q = phi_quadrature(u, spec);
            if (std::fabs(s - q) > agree_tol)
                throw DomainError("KernelSpec: series/quadrature disagree on the "
                                  "crossover band; lower u_switch");
        }
    }
    return spec;
}

double phi_series(double u, double tol, double u_max) {
    if (!(tol > 0.0 && tol <= 1e-3))
        throw DomainError("phi_series: tol must be in (0, 1e-3]");
    if (std::fabs(u) > u_max)
        throw DomainError("phi_series: |U| outside the series validity range");
    const int term_cap = 200;
    const double w = std::pow(u / 4.0, 4);
    const double first = std::tgamma(1.25) * hyp0h2(0.5, 0.75, w, tol, term_cap);
    const double second =
        (u * u / 8.0) * std::tgamma(0.75) * hyp0h2(1.25, 1.5, w, tol, term_cap);
    return (first - second) / M_PI;
}

double phi_quadrature(double u, const KernelSpec& spec) {
    check_spec(spec);
    const double qmax = truncation_qmax(spec.m);
    const int p = 2 * spec.m;
    const double au = std::fabs(u);
    const double integral = integrate_damped_oscillatory(
        [&](double q) { return std::exp(-std::pow(q, p)) * std::cos(q * au); }, qmax, au,
        spec.quad_tol * M_PI / 2.0);
    return integral / M_PI;
}

double phi_derivative(double u, int n, const KernelSpec& spec) {
    check_spec(spec);
    if (n < 0 || n > 4)
        throw DomainError("phi_derivative: n must be in [0, 4]");
    if (n == 0) return phi_quadrature(u, spec);
    const double qmax = truncation_qmax(spec.m);
    const int p = 2 * spec.m;
    const double phase = n * M_PI / 2.0;
    const double integral = integrate_damped_oscillatory(
        [&](double q) {
            return std::pow(q, n) * std::exp(-std::pow(q, p)) * std::cos(q * u + phase);
        },
        qmax, u, spec.quad_tol * M_PI / 2.0);
    return integral / M_PI;
}

double phi(double u, const KernelSpec& spec) {
    switch (spec.method) {
        case KernelMethod::series:
            if (spec.m != 2)
                throw DomainError("phi: the series form applies to m=2 only");
            return phi_series(u, spec.series_tol, spec.u_switch);
        case KernelMethod::quadrature:
            return phi_quadrature(u, spec);
        case KernelMethod::automatic:
            if (spec.m == 2 && std::fabs(u) <= spec.u_switch)
                return phi_series(u, spec.series_tol, spec.u_switch);
            return phi_quadrature(u, spec);
    }
    throw DomainError("phi: unknown method");
}

double green(double x, double t, const KernelSpec& spec) {
    if (!(t > 0.0)) throw DomainError("green: T must be positive");
    const auto [alpha, beta] = SimilarityExponents::for_order(spec.m);
    return std::pow(t, -beta) * phi(x * std::pow(t, -alpha), spec);
}

std::vector<double> phi_grid(std::span<const double> u, const KernelSpec& spec) {
    std::vector<double> out(u.size());
    const int nt = thread_cap();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (long i = 0; i < (long)u.size(); ++i) out[i] = phi(u[i], spec);
    return out;
}

std::vector<double> phi_grid_serial(std::span<const double> u, const KernelSpec& spec) {
    std::vector<double> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = phi(u[i], spec);
    return out;
}

std::vector<double> phi_derivative_grid(std::span<const double> u, int n,
                                        const KernelSpec& spec) {
    std::vector<double> out(u.size());
    const int nt = thread_cap();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (long i = 0; i < (long)u.size(); ++i) out[i] = phi_derivative(u[i], n, spec);
    return out;
}

} // namespace thinfilm

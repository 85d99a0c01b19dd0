#include "thinfilm/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "thinfilm/linear.hpp"
#include "thinfilm/parallel.hpp"

namespace thinfilm {

namespace {

double l1_norm(const Field& f) {
    double sum = 0.0;
    for (double v : f.values) sum += std::fabs(v);
    return sum * f.grid.dx;
}

double value_at_origin(const Field& f) {
    // linear interpolation at X = 0
    const double pos = (0.0 - f.grid.x_min) / f.grid.dx;
    const int i = std::clamp((int)std::floor(pos), 0, f.grid.n - 2);
    const double w = pos - i;
    return (1.0 - w) * f.values[i] + w * f.values[i + 1];
}

double reference_value(double u, AttractorRef ref, const KernelSpec& spec, double phi0) {
    switch (ref) {
        case AttractorRef::phi: return phi(u, spec);
        case AttractorRef::phi_over_phi0: return phi(u, spec) / phi0;
        case AttractorRef::phi_derivative_1: return phi_derivative(u, 1, spec);
    }
    throw DomainError("reference_value: unknown reference");
}

std::vector<double> pointwise_errors(const RescaledProfile& p, AttractorRef ref,
                                     const KernelSpec& spec) {
    const double phi0 =
        (ref == AttractorRef::phi_over_phi0) ? phi(0.0, spec) : 1.0;
    std::vector<double> err(p.u.size());
    const int nt = thread_cap();
#pragma omp parallel for schedule(dynamic, 32) num_threads(nt)
    for (long i = 0; i < (long)p.u.size(); ++i)
        err[i] = p.f[i] - reference_value(p.u[i], ref, spec, phi0);
    return err;
}

std::vector<double> pointwise_errors_serial(const RescaledProfile& p, AttractorRef ref,
                                            const KernelSpec& spec) {
    const double phi0 =
        (ref == AttractorRef::phi_over_phi0) ? phi(0.0, spec) : 1.0;
    std::vector<double> err(p.u.size());
    for (size_t i = 0; i < p.u.size(); ++i)
        err[i] = p.f[i] - reference_value(p.u[i], ref, spec, phi0);
    return err;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

// Composite-Simpson values of the a(T) outer integral at a given resolution.
// The inner Y integral is the grid sum the bound is stated with.
double a_bound_outer(const Field& delta0, double t, long nodes, bool parallel) {
    const double qmax = std::pow(18.0 * std::log(10.0), 0.25);
    const double t_quarter = std::pow(t, 0.25);
    const Grid1D& g = delta0.grid;

    auto inner = [&](double q) {
        double s = 0.0;
        for (int i = 0; i < g.n; ++i) {
            const double v = delta0.values[i];
            if (v == 0.0) continue;
            s += 2.0 * std::fabs(std::sin(q * g.x(i) / (2.0 * t_quarter))) * std::fabs(v);
        }
        return std::exp(-std::pow(q, 4)) * s * g.dx;
    };

    // 2*nodes+1 Simpson points on [0, qmax]; factor 2 restores the full Q axis
    const long npts = 2 * nodes + 1;
    const double h = qmax / (npts - 1);
    std::vector<double> vals(npts);
    if (parallel) {
        const int nt = thread_cap();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long i = 0; i < npts; ++i) vals[i] = inner(i * h);
    } else {
        for (long i = 0; i < npts; ++i) vals[i] = inner(i * h);
    }
    double sum = vals[0] + vals[npts - 1];
    for (long i = 1; i < npts - 1; ++i) sum += (i % 2 ? 4.0 : 2.0) * vals[i];
    return 2.0 * sum * h / 3.0;
}

double a_bound_impl(const Field& delta0, double t, bool parallel) {
    require_decay(delta0, "a_bound");
    if (!(t > 0.0)) throw DomainError("a_bound: T must be positive");

    // resolve the oscillation of the inner sum in Q
    double ymax = 0.0;
    for (int i = 0; i < delta0.grid.n; ++i)
        if (delta0.values[i] != 0.0) ymax = std::max(ymax, std::fabs(delta0.grid.x(i)));
    const double freq = ymax / (2.0 * std::pow(t, 0.25));
    long nodes = std::max<long>(64, (long)(8.0 * freq) + 1);

    double prev = a_bound_outer(delta0, t, nodes, parallel);
    for (int round = 0; round < 12; ++round) {
        nodes *= 2;
        const double next = a_bound_outer(delta0, t, nodes, parallel);
        if (std::fabs(next - prev) <= 1e-9 * std::max(1.0, std::fabs(next))) return next;
        prev = next;
    }
    throw ToleranceError("a_bound: outer quadrature failed to converge");
}

} // namespace

AttractorRef attractor_for(Normalisation norm) {
    switch (norm) {
        case Normalisation::by_volume: return AttractorRef::phi;
        case Normalisation::by_peak: return AttractorRef::phi_over_phi0;
        case Normalisation::by_first_moment: return AttractorRef::phi_derivative_1;
    }
    throw DomainError("attractor_for: unknown normalisation");
}

RescaledProfile rescale(const Field& delta, Normalisation norm, int m) {
    if (!(delta.time > 0.0)) throw DomainError("rescale: time must be positive");
    if (m < 1) throw DomainError("rescale: m must be >= 1");
    const double beta = 1.0 / (2.0 * m);
    const double t_alpha = std::pow(delta.time, beta); // alpha = beta

    RescaledProfile p;
    p.time = delta.time;
    p.normalisation = norm;
    p.u.resize(delta.grid.n);
    p.f.resize(delta.grid.n);
    for (int i = 0; i < delta.grid.n; ++i) p.u[i] = delta.grid.x(i) / t_alpha;

    switch (norm) {
        case Normalisation::by_volume: {
            const double m0 = algebraic_volume(delta);
            if (std::fabs(m0) <= 1e-8 * l1_norm(delta))
                throw ZeroVolumeError("rescale: volume is (near) zero; use by_first_moment");
            p.scale = m0;
            for (int i = 0; i < delta.grid.n; ++i)
                p.f[i] = t_alpha * delta.values[i] / m0;
            break;
        }
        case Normalisation::by_peak: {
            const double peak = value_at_origin(delta);
            if (peak == 0.0) throw DomainError("rescale: profile vanishes at X = 0");
            p.scale = peak;
            for (int i = 0; i < delta.grid.n; ++i) p.f[i] = delta.values[i] / peak;
            break;
        }
        case Normalisation::by_first_moment: {
            const double m0 = algebraic_volume(delta);
            if (std::fabs(m0) > 1e-8 * l1_norm(delta))
                throw DomainError("rescale: by_first_moment requires zero volume");
            const double m1 = first_moment(delta);
            if (m1 == 0.0) throw DomainError("rescale: first moment vanishes");
            p.scale = m1;
            const double t_2beta = t_alpha * t_alpha;
            for (int i = 0; i < delta.grid.n; ++i)
                p.f[i] = t_2beta * delta.values[i] / m1;
            break;
        }
    }
    return p;
}

double sup_distance(const RescaledProfile& p, AttractorRef ref, const KernelSpec& spec) {
    return max_abs(pointwise_errors(p, ref, spec));
}

double sup_distance_serial(const RescaledProfile& p, AttractorRef ref,
                           const KernelSpec& spec) {
    return max_abs(pointwise_errors_serial(p, ref, spec));
}

double l2_distance(const RescaledProfile& p, AttractorRef ref, const KernelSpec& spec) {
    const auto err = pointwise_errors(p, ref, spec);
    double sum = 0.0;
    for (size_t i = 0; i + 1 < err.size(); ++i)
        sum += 0.5 * (err[i] * err[i] + err[i + 1] * err[i + 1]) * (p.u[i + 1] - p.u[i]);
    return std::sqrt(sum);
}

double a_bound(const Field& delta0, double t) { return a_bound_impl(delta0, t, true); }

double a_bound_serial(const Field& delta0, double t) {
    return a_bound_impl(delta0, t, false);
}

double fit_rate(const ConvergenceReport& report) {
    std::vector<double> lx, ly;
    for (const auto& r : report.records) {
        if (r.time < report.rate_window_lo || r.time > report.rate_window_hi) continue;
        if (!(r.sup_distance > 0.0))
            throw InsufficientDataError("fit_rate: non-positive distance in window");
        lx.push_back(std::log(r.time));
        ly.push_back(std::log(r.sup_distance));
    }
    if (lx.size() < 4)
        throw InsufficientDataError("fit_rate: need at least 4 records in the window");
    const size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double self_similarity_check(const RescaledProfile& p1, const RescaledProfile& p2) {
    if (p1.normalisation != p2.normalisation)
        throw DomainError("self_similarity_check: mismatched normalisations");
    if (p1.time == p2.time)
        throw DomainError("self_similarity_check: times must differ");
    const double lo = std::max(p1.u.front(), p2.u.front());
    const double hi = std::min(p1.u.back(), p2.u.back());
    if (!(lo < hi)) throw NoOverlapError("self_similarity_check: disjoint U ranges");

    double worst = 0.0;
    size_t j = 0;
    for (size_t i = 0; i < p1.u.size(); ++i) {
        const double u = p1.u[i];
        if (u < lo || u > hi) continue;
        while (j + 2 < p2.u.size() && p2.u[j + 1] <= u) ++j;
        const double du = p2.u[j + 1] - p2.u[j];
        const double w = (u - p2.u[j]) / du;
        const double f2 = (1.0 - w) * p2.f[j] + w * p2.f[j + 1];
        worst = std::max(worst, std::fabs(p1.f[i] - f2));
    }
    return worst;
}

double homogeneity_check(const std::function<double(double)>& profile, double k,
                         double alpha_deg) {
    if (!(k > 0.0)) throw DomainError("homogeneity_check: k must be positive");
    static const double test_set[] = {-4.0, -2.0, -1.0, -0.5, -0.25,
                                      0.25, 0.5,  1.0,  2.0,  4.0};
    double worst = 0.0;
    for (double y : test_set)
        worst = std::max(worst,
                         std::fabs(profile(k * y) - std::pow(k, alpha_deg) * profile(y)));
    return worst;
}

double homogeneity_check(const ProfileSpec& profile, double k, double alpha_deg) {
    return homogeneity_check([&](double y) { return profile.evaluate(y); }, k, alpha_deg);
}

} // namespace thinfilm

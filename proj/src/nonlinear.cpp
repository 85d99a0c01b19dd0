#include "thinfilm/nonlinear.hpp"

#include <algorithm>
#include <cmath>

#include "thinfilm/banded.hpp"

namespace thinfilm {

namespace {

constexpr double kFlatBoundaryTol = 1e-8;

// Cell value with two ghost cells on each side fixed at the flat film H = 1.
inline double cell(const std::vector<double>& h, int i) {
    return (i < 0 || i >= (int)h.size()) ? 1.0 : h[i];
}

inline double mobility_da(double a, double b) {
    const double s = a + b;
    return 2.0 * a * b * b * (a + 2.0 * b) / (s * s);
}

struct FaceFlux {
    double value;
    // derivative of the flux w.r.t. cells j-2 .. j+1
    double d[4];
};

FaceFlux face_flux(const std::vector<double>& h, int j, double inv_dx3) {
    const double hm2 = cell(h, j - 2), hm1 = cell(h, j - 1);
    const double h0 = cell(h, j), hp1 = cell(h, j + 1);
    const double third = (hp1 - 3.0 * h0 + 3.0 * hm1 - hm2) * inv_dx3;
    const double mob = mobility_mean(hm1, h0);
    FaceFlux f;
    f.value = mob * third;
    f.d[0] = -mob * inv_dx3;
    f.d[1] = mobility_da(hm1, h0) * third + 3.0 * mob * inv_dx3;
    f.d[2] = mobility_da(h0, hm1) * third - 3.0 * mob * inv_dx3;
    f.d[3] = mob * inv_dx3;
    return f;
}

// Backward-Euler residual R_i = H_i - Hn_i + (dt/dx)(F_{i+1} - F_i) and its
// pentadiagonal Jacobian.
double assemble(const std::vector<double>& h, const std::vector<double>& hn, double dt,
                double dx, std::vector<double>& residual, Pentadiagonal* jac) {
    const int n = (int)h.size();
    const double inv_dx3 = 1.0 / (dx * dx * dx);
    const double r = dt / dx;

    for (int i = 0; i < n; ++i) residual[i] = h[i] - hn[i];
    if (jac) {
        jac->clear();
        for (int i = 0; i < n; ++i) jac->at(i, i) = 1.0;
    }

    // the outermost faces sit in the flat far field and carry zero flux by
    // the ghost-cell closure, which is what makes the mass sum telescope
    for (int j = 1; j < n; ++j) {
        const FaceFlux f = face_flux(h, j, inv_dx3);
        // face j is F_{i+1} for cell i = j-1 and F_i for cell i = j
        residual[j - 1] += r * f.value;
        residual[j] -= r * f.value;
        if (jac) {
            for (int c = 0; c < 4; ++c) {
                const int col = j - 2 + c;
                if (col < 0 || col >= n) continue;
                jac->at(j - 1, col) += r * f.d[c];
                jac->at(j, col) -= r * f.d[c];
            }
        }
    }

    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm = std::max(norm, std::fabs(residual[i]));
    return norm;
}

void check_flat_boundary(const Field& h) {
    const int n = h.grid.n;
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(h.values[i] - 1.0) > kFlatBoundaryTol ||
            std::fabs(h.values[n - 1 - i] - 1.0) > kFlatBoundaryTol)
            throw BoundaryError("nonlinear step: perturbation reached the ghost region; "
                                "enlarge the domain");
    }
}

} // namespace

NonlinearConfig NonlinearConfig::resolved(double dx) const {
    NonlinearConfig c = *this;
    const double dx4 = dx * dx * dx * dx;
    if (c.dt_init <= 0.0) c.dt_init = 0.1 * dx4;
    if (c.dt_min <= 0.0) c.dt_min = 1e-8 * dx4;
    if (c.dt_max <= 0.0) c.dt_max = 1e3 * dx4;
    c.validate();
    return c;
}

void NonlinearConfig::validate() const {
    if (!(dt_min <= dt_init && dt_init <= dt_max))
        throw DomainError("NonlinearConfig: need dt_min <= dt_init <= dt_max");
    if (!(newton_tol > 0.0)) throw DomainError("NonlinearConfig: newton_tol must be positive");
    if (newton_max_iters < 1)
        throw DomainError("NonlinearConfig: newton_max_iters must be >= 1");
    if (!(dt_grow > 1.0)) throw DomainError("NonlinearConfig: dt_grow must exceed 1");
    if (!(dt_shrink > 0.0 && dt_shrink < 1.0))
        throw DomainError("NonlinearConfig: dt_shrink must be in (0,1)");
}

double mobility_mean(double a, double b) {
    if (!(a > 0.0 && b > 0.0))
        throw DomainError("mobility_mean: arguments must be positive");
    const double ab = a * b; // grouped so the mean is exactly symmetric
    return 2.0 * ab * ab / (a + b);
}

double excess_mass(const Field& h) {
    double sum = 0.0;
    for (double v : h.values) sum += v - 1.0;
    return sum * h.grid.dx;
}

double capillary_energy(const Field& h) {
    const int n = h.grid.n;
    const double dx = h.grid.dx;
    double sum = 0.0;
    // slopes against the flat ghost cells included so the energy is the one
    // the scheme dissipates
    double prev = 1.0;
    for (int i = 0; i < n; ++i) {
        const double s = (h.values[i] - prev) / dx;
        sum += s * s;
        prev = h.values[i];
    }
    const double s = (1.0 - prev) / dx;
    sum += s * s;
    return 0.5 * sum * dx;
}

std::pair<Field, StepDiagnostics> step_nonlinear(const Field& h, double dt,
                                                 const NonlinearConfig& cfg) {
    if (h.kind != FieldKind::height)
        throw DomainError("step_nonlinear: expected a height field");
    if (!(dt > 0.0)) throw DomainError("step_nonlinear: dt must be positive");
    check_flat_boundary(h);

    const int n = h.grid.n;
    const double dx = h.grid.dx;
    const std::vector<double>& hn = h.values;
    std::vector<double> hnew = hn;
    std::vector<double> residual(n);
    Pentadiagonal jac(n);

    int iters = 0;
    bool converged = false;
    while (iters < cfg.newton_max_iters) {
        const double norm = assemble(hnew, hn, dt, dx, residual, &jac);
        // once within tolerance, take one last (quadratic) update so the
        // residual mass leakage per step is at machine level
        const bool final_update = norm <= cfg.newton_tol;
        for (double& ri : residual) ri = -ri;
        jac.solve(residual);
        for (int i = 0; i < n; ++i) {
            hnew[i] += residual[i];
            if (!(hnew[i] > 0.0))
                throw PositivityLoss("step_nonlinear: height crossed zero");
            if (!std::isfinite(hnew[i]))
                throw NewtonDivergence("step_nonlinear: iteration diverged");
        }
        ++iters;
        if (final_update) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NewtonDivergence("step_nonlinear: iteration cap reached");

    // Conservative reconstruction: rebuild the accepted state from the face
    // fluxes of the converged iterate. Each flux value enters two cells with
    // opposite signs and the outer faces are zero, so the discrete mass sum
    // telescopes exactly instead of inheriting the Newton residual.
    {
        const double inv_dx3 = 1.0 / (dx * dx * dx);
        const double r = dt / dx;
        std::vector<double> rebuilt(n);
        double f_left = 0.0;
        for (int i = 0; i < n; ++i) {
            const double f_right = (i + 1 < n) ? face_flux(hnew, i + 1, inv_dx3).value : 0.0;
            rebuilt[i] = hn[i] - r * (f_right - f_left);
            f_left = f_right;
            if (!(rebuilt[i] > 0.0))
                throw PositivityLoss("step_nonlinear: height crossed zero");
            if (!std::isfinite(rebuilt[i]))
                throw NewtonDivergence("step_nonlinear: iteration diverged");
        }
        hnew = std::move(rebuilt);
    }

    Field out(h.grid, std::move(hnew), h.time + dt, FieldKind::height);
    StepDiagnostics diag;
    diag.time = out.time;
    diag.dt_used = dt;
    diag.newton_iters = iters;
    diag.mass = excess_mass(out);
    diag.energy = capillary_energy(out);
    diag.min_height = *std::min_element(out.values.begin(), out.values.end());
    return {std::move(out), diag};
}

NonlinearRun evolve_nonlinear(const Field& h0, double t_end,
                              const std::vector<double>& snapshot_times,
                              const NonlinearConfig& raw_cfg) {
    if (!(t_end > h0.time)) throw DomainError("evolve_nonlinear: T_end must exceed the start time");
    const NonlinearConfig cfg = raw_cfg.resolved(h0.grid.dx);

    std::vector<double> targets = snapshot_times;
    std::sort(targets.begin(), targets.end());
    if (targets.empty() || targets.back() < t_end) targets.push_back(t_end);
    for (double t : targets)
        if (!(t > h0.time)) throw DomainError("evolve_nonlinear: snapshot times must exceed the start time");

    NonlinearRun run;
    Field h = h0;
    double dt = cfg.dt_init;

    for (double target : targets) {
        while (h.time < target) {
            const double remaining = target - h.time;
            const double dt_step = std::min(dt, remaining);
            try {
                auto [next, diag] = step_nonlinear(h, dt_step, cfg);
                h = std::move(next);
                run.diagnostics.push_back(diag);
                if (diag.newton_iters < 4) dt = std::min(dt * cfg.dt_grow, cfg.dt_max);
            } catch (const NewtonDivergence&) {
                dt *= cfg.dt_shrink;
                if (dt < cfg.dt_min)
                    throw StepFailure("evolve_nonlinear: dt fell below dt_min");
            } catch (const PositivityLoss&) {
                dt *= cfg.dt_shrink;
                if (dt < cfg.dt_min)
                    throw StepFailure("evolve_nonlinear: dt fell below dt_min");
            }
            // landing steps are clamped, so h.time cannot overshoot target
        }
        h.time = target; // remove accumulated roundoff in the timestamp
        run.snapshots.push_back(h);
    }
    return run;
}

} // namespace thinfilm

#ifndef THINFILM_NONLINEAR_HPP
#define THINFILM_NONLINEAR_HPP

#include <utility>
#include <vector>

#include "thinfilm/grid.hpp"

namespace thinfilm {

/** Adaptive implicit time stepping controls. */
struct NonlinearConfig {
    double dt_init = 0.0; // 0 = derive from the grid (0.1 * dx^4)
    double dt_min = 0.0;  // 0 = derive from the grid (1e-8 * dx^4)
    double dt_max = 0.0;  // 0 = derive from the grid (1e3 * dx^4)
    double newton_tol = 1e-10;
    int newton_max_iters = 25;
    double dt_grow = 1.5;
    double dt_shrink = 0.5;

    NonlinearConfig resolved(double dx) const;
    void validate() const;
};

/** Per-step record: mass and energy are the discrete conserved/dissipated
    quantities of the scheme, min_height certifies positivity. */
struct StepDiagnostics {
    double time = 0.0;
    double dt_used = 0.0;
    int newton_iters = 0;
    double mass = 0.0;
    double energy = 0.0;
    double min_height = 0.0;
};

/** Entropy-consistent face mobility: 2a^2 b^2 / (a+b), equal to a^3 at a=b and
    bounded between min(a,b)^3 and max(a,b)^3. */
double mobility_mean(double a, double b);

/** Excess mass sum(H - 1) dx. */
double excess_mass(const Field& h);

/** Discrete capillary energy sum((H_{i+1}-H_i)/dx)^2 dx / 2. */
double capillary_energy(const Field& h);

/** One backward-Euler step of the flux-form discretization of
    dH/dT + d/dX(H^3 d^3H/dX^3) = 0, with two ghost cells fixed at H = 1 on
    each side. Throws NewtonDivergence or PositivityLoss to request a smaller
    dt, and BoundaryError if the perturbation reaches the ghost region.
    cfg must already be resolved (positive dt bounds). */
std::pair<Field, StepDiagnostics> step_nonlinear(const Field& h, double dt,
                                                 const NonlinearConfig& cfg);

struct NonlinearRun {
    std::vector<Field> snapshots;
    std::vector<StepDiagnostics> diagnostics;
};

/** Evolve to t_end with adaptive dt, landing exactly on each snapshot time. */
NonlinearRun evolve_nonlinear(const Field& h0, double t_end,
                              const std::vector<double>& snapshot_times,
                              const NonlinearConfig& cfg);

} // namespace thinfilm

#endif

#ifndef THINFILM_LINEAR_HPP
#define THINFILM_LINEAR_HPP

#include "thinfilm/grid.hpp"

namespace thinfilm {

/** Evolve an excess profile under d/dT Delta = -(-d^2/dX^2)^m Delta on the
 * periodic grid: spectral multiplication by exp(-K^(2m) T). The K=0 mode is
 * untouched, so the algebraic volume is preserved exactly.
 *
 * Throws WrapAroundError if the evolved profile no longer decays at the grid
 * ends (the domain is too small for this T) and DecayError if the input
 * already fails the decay invariant.
 */
Field evolve_linear(const Field& initial, double t, int m = 2);

/** Spectral first derivative on the periodic grid. */
Field spectral_derivative(const Field& f, int m = 2);

/** Max-norm discrepancy between evolve(T1+T2) and evolve(T2) after evolve(T1). */
double evolve_semigroup_check(const Field& initial, double t1, double t2, int m = 2);

/** Max-norm discrepancy between evolving the derivative and differentiating
    the evolved profile. */
double derivative_evolution_check(const Field& initial, double t, int m = 2);

/** Closed-form rescaled solution for an initial step of amplitude theta0:
    (theta0/2) * (1 + (2/pi) * int_0^inf exp(-Q^4) sin(QU)/Q dQ). Depends on
    the similarity variable U only, hence self-similar at all positive times. */
double step_solution(double u, double theta0, double quad_tol = 1e-12);

/** Algebraic volume M0 = sum(values) * dx (rectangle rule on the periodic grid). */
double algebraic_volume(const Field& f);

/** First-moment coefficient M1 = -sum(x * values) * dx. */
double first_moment(const Field& f);

/** Discrete H1 seminorm sum |dDelta/dX|^2 dx (spectral derivative). */
double h1_seminorm(const Field& f);

} // namespace thinfilm

#endif

#ifndef THINFILM_KERNEL_HPP
#define THINFILM_KERNEL_HPP

#include <span>
#include <vector>

#include "thinfilm/errors.hpp"

namespace thinfilm {

enum class KernelMethod { series, quadrature, automatic };

/** Evaluation controls for the attractor function phi_m and its derivatives.
 *
 * m is half the spatial derivative order of the evolution equation; m=2 is
 * the capillary thin film case, m=1 the heat equation. Build instances via
 * make(), which validates the invariants and, for m=2 in automatic mode,
 * checks that series and quadrature agree on a band around u_switch.
 */
struct KernelSpec {
    int m = 2;
    KernelMethod method = KernelMethod::automatic;
    double series_tol = 1e-12;
    double quad_tol = 1e-12;
    double u_switch = 8.0;

    static KernelSpec make(int m = 2, KernelMethod method = KernelMethod::automatic,
                           double series_tol = 1e-12, double quad_tol = 1e-12,
                           double u_switch = 8.0);
};

/** Similarity exponents of the order-2m family: X = U*T^alpha, G = T^-beta * phi. */
struct SimilarityExponents {
    double alpha;
    double beta;

    static SimilarityExponents for_order(int m) {
        if (m < 1) throw DomainError("SimilarityExponents: m must be >= 1");
        return {1.0 / (2.0 * m), 1.0 / (2.0 * m)};
    }
};

/** phi(U) for m=2 from its generalized hypergeometric form (difference of two
    0H2 series in (U/4)^4). Valid only where the cancellation between the two
    series is round-off safe; throws DomainError beyond |U| = u_switch. */
double phi_series(double u, double tol, double u_max = 8.0);

/** phi_m(U) = (1/pi) * int_0^inf exp(-Q^(2m)) cos(QU) dQ by adaptive quadrature. */
double phi_quadrature(double u, const KernelSpec& spec);

/** n-th derivative of phi_m by differentiation under the integral (n <= 4). */
double phi_derivative(double u, int n, const KernelSpec& spec);

/** phi_m(U) by the method selected in spec (series/quadrature crossover in
    automatic mode; series applies to m=2 only). */
double phi(double u, const KernelSpec& spec);

/** Green's function G(X,T) = T^-beta * phi_m(X * T^-alpha), T > 0. */
double green(double x, double t, const KernelSpec& spec);

/** Batch evaluation of phi_m (OpenMP-parallel) and its serial reference. */
std::vector<double> phi_grid(std::span<const double> u, const KernelSpec& spec);
std::vector<double> phi_grid_serial(std::span<const double> u, const KernelSpec& spec);

/** Batch evaluation of the n-th derivative over a set of points. */
std::vector<double> phi_derivative_grid(std::span<const double> u, int n,
                                        const KernelSpec& spec);

} // namespace thinfilm

#endif

#ifndef THINFILM_SIMILARITY_HPP
#define THINFILM_SIMILARITY_HPP

#include <functional>
#include <vector>

#include "thinfilm/grid.hpp"
#include "thinfilm/kernel.hpp"
#include "thinfilm/profiles.hpp"

namespace thinfilm {

enum class Normalisation {
    by_volume,       // f = T^beta * Delta / M0, the attractor is phi
    by_peak,         // f = Delta / Delta(X=0), the attractor is phi/phi(0)
    by_first_moment, // f = T^(2 beta) * Delta / M1, the attractor is phi'
};

/** A profile mapped to the self-similar frame U = X * T^(-alpha). */
struct RescaledProfile {
    std::vector<double> u;
    std::vector<double> f;
    double time = 0.0;
    Normalisation normalisation = Normalisation::by_volume;
    double scale = 0.0; // M0, Delta(0), or M1, depending on the normalisation
};

/** Reference the profile is compared against. */
enum class AttractorRef {
    phi,                  // by_volume profiles
    phi_over_phi0,        // by_peak profiles
    phi_derivative_1,     // by_first_moment profiles
};

/** Which reference matches a given normalisation mode. */
AttractorRef attractor_for(Normalisation norm);

struct ConvergenceRecord {
    double time;
    double sup_distance;         // by-volume sup distance to phi
    double a_bound_over_2pi_m0;  // rigorous bound on the same quantity
    double l2_distance;
};

struct ConvergenceReport {
    std::vector<ConvergenceRecord> records; // sorted by time
    double fitted_rate = 0.0;
    double rate_window_lo = 0.0;
    double rate_window_hi = 0.0;
};

/** Map an excess field at time T > 0 to the self-similar frame. */
RescaledProfile rescale(const Field& delta, Normalisation norm, int m = 2);

/** Sup over the profile's own grid image of |f(U) - reference(U)|. The sup
    over all of R is approximated by the sup over the computational window;
    both the profile and the attractor decay, so the truncation is benign
    provided the window reaches |phi| < 1e-6. */
double sup_distance(const RescaledProfile& p, AttractorRef ref, const KernelSpec& spec);
double sup_distance_serial(const RescaledProfile& p, AttractorRef ref,
                           const KernelSpec& spec);

/** L2 distance sqrt(int |f - reference|^2 dU) over the same window. */
double l2_distance(const RescaledProfile& p, AttractorRef ref, const KernelSpec& spec);

/** The convergence bound a(T) = int dQ exp(-Q^4) int dY |exp(-iQY/T^(1/4)) - 1|
    |Delta0(Y)|, evaluated with |exp(i theta) - 1| = 2 |sin(theta/2)|. The
    contract sup|f - phi| <= a(T)/(2 pi |M0|) holds against sup_distance. */
double a_bound(const Field& delta0, double t);
double a_bound_serial(const Field& delta0, double t);

/** Least-squares slope of log(sup_distance) against log(T) over the window. */
double fit_rate(const ConvergenceReport& report);

/** Max-norm discrepancy between two rescaled profiles over their common U
    range (piecewise-linear interpolation of the second onto the first). */
double self_similarity_check(const RescaledProfile& p1, const RescaledProfile& p2);

/** Max over a symmetric test set of |Delta0(kY) - k^alpha Delta0(Y)|. */
double homogeneity_check(const std::function<double(double)>& profile, double k,
                         double alpha_deg);
double homogeneity_check(const ProfileSpec& profile, double k, double alpha_deg);

} // namespace thinfilm

#endif

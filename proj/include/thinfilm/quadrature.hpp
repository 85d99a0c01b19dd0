#ifndef THINFILM_QUADRATURE_HPP
#define THINFILM_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "thinfilm/errors.hpp"

namespace thinfilm {

/** Adaptive Simpson quadrature on [a,b] to an absolute tolerance.
 *
 * The interval is first cut into panels no wider than max_panel_width (to
 * resolve oscillatory integrands), then each panel is refined recursively.
 * Throws ToleranceError once the total panel budget is exhausted.
 */
class AdaptiveSimpson {
  public:
    AdaptiveSimpson(double abs_tol, double max_panel_width, long panel_budget = 2000000)
        : tol_(abs_tol), wmax_(max_panel_width), budget_(panel_budget) {}

    template <class F>
    double integrate(F&& f, double a, double b) const {
        if (!(b > a)) return 0.0;
        long panels = static_cast<long>(std::ceil((b - a) / wmax_));
        if (panels < 1) panels = 1;
        const double h = (b - a) / panels;
        long used = panels;
        double total = 0.0;
        for (long p = 0; p < panels; ++p) {
            const double pa = a + p * h;
            const double pb = (p + 1 == panels) ? b : pa + h;
            const double fa = f(pa), fm = f(0.5 * (pa + pb)), fb = f(pb);
            const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
            total += refine(f, pa, pb, fa, fm, fb, whole, tol_ * (pb - pa) / (b - a),
                            max_depth_, used);
        }
        return total;
    }

  private:
    template <class F>
    double refine(F&& f, double a, double b, double fa, double fm, double fb,
                  double whole, double tol, int depth, long& used) const {
        const double m = 0.5 * (a + b);
        const double fl = f(0.5 * (a + m));
        const double fr = f(0.5 * (m + b));
        const double left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
        const double err = (left + right - whole) / 15.0;
        if (std::fabs(err) <= tol || depth <= 0)
            return left + right + err;
        used += 2;
        if (used > budget_)
            throw ToleranceError("AdaptiveSimpson: panel budget exhausted");
        return refine(f, a, m, fa, fl, fm, left, 0.5 * tol, depth - 1, used) +
               refine(f, m, b, fm, fr, fb, right, 0.5 * tol, depth - 1, used);
    }

    double tol_;
    double wmax_;
    long budget_;
    static constexpr int max_depth_ = 40;
};

/** Integral of a damped oscillatory integrand f over [0, q_max] with panels
    narrow enough to resolve a trigonometric factor of frequency |omega|. */
template <class F>
double integrate_damped_oscillatory(F&& f, double q_max, double omega, double abs_tol,
                                    long panel_budget = 2000000) {
    const double wmax = M_PI / (4.0 * std::fabs(omega) + 1.0);
    return AdaptiveSimpson(abs_tol, wmax, panel_budget).integrate(f, 0.0, q_max);
}

} // namespace thinfilm

#endif

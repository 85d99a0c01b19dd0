#include "thinfilm/profiles.hpp"

#include <algorithm>

namespace thinfilm {

namespace {

double gaussian_amplitude(const GaussianShape& g) {
    return g.volume / (g.std_dev * std::sqrt(2.0 * M_PI));
}

double dip_bump_value(const DipBumpShape& s, double y) {
    const double h = s.separation / 2.0;
    auto bell = [&](double c) {
        const double r = (y - c) / s.std_dev;
        return std::exp(-0.5 * r * r);
    };
    return s.amplitude * (bell(h) - bell(-h));
}

} // namespace

double ProfileSpec::evaluate(double x) const {
    const double y = x - center;
    return std::visit(
        [&](const auto& s) -> double {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, GateShape>) {
                const double h = s.width / 2.0;
                if (std::fabs(y) < h) return s.amplitude;
                if (std::fabs(y) == h) return 0.5 * s.amplitude;
                return 0.0;
            } else if constexpr (std::is_same_v<S, GaussianShape>) {
                const double r = y / s.std_dev;
                return gaussian_amplitude(s) * std::exp(-0.5 * r * r);
            } else if constexpr (std::is_same_v<S, DipBumpShape>) {
                return dip_bump_value(s, y);
            } else {
                return s.f(y);
            }
        },
        shape);
}

Field ProfileSpec::sample(const Grid1D& grid) const {
    std::vector<double> v(grid.n, 0.0);
    if (const auto* g = std::get_if<GateShape>(&shape)) {
        // Cell-overlap sampling: each cell [x-dx/2, x+dx/2] carries the exact
        // fraction of the gate it covers, so the rectangle-rule volume is exact.
        const double lo = center - g->width / 2.0;
        const double hi = center + g->width / 2.0;
        for (int i = 0; i < grid.n; ++i) {
            const double a = grid.x(i) - grid.dx / 2.0;
            const double b = grid.x(i) + grid.dx / 2.0;
            const double overlap = std::min(b, hi) - std::max(a, lo);
            if (overlap > 0.0) v[i] = g->amplitude * overlap / grid.dx;
        }
    } else {
        for (int i = 0; i < grid.n; ++i) v[i] = evaluate(grid.x(i));
    }
    return Field(grid, std::move(v), 0.0, FieldKind::excess);
}

double ProfileSpec::support_radius() const {
    return std::visit(
        [&](const auto& s) -> double {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, GateShape>) {
                return s.width / 2.0;
            } else if constexpr (std::is_same_v<S, GaussianShape>) {
                return 8.0 * s.std_dev;
            } else if constexpr (std::is_same_v<S, DipBumpShape>) {
                return s.separation / 2.0 + 8.0 * s.std_dev;
            } else {
                return 10.0; // unknown extent; caller should size the grid
            }
        },
        shape);
}

Field dirac_profile(const Grid1D& grid, double center) {
    std::vector<double> v(grid.n, 0.0);
    int best = 0;
    for (int i = 1; i < grid.n; ++i)
        if (std::fabs(grid.x(i) - center) < std::fabs(grid.x(best) - center)) best = i;
    v[best] = 1.0 / grid.dx;
    return Field(grid, std::move(v), 0.0, FieldKind::excess);
}

} // namespace thinfilm

#ifndef THINFILM_GRID_HPP
#define THINFILM_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "thinfilm/errors.hpp"

namespace thinfilm {

/** Uniform one-dimensional spatial grid. */
struct Grid1D {
    double x_min = 0.0;
    double dx = 1.0;
    int n = 0;

    Grid1D() = default;
    Grid1D(double x_min_, double dx_, int n_) : x_min(x_min_), dx(dx_), n(n_) {
        if (n < 8) throw DomainError("Grid1D: need at least 8 points");
        if (!(dx > 0.0)) throw DomainError("Grid1D: dx must be positive");
    }

    double x(int i) const { return x_min + i * dx; }
    double length() const { return n * dx; }

    bool operator==(const Grid1D& o) const {
        return x_min == o.x_min && dx == o.dx && n == o.n;
    }
};

enum class FieldKind { excess, height };

/** Sampled profile on a Grid1D with a timestamp. */
struct Field {
    Grid1D grid;
    std::vector<double> values;
    double time = 0.0;
    FieldKind kind = FieldKind::excess;

    Field() = default;
    Field(Grid1D g, std::vector<double> v, double t, FieldKind k)
        : grid(g), values(std::move(v)), time(t), kind(k) {
        if ((int)values.size() != grid.n)
            throw DomainError("Field: value count does not match grid");
        for (double x : values)
            if (!std::isfinite(x)) throw DomainError("Field: non-finite value");
        if (kind == FieldKind::height)
            for (double x : values)
                if (!(x > 0.0)) throw DomainError("Field: height must be positive");
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::fabs(v));
        return m;
    }
};

/** Boundary-decay invariant for summability-based operations: the outer 5%
    of points must carry at most 1e-6 of the overall max amplitude. */
inline bool decays_at_boundary(const Field& f) {
    const int edge = std::max(1, f.grid.n / 20);
    double inner = f.max_abs();
    if (inner == 0.0) return true;
    double outer = 0.0;
    for (int i = 0; i < edge; ++i) {
        outer = std::max(outer, std::fabs(f.values[i]));
        outer = std::max(outer, std::fabs(f.values[f.grid.n - 1 - i]));
    }
    return outer <= 1e-6 * inner;
}

inline void require_decay(const Field& f, const char* who) {
    if (f.kind != FieldKind::excess)
        throw DomainError(std::string(who) + ": expected an excess field");
    if (!decays_at_boundary(f))
        throw DecayError(std::string(who) + ": profile does not decay at the grid ends");
}

} // namespace thinfilm

#endif

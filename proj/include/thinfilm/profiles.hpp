#ifndef THINFILM_PROFILES_HPP
#define THINFILM_PROFILES_HPP

#include <cmath>
#include <functional>
#include <variant>
#include <vector>

#include "thinfilm/grid.hpp"

namespace thinfilm {

/** Rectangular pulse of given width and amplitude. */
struct GateShape {
    double width;
    double amplitude;
};

/** Gaussian of prescribed algebraic volume and standard deviation. */
struct GaussianShape {
    double volume;
    double std_dev;
};

/** Antisymmetric pair (negative gaussian then positive gaussian) with exactly
    zero algebraic volume by construction. */
struct DipBumpShape {
    double separation;
    double amplitude;
    double std_dev;
};

/** Arbitrary user-supplied pointwise profile. */
struct CustomShape {
    std::function<double(double)> f;
};

/** Canonical initial excess profiles. */
struct ProfileSpec {
    std::variant<GateShape, GaussianShape, DipBumpShape, CustomShape> shape;
    double center = 0.0;

    static ProfileSpec gate(double width, double amplitude, double center = 0.0) {
        if (!(width > 0.0)) throw DomainError("ProfileSpec: gate width must be positive");
        return {GateShape{width, amplitude}, center};
    }
    static ProfileSpec gaussian(double volume, double std_dev, double center = 0.0) {
        if (!(std_dev > 0.0))
            throw DomainError("ProfileSpec: gaussian std_dev must be positive");
        return {GaussianShape{volume, std_dev}, center};
    }
    static ProfileSpec dip_bump(double separation, double amplitude, double std_dev,
                                double center = 0.0) {
        if (!(separation > 0.0 && std_dev > 0.0))
            throw DomainError("ProfileSpec: dip_bump parameters must be positive");
        return {DipBumpShape{separation, amplitude, std_dev}, center};
    }
    static ProfileSpec custom(std::function<double(double)> f, double center = 0.0) {
        return {CustomShape{std::move(f)}, center};
    }

    /** Pointwise value at position x. Gate edges take their midpoint value. */
    double evaluate(double x) const;

    /** Sample onto a grid as an excess Field at time 0. Gates are sampled by
        cell overlap so the discrete volume matches the exact one. */
    Field sample(const Grid1D& grid) const;

    /** Half-width beyond which the profile is (numerically) zero. */
    double support_radius() const;
};

/** One-cell unit-mass profile (value 1/dx in the cell nearest to center). */
Field dirac_profile(const Grid1D& grid, double center = 0.0);

} // namespace thinfilm

#endif

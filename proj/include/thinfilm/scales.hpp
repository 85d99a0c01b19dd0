#ifndef THINFILM_SCALES_HPP
#define THINFILM_SCALES_HPP

#include "thinfilm/errors.hpp"

namespace thinfilm {

/** Physical scales of the dimensional problem. */
struct PhysicalScales {
    double gamma; // surface tension, force/length
    double eta;   // shear viscosity, pressure*time
    double h0;    // reference film height, length

    void validate() const {
        if (!(gamma > 0.0 && eta > 0.0 && h0 > 0.0))
            throw DomainError("PhysicalScales: all scales must be strictly positive");
    }

    double time_scale() const { return 3.0 * eta * h0 / gamma; }
};

struct Dimensionless {
    double x;
    double t;
    double h;
};

struct Dimensional {
    double x;
    double t;
    double h;
};

inline Dimensionless nondimensionalize(double x_phys, double t_phys, double h_phys,
                                       const PhysicalScales& s) {
    s.validate();
    return {x_phys / s.h0, t_phys / s.time_scale(), h_phys / s.h0};
}

inline Dimensional redimensionalize(double x, double t, double h,
                                    const PhysicalScales& s) {
    s.validate();
    return {x * s.h0, t * s.time_scale(), h * s.h0};
}

} // namespace thinfilm

#endif

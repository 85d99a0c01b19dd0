#ifndef THINFILM_ERRORS_HPP
#define THINFILM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thinfilm {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A series or quadrature failed to reach the requested tolerance
// within its term/panel budget.
struct ToleranceError : Error {
    using Error::Error;
};

// An evolved profile reached the edge of the periodic box; the domain
// is too small for the requested time.
struct WrapAroundError : Error {
    using Error::Error;
};

// An excess field does not decay near the grid ends.
struct DecayError : Error {
    using Error::Error;
};

// Newton iteration hit its iteration cap without converging.
struct NewtonDivergence : Error {
    using Error::Error;
};

// A candidate height profile crossed zero.
struct PositivityLoss : Error {
    using Error::Error;
};

// A nonlinear perturbation reached the fixed ghost region.
struct BoundaryError : Error {
    using Error::Error;
};

// Adaptive time stepping could not proceed above dt_min.
struct StepFailure : Error {
    using Error::Error;
};

// Volume-based rescaling requested for a profile with (near-)zero volume.
struct ZeroVolumeError : Error {
    using Error::Error;
};

// Two rescaled profiles have disjoint coordinate ranges.
struct NoOverlapError : Error {
    using Error::Error;
};

// Not enough records to fit a rate.
struct InsufficientDataError : Error {
    using Error::Error;
};

} // namespace thinfilm

#endif

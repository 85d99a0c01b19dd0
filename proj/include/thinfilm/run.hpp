#ifndef THINFILM_RUN_HPP
#define THINFILM_RUN_HPP

#include <string>
#include <vector>

#include "thinfilm/kernel.hpp"
#include "thinfilm/nonlinear.hpp"
#include "thinfilm/profiles.hpp"
#include "thinfilm/similarity.hpp"

namespace thinfilm {

enum class Command { attractor, linear, nonlinear, converge };

/** Fully resolved configuration of one CLI invocation. */
struct RunConfig {
    Command command = Command::attractor;

    // grid; n = 0 requests auto-sizing from the profile and latest time
    double grid_x_min = 0.0;
    double grid_dx = 0.0;
    int grid_n = 0;

    ProfileSpec profile = ProfileSpec::gate(1.0, 0.1);
    std::string label = "gate";
    std::vector<double> times;

    int m = 2;
    double series_tol = 1e-12;
    double quad_tol = 1e-12;
    double u_switch = 8.0;

    NonlinearConfig nonlinear;
    Normalisation norm = Normalisation::by_volume;
    std::string output_dir = ".";

    // attractor command
    double u_max = 10.0;
    double du = 0.01;
    int derivatives = 0; // emit d1..dN columns
};

/** "shape:params" profile syntax used by the CLI, e.g. "gate:1,0.1",
    "gaussian:0.1,0.5", "dipbump:2,0.1,0.5". */
ProfileSpec parse_profile(const std::string& text, double center = 0.0);

/** Grid for a run: the configured one, or the auto-sized box keeping kernel
    tails below the decay threshold up to the latest requested time. */
Grid1D resolve_grid(const RunConfig& cfg);

/** Execute one command; returns the process exit status and emits CSV files
    into cfg.output_dir. */
int run(const RunConfig& cfg);

} // namespace thinfilm

#endif

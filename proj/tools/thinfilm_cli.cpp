#include <CLI11.hpp>

#include <string>
#include <vector>

#include "thinfilm/run.hpp"

namespace {

struct CliOptions {
    std::string profile_text = "gate:1,0.1";
    double center = 0.0;
    std::vector<double> times;
    std::vector<double> grid; // xmin, dx, n
    std::string norm = "volume";
    std::string out_dir = ".";
    thinfilm::RunConfig cfg;
};

void add_common(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--m", o.cfg.m, "half the spatial derivative order (2 = thin film)");
    cmd->add_option("--profile", o.profile_text,
                    "initial profile, shape:params (gate:w,a | gaussian:v,s | "
                    "dipbump:sep,a,s)");
    cmd->add_option("--center", o.center, "profile center");
    cmd->add_option("--times", o.times, "snapshot times (comma separated)")
        ->delimiter(',');
    cmd->add_option("--grid", o.grid, "xmin,dx,n (omit for auto-sizing)")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--norm", o.norm, "rescaling: volume | peak | moment1")
        ->check(CLI::IsMember({"volume", "peak", "moment1"}));
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--series-tol", o.cfg.series_tol, "series relative tolerance");
    cmd->add_option("--quad-tol", o.cfg.quad_tol, "quadrature absolute tolerance");
}

thinfilm::Normalisation parse_norm(const std::string& s) {
    if (s == "peak") return thinfilm::Normalisation::by_peak;
    if (s == "moment1") return thinfilm::Normalisation::by_first_moment;
    return thinfilm::Normalisation::by_volume;
}

std::string profile_label(const std::string& text) {
    const auto colon = text.find(':');
    return colon == std::string::npos ? text : text.substr(0, colon);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-similar asymptotics of the capillary thin film equation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file (flags win)");

    CliOptions o;

    auto* attractor = app.add_subcommand("attractor", "emit the attractor function phi");
    attractor->add_option("--m", o.cfg.m, "half the spatial derivative order");
    attractor->add_option("--u-max", o.cfg.u_max, "half-width of the U sample range");
    attractor->add_option("--du", o.cfg.du, "U sample spacing");
    attractor->add_option("--derivatives", o.cfg.derivatives,
                          "also emit derivative columns d1..dN");
    attractor->add_option("--out", o.out_dir, "output directory");
    attractor->add_option("--series-tol", o.cfg.series_tol, "series relative tolerance");
    attractor->add_option("--quad-tol", o.cfg.quad_tol, "quadrature absolute tolerance");

    auto* linear = app.add_subcommand("linear", "evolve under the linearised equation");
    add_common(linear, o);

    auto* nonlinear = app.add_subcommand("nonlinear", "evolve under the full equation");
    add_common(nonlinear, o);
    nonlinear->add_option("--dt-init", o.cfg.nonlinear.dt_init, "initial time step");
    nonlinear->add_option("--dt-min", o.cfg.nonlinear.dt_min, "smallest allowed time step");
    nonlinear->add_option("--dt-max", o.cfg.nonlinear.dt_max, "largest allowed time step");
    nonlinear->add_option("--newton-tol", o.cfg.nonlinear.newton_tol,
                          "Newton residual tolerance");

    auto* converge = app.add_subcommand("converge", "measure convergence to the attractor");
    add_common(converge, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (attractor->parsed()) o.cfg.command = thinfilm::Command::attractor;
        if (linear->parsed()) o.cfg.command = thinfilm::Command::linear;
        if (nonlinear->parsed()) o.cfg.command = thinfilm::Command::nonlinear;
        if (converge->parsed()) o.cfg.command = thinfilm::Command::converge;

        o.cfg.profile = thinfilm::parse_profile(o.profile_text, o.center);
        o.cfg.label = profile_label(o.profile_text);
        o.cfg.times = o.times;
        o.cfg.norm = parse_norm(o.norm);
        o.cfg.output_dir = o.out_dir;
        if (!o.grid.empty()) {
            o.cfg.grid_x_min = o.grid[0];
            o.cfg.grid_dx = o.grid[1];
            o.cfg.grid_n = static_cast<int>(o.grid[2]);
        }
        return thinfilm::run(o.cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

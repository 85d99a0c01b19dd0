#include "thinfilm/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "thinfilm/csv.hpp"
#include "thinfilm/linear.hpp"
#include "thinfilm/parallel.hpp"

namespace thinfilm {

namespace {

namespace fs = std::filesystem;

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw DomainError("run: at least one time is required");
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw DomainError("run: times must be strictly increasing and positive");
        prev = t;
    }
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.output_dir);
    return (fs::path(cfg.output_dir) / name).string();
}

KernelSpec kernel_of(const RunConfig& cfg) {
    return KernelSpec::make(cfg.m, KernelMethod::automatic, cfg.series_tol, cfg.quad_tol,
                            cfg.u_switch);
}

int run_attractor(const RunConfig& cfg) {
    const KernelSpec spec = kernel_of(cfg);
    const long count = std::lround(2.0 * cfg.u_max / cfg.du) + 1;
    std::vector<double> u(count);
    for (long i = 0; i < count; ++i) u[i] = -cfg.u_max + i * cfg.du;
    std::vector<std::vector<double>> columns;
    columns.push_back(phi_grid(u, spec));
    for (int n = 1; n <= cfg.derivatives; ++n)
        columns.push_back(phi_derivative_grid(u, n, spec));
    write_attractor_csv(out_path(cfg, "attractor.csv"), u, columns);
    return 0;
}

int run_linear(const RunConfig& cfg) {
    check_times(cfg.times);
    const Grid1D grid = resolve_grid(cfg);
    const Field initial = cfg.profile.sample(grid);
    write_profile_csv(out_path(cfg, snapshot_filename("linear", cfg.label, 0.0)), initial);
    for (double t : cfg.times) {
        const Field evolved = evolve_linear(initial, t, cfg.m);
        write_profile_csv(out_path(cfg, snapshot_filename("linear", cfg.label, t)),
                          evolved);
        const RescaledProfile p = rescale(evolved, cfg.norm, cfg.m);
        write_rescaled_csv(
            out_path(cfg, snapshot_filename("linear", cfg.label + "_rescaled", t)), p);
    }
    return 0;
}

int run_nonlinear(const RunConfig& cfg) {
    check_times(cfg.times);
    const Grid1D grid = resolve_grid(cfg);
    const Field excess0 = cfg.profile.sample(grid);
    std::vector<double> h0(grid.n);
    for (int i = 0; i < grid.n; ++i) h0[i] = 1.0 + excess0.values[i];
    const Field initial(grid, std::move(h0), 0.0, FieldKind::height);

    const NonlinearRun result =
        evolve_nonlinear(initial, cfg.times.back(), cfg.times, cfg.nonlinear);
    for (size_t s = 0; s < result.snapshots.size(); ++s) {
        const Field& h = result.snapshots[s];
        write_profile_csv(out_path(cfg, snapshot_filename("nonlinear", cfg.label, h.time)),
                          h);
        std::vector<double> excess(grid.n);
        for (int i = 0; i < grid.n; ++i) excess[i] = h.values[i] - 1.0;
        const Field delta(grid, std::move(excess), h.time, FieldKind::excess);
        const RescaledProfile p = rescale(delta, cfg.norm, cfg.m);
        write_rescaled_csv(
            out_path(cfg, snapshot_filename("nonlinear", cfg.label + "_rescaled", h.time)),
            p);
    }
    write_diagnostics_csv(out_path(cfg, "nonlinear_" + cfg.label + "_diagnostics.csv"),
                          result.diagnostics);
    return 0;
}

int run_converge(const RunConfig& cfg) {
    check_times(cfg.times);
    const Grid1D grid = resolve_grid(cfg);
    const KernelSpec spec = kernel_of(cfg);
    const Field initial = cfg.profile.sample(grid);
    const double m0 = algebraic_volume(initial);

    ConvergenceReport report;
    for (double t : cfg.times) {
        const Field evolved = evolve_linear(initial, t, cfg.m);
        const RescaledProfile p = rescale(evolved, Normalisation::by_volume, cfg.m);
        ConvergenceRecord rec;
        rec.time = t;
        rec.sup_distance = sup_distance(p, AttractorRef::phi, spec);
        rec.a_bound_over_2pi_m0 = a_bound(initial, t) / (2.0 * M_PI * std::fabs(m0));
        rec.l2_distance = l2_distance(p, AttractorRef::phi, spec);
        report.records.push_back(rec);
    }
    report.rate_window_lo = cfg.times.front();
    report.rate_window_hi = cfg.times.back();
    try {
        report.fitted_rate = fit_rate(report);
    } catch (const InsufficientDataError&) {
        report.fitted_rate = std::nan("");
    }
    write_report_csv(out_path(cfg, "converge_" + cfg.label + ".csv"), report);
    return 0;
}

} // namespace

ProfileSpec parse_profile(const std::string& text, double center) {
    const auto colon = text.find(':');
    const std::string shape = text.substr(0, colon);
    std::vector<double> p;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t used = 0;
            p.push_back(std::stod(rest.substr(pos), &used));
            pos += used;
            if (pos < rest.size() && rest[pos] == ',') ++pos;
        }
    }
    auto need = [&](size_t n) {
        if (p.size() != n)
            throw DomainError("parse_profile: '" + shape + "' expects " +
                              std::to_string(n) + " parameters");
    };
    if (shape == "gate") {
        need(2);
        return ProfileSpec::gate(p[0], p[1], center);
    }
    if (shape == "gaussian") {
        need(2);
        return ProfileSpec::gaussian(p[0], p[1], center);
    }
    if (shape == "dipbump") {
        need(3);
        return ProfileSpec::dip_bump(p[0], p[1], p[2], center);
    }
    throw DomainError("parse_profile: unknown shape '" + shape + "'");
}

Grid1D resolve_grid(const RunConfig& cfg) {
    if (cfg.grid_n > 0) return Grid1D(cfg.grid_x_min, cfg.grid_dx, cfg.grid_n);
    const double t_max = cfg.times.empty() ? 1.0 : cfg.times.back();
    const double support = cfg.profile.support_radius() + std::fabs(cfg.profile.center);
    const double half = 10.0 * (support + 4.0 * std::pow(t_max, 1.0 / (2.0 * cfg.m)));
    const double dx = (cfg.command == Command::nonlinear) ? half / 256.0 : 0.05;
    int n = 8;
    while (n * dx < 2.0 * half) n *= 2;
    return Grid1D(-0.5 * n * dx, dx, n);
}

int run(const RunConfig& cfg) {
    try {
        apply_thread_cap();
        switch (cfg.command) {
            case Command::attractor: return run_attractor(cfg);
            case Command::linear: return run_linear(cfg);
            case Command::nonlinear: return run_nonlinear(cfg);
            case Command::converge: return run_converge(cfg);
        }
        throw DomainError("run: unknown command");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace thinfilm

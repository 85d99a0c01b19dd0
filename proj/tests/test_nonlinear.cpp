#include <doctest.h>

#include <cmath>

#include "thinfilm/linear.hpp"
#include "thinfilm/nonlinear.hpp"
#include "thinfilm/profiles.hpp"

using namespace thinfilm;

namespace {

// Smooth compact bump of given amplitude and support half-width.
ProfileSpec bump(double amplitude, double half_width) {
    return ProfileSpec::custom([amplitude, half_width](double y) {
        if (std::fabs(y) >= half_width) return 0.0;
        const double c = std::cos(M_PI * y / (2.0 * half_width));
        return amplitude * c * c * c * c;
    });
}

Field film_with(const ProfileSpec& p, const Grid1D& grid) {
    const Field excess = p.sample(grid);
    std::vector<double> h(grid.n);
    for (int i = 0; i < grid.n; ++i) h[i] = 1.0 + excess.values[i];
    return Field(grid, std::move(h), 0.0, FieldKind::height);
}

} // namespace

TEST_CASE("mobility mean: values, symmetry, bounds") {
    CHECK(mobility_mean(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(mobility_mean(0.7, 0.7) == doctest::Approx(0.7 * 0.7 * 0.7));
    CHECK(mobility_mean(1.0, 2.0) == doctest::Approx(8.0 / 3.0));
    for (double a : {0.2, 1.0, 3.0})
        for (double b : {0.5, 1.7}) {
            CHECK(mobility_mean(a, b) == mobility_mean(b, a));
            const double lo = std::pow(std::min(a, b), 3);
            const double hi = std::pow(std::max(a, b), 3);
            CHECK(mobility_mean(a, b) >= lo);
            CHECK(mobility_mean(a, b) <= hi);
        }
    CHECK_THROWS_AS(mobility_mean(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(mobility_mean(1.0, 0.0), DomainError);
}

TEST_CASE("the flat film is a fixed point") {
    const Grid1D grid(-20.0, 40.0 / 256, 256);
    Field flat(grid, std::vector<double>(256, 1.0), 0.0, FieldKind::height);
    const NonlinearConfig cfg = NonlinearConfig{}.resolved(grid.dx);
    auto [out, diag] = step_nonlinear(flat, 0.1, cfg);
    for (double v : out.values) CHECK(v == 1.0);
    CHECK(diag.newton_iters <= 1);
}

TEST_CASE("a step conserves mass exactly") {
    const Grid1D grid(-20.0, 40.0 / 512, 512);
    const Field h0 = film_with(bump(0.5, 2.0), grid);
    const double mass0 = excess_mass(h0);
    NonlinearConfig cfg = NonlinearConfig{}.resolved(grid.dx);
    Field h = h0;
    for (int s = 0; s < 20; ++s) {
        auto [next, diag] = step_nonlinear(h, 50 * cfg.dt_init, cfg);
        h = std::move(next);
        CHECK(std::fabs(diag.mass - mass0) <= 1e-12 * std::fabs(mass0));
        CHECK(diag.min_height > 0.0);
    }
}

TEST_CASE("one small-amplitude step matches the linear solver") {
    const Grid1D grid(-20.48, 0.04, 1024);
    const double eps = 1e-3;
    const ProfileSpec gauss = ProfileSpec::gaussian(eps * 2.0 * std::sqrt(2.0 * M_PI), 2.0);
    const Field h0 = film_with(gauss, grid);
    NonlinearConfig cfg;
    cfg.newton_tol = 1e-11;
    cfg = cfg.resolved(grid.dx);

    const double dt = 1e-3;
    auto [h1, diag] = step_nonlinear(h0, dt, cfg);
    const Field lin = evolve_linear(gauss.sample(grid), dt);
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i)
        worst = std::max(worst, std::fabs(h1.values[i] - 1.0 - lin.values[i]));
    CHECK(worst <= 1e-5 * eps);
}

TEST_CASE("adaptive evolution: snapshots land exactly, energy dissipates") {
    // the kernel's oscillating tail decays only like exp(-0.24 U^(4/3)), so
    // the box must keep |X|/T^(1/4) >= ~24 at the final time
    const Grid1D grid(-32.0, 64.0 / 256, 256);
    const Field h0 = film_with(bump(0.5, 2.0), grid);
    NonlinearConfig cfg;
    cfg.newton_tol = 1e-11;
    const auto run = evolve_nonlinear(h0, 1.0, {0.25, 1.0}, cfg);
    REQUIRE(run.snapshots.size() == 2);
    CHECK(run.snapshots[0].time == 0.25);
    CHECK(run.snapshots[1].time == 1.0);

    const NonlinearConfig rc = cfg.resolved(grid.dx);
    double prev_energy = capillary_energy(h0);
    const double mass0 = excess_mass(h0);
    for (const auto& d : run.diagnostics) {
        CHECK(d.energy <= prev_energy + 10 * rc.newton_tol);
        CHECK(d.min_height > 0.0);
        CHECK(std::fabs(d.mass - mass0) <= 1e-10 * std::fabs(mass0));
        prev_energy = d.energy;
    }
}

TEST_CASE("flat-film evolution returns flat snapshots") {
    const Grid1D grid(-16.0, 32.0 / 256, 256);
    Field flat(grid, std::vector<double>(256, 1.0), 0.0, FieldKind::height);
    const auto run = evolve_nonlinear(flat, 2.0, {1.0, 2.0}, NonlinearConfig{});
    for (const auto& snap : run.snapshots)
        for (double v : snap.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("boundary and configuration errors") {
    const Grid1D grid(-20.0, 40.0 / 256, 256);
    // perturbation touching the edge of the box
    std::vector<double> bad(256, 1.0);
    bad[1] = 1.5;
    Field h_bad(grid, std::move(bad), 0.0, FieldKind::height);
    CHECK_THROWS_AS(step_nonlinear(h_bad, 1e-4, NonlinearConfig{}.resolved(grid.dx)),
                    BoundaryError);

    NonlinearConfig bad_cfg;
    bad_cfg.dt_init = 1.0;
    bad_cfg.dt_min = 2.0;
    bad_cfg.dt_max = 3.0;
    CHECK_THROWS_AS(bad_cfg.validate(), DomainError);

    // an enormous fixed step on a violent profile cannot converge, and with
    // dt_min pinned at dt_init the controller must give up
    const Field rough = film_with(bump(0.9, 1.0), grid);
    NonlinearConfig stuck;
    stuck.dt_init = 1e3;
    stuck.dt_min = 1e3;
    stuck.dt_max = 1e3;
    stuck.newton_max_iters = 3;
    CHECK_THROWS_AS(evolve_nonlinear(rough, 2e3, {2e3}, stuck), StepFailure);
}

TEST_CASE("spatial refinement improves the solution second order") {
    // fixed dt so the comparison isolates the spatial error; the residual
    // roundoff floor scales like dt/dx^4, so the tolerance stays above it
    NonlinearConfig cfg;
    cfg.dt_init = cfg.dt_min = cfg.dt_max = 5e-3;
    cfg.newton_tol = 1e-10;

    auto solve = [&](int n) {
        const Grid1D grid(-32.0, 64.0 / n, n);
        const Field h0 = film_with(bump(0.5, 2.0), grid);
        return evolve_nonlinear(h0, 0.5, {0.5}, cfg).snapshots[0];
    };
    const Field coarse = solve(256);
    const Field mid = solve(512);
    const Field fine = solve(2048);

    auto err = [&](const Field& f) {
        const int stride_f = (int)std::lround(f.grid.dx / fine.grid.dx);
        double worst = 0.0;
        for (int i = 0; i < f.grid.n; ++i)
            worst = std::max(worst, std::fabs(f.values[i] - fine.values[i * stride_f]));
        return worst;
    };
    const double ratio = err(coarse) / err(mid);
    CHECK(ratio > 2.8);
    CHECK(ratio < 5.5);
}

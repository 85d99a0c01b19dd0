#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "thinfilm/csv.hpp"
#include "thinfilm/linear.hpp"
#include "thinfilm/run.hpp"
#include "thinfilm/scales.hpp"

using namespace thinfilm;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("nondimensionalisation: definitions and round trip") {
    const PhysicalScales s{0.03, 1.2, 1e-7};
    const auto unit = nondimensionalize(s.h0, s.time_scale(), s.h0, s);
    CHECK(unit.x == doctest::Approx(1.0));
    CHECK(unit.t == doctest::Approx(1.0));
    CHECK(unit.h == doctest::Approx(1.0));

    const auto origin = nondimensionalize(0.0, 0.0, 0.5e-7, s);
    CHECK(origin.x == 0.0);
    CHECK(origin.t == 0.0);
    CHECK(origin.h == doctest::Approx(0.5));

    const auto back = redimensionalize(unit.x, unit.t, unit.h, s);
    CHECK(back.x == doctest::Approx(s.h0).epsilon(1e-15));
    CHECK(back.t == doctest::Approx(s.time_scale()).epsilon(1e-15));
    CHECK(back.h == doctest::Approx(s.h0).epsilon(1e-15));

    CHECK_THROWS_AS(nondimensionalize(1.0, 1.0, 1.0, PhysicalScales{0.0, 1.0, 1.0}),
                    DomainError);
}

TEST_CASE("profile CSV round-trips to full precision") {
    TempDir dir("thinfilm_csv_test");
    const Grid1D grid(-12.8, 0.1, 256);
    const Field f = ProfileSpec::gaussian(0.1, 0.7).sample(grid);
    const auto path = (dir.path / "profile.csv").string();
    write_profile_csv(path, f);
    const Field g = read_profile_csv(path);
    CHECK(g.grid == f.grid);
    CHECK(g.time == f.time);
    CHECK(g.kind == f.kind);
    for (int i = 0; i < grid.n; ++i) CHECK(g.values[i] == f.values[i]);
}

TEST_CASE("snapshot filenames sort lexically by time") {
    CHECK(snapshot_filename("linear", "gate", 1.0) == "linear_gate_T1.000000.csv");
    CHECK(snapshot_filename("linear", "gate", 0.5) < snapshot_filename("linear", "gate", 2.0));
}

TEST_CASE("profile text parsing") {
    const ProfileSpec g = parse_profile("gate:1,0.1");
    CHECK(g.evaluate(0.0) == doctest::Approx(0.1));
    CHECK(g.evaluate(0.9) == 0.0);
    const ProfileSpec d = parse_profile("dipbump:2,0.1,0.5", 1.0);
    CHECK(d.evaluate(2.0) > 0.0);
    CHECK_THROWS_AS(parse_profile("blob:1"), DomainError);
    CHECK_THROWS_AS(parse_profile("gate:1"), DomainError);
}

TEST_CASE("attractor command emits the expected table") {
    TempDir dir("thinfilm_attractor_test");
    RunConfig cfg;
    cfg.command = Command::attractor;
    cfg.u_max = 10.0;
    cfg.du = 0.01;
    cfg.output_dir = dir.path.string();
    REQUIRE(run(cfg) == 0);

    std::ifstream in(dir.path / "attractor.csv");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "u,f");
    int rows = 0;
    double peak = 0.0, peak_u = -1.0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double u = std::stod(line.substr(0, comma));
        const double f = std::stod(line.substr(comma + 1));
        if (f > peak) {
            peak = f;
            peak_u = u;
        }
        ++rows;
    }
    CHECK(rows == 2001);
    CHECK(peak == doctest::Approx(0.2885).epsilon(1e-3));
    CHECK(peak_u == doctest::Approx(0.0));
}

TEST_CASE("linear command: snapshots, rescaled files, conserved volume") {
    TempDir dir("thinfilm_linear_test");
    RunConfig cfg;
    cfg.command = Command::linear;
    cfg.profile = ProfileSpec::gate(1.0, 0.1);
    cfg.label = "gate";
    cfg.times = {1.0, 10.0};
    cfg.grid_x_min = -51.2;
    cfg.grid_dx = 0.05;
    cfg.grid_n = 2048;
    cfg.norm = Normalisation::by_peak;
    cfg.output_dir = dir.path.string();
    REQUIRE(run(cfg) == 0);

    for (double t : cfg.times) {
        const Field f =
            read_profile_csv((dir.path / snapshot_filename("linear", "gate", t)).string());
        CHECK(algebraic_volume(f) == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(fs::exists(dir.path / snapshot_filename("linear", "gate_rescaled", t)));
    }
}

TEST_CASE("identical configuration produces bit-identical output") {
    TempDir dir1("thinfilm_det_1"), dir2("thinfilm_det_2");
    RunConfig cfg;
    cfg.command = Command::converge;
    cfg.profile = ProfileSpec::gate(1.0, 0.1);
    cfg.label = "gate";
    cfg.times = {1.0, 4.0, 16.0, 64.0};
    cfg.grid_x_min = -102.4;
    cfg.grid_dx = 0.05;
    cfg.grid_n = 4096;
    cfg.output_dir = dir1.path.string();
    REQUIRE(run(cfg) == 0);
    cfg.output_dir = dir2.path.string();
    REQUIRE(run(cfg) == 0);
    CHECK(slurp(dir1.path / "converge_gate.csv") == slurp(dir2.path / "converge_gate.csv"));
}

TEST_CASE("invalid configurations surface as a nonzero exit status") {
    RunConfig cfg;
    cfg.command = Command::linear;
    cfg.times = {2.0, 1.0}; // not increasing
    CHECK(run(cfg) == 1);
    cfg.times = {};
    CHECK(run(cfg) == 1);
}

#include "thinfilm/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "thinfilm/linear.hpp"

namespace thinfilm {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    return out;
}

const char* kind_name(FieldKind k) {
    return k == FieldKind::excess ? "excess" : "height";
}

const char* norm_name(Normalisation n) {
    switch (n) {
        case Normalisation::by_volume: return "volume";
        case Normalisation::by_peak: return "peak";
        case Normalisation::by_first_moment: return "moment1";
    }
    return "?";
}

} // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_profile_csv(const std::string& path, const Field& f) {
    auto out = open_out(path);
    out << "# time = " << format_number(f.time) << "\n";
    out << "# kind = " << kind_name(f.kind) << "\n";
    out << "# grid = " << format_number(f.grid.x_min) << "," << format_number(f.grid.dx)
        << "," << f.grid.n << "\n";
    double volume = 0.0;
    for (double v : f.values) volume += (f.kind == FieldKind::height) ? v - 1.0 : v;
    volume *= f.grid.dx;
    out << "# volume = " << format_number(volume) << "\n";
    out << "x,value\n";
    for (int i = 0; i < f.grid.n; ++i)
        out << format_number(f.grid.x(i)) << "," << format_number(f.values[i]) << "\n";
}

Field read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open for reading: " + path);
    double time = 0.0, x_min = 0.0, dx = 0.0;
    int n = 0;
    FieldKind kind = FieldKind::excess;
    std::vector<double> values;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line.substr(1));
            std::string key, eq;
            meta >> key >> eq;
            if (key == "time") meta >> time;
            else if (key == "kind") {
                std::string k;
                meta >> k;
                kind = (k == "height") ? FieldKind::height : FieldKind::excess;
            } else if (key == "grid") {
                char comma;
                meta >> x_min >> comma >> dx >> comma >> n;
            }
            continue;
        }
        if (!header_seen) { // x,value header line
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error("malformed row in " + path);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (n == 0 || (int)values.size() != n)
        throw Error("profile CSV metadata/rows mismatch in " + path);
    return Field(Grid1D(x_min, dx, n), std::move(values), time, kind);
}

void write_rescaled_csv(const std::string& path, const RescaledProfile& p) {
    auto out = open_out(path);
    out << "# normalisation = " << norm_name(p.normalisation) << "\n";
    out << "# T = " << format_number(p.time) << "\n";
    out << "# scale = " << format_number(p.scale) << "\n";
    out << "u,f\n";
    for (size_t i = 0; i < p.u.size(); ++i)
        out << format_number(p.u[i]) << "," << format_number(p.f[i]) << "\n";
}

void write_report_csv(const std::string& path, const ConvergenceReport& report) {
    auto out = open_out(path);
    out << "# fitted_rate = " << format_number(report.fitted_rate) << "\n";
    out << "# rate_window = " << format_number(report.rate_window_lo) << ","
        << format_number(report.rate_window_hi) << "\n";
    out << "T,sup_distance,a_bound,l2_distance\n";
    for (const auto& r : report.records)
        out << format_number(r.time) << "," << format_number(r.sup_distance) << ","
            << format_number(r.a_bound_over_2pi_m0) << "," << format_number(r.l2_distance)
            << "\n";
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<StepDiagnostics>& diags) {
    auto out = open_out(path);
    out << "time,dt,newton_iters,mass,energy,min_height\n";
    for (const auto& d : diags)
        out << format_number(d.time) << "," << format_number(d.dt_used) << ","
            << d.newton_iters << "," << format_number(d.mass) << ","
            << format_number(d.energy) << "," << format_number(d.min_height) << "\n";
}

void write_attractor_csv(const std::string& path, const std::vector<double>& u,
                         const std::vector<std::vector<double>>& columns) {
    auto out = open_out(path);
    out << "u,f";
    for (size_t c = 1; c < columns.size(); ++c) out << ",d" << c;
    out << "\n";
    for (size_t i = 0; i < u.size(); ++i) {
        out << format_number(u[i]);
        for (const auto& col : columns) out << "," << format_number(col[i]);
        out << "\n";
    }
}

std::string snapshot_filename(const std::string& command, const std::string& label,
                              double time) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "_T%.6f.csv", time);
    return command + "_" + label + buf;
}

} // namespace thinfilm

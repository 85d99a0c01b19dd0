#ifndef THINFILM_CSV_HPP
#define THINFILM_CSV_HPP

#include <string>
#include <vector>

#include "thinfilm/grid.hpp"
#include "thinfilm/nonlinear.hpp"
#include "thinfilm/similarity.hpp"

namespace thinfilm {

/** 17-significant-digit scientific formatting; round-trips 64-bit floats. */
std::string format_number(double v);

/** Profile CSV: '#' metadata (time, kind, grid, volume), header x,value. */
void write_profile_csv(const std::string& path, const Field& f);
Field read_profile_csv(const std::string& path);

/** Rescaled CSV: metadata (normalisation, T, scale), header u,f. */
void write_rescaled_csv(const std::string& path, const RescaledProfile& p);

/** Report CSV: header T,sup_distance,a_bound,l2_distance. */
void write_report_csv(const std::string& path, const ConvergenceReport& report);

/** Diagnostics CSV: header time,dt,newton_iters,mass,energy,min_height. */
void write_diagnostics_csv(const std::string& path,
                           const std::vector<StepDiagnostics>& diags);

/** Attractor CSV: header u,f followed by requested derivative columns d1..dn. */
void write_attractor_csv(const std::string& path, const std::vector<double>& u,
                         const std::vector<std::vector<double>>& columns);

/** <command>_<label>_T<time>.csv with the time in fixed-point microseconds of
    dimensionless time, so lexical order matches temporal order. */
std::string snapshot_filename(const std::string& command, const std::string& label,
                              double time);

} // namespace thinfilm

#endif

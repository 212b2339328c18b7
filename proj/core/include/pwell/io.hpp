#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "pwell/evolution.hpp"

namespace pwell {

struct RunReport;

// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

// CSV with header t,L,J,I,grad_p,lq_q,log_term,dt and one row per sample.
void emit_series(const Trajectory& traj, std::ostream& out);
void emit_series(const Trajectory& traj, const std::filesystem::path& path);

/// Paired columns for plotting: observed L next to the decay envelope when
/// the decay report is present, and L^{(2-q)/2} next to its linear fit for a
/// blow-up run, with a closing row at the extrapolated blow-up time.
void emit_plot_data(const RunReport& report, std::ostream& out);
void emit_plot_data(const RunReport& report, const std::filesystem::path& path);

// Writes series, plot data, JSON and text report into out_dir using the
// file names from the config.
void write_artifacts(const RunReport& report, const std::filesystem::path& out_dir);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pwell

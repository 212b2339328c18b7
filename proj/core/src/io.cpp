#include "pwell/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "pwell/error.hpp"
#include "pwell/experiment.hpp"

namespace pwell {

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw ConfigError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

void emit_series(const Trajectory& traj, std::ostream& out) {
  out << "t,L,J,I,grad_p,lq_q,log_term,dt\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& e = traj.reports[k];
    out << format_number(traj.times[k]) << ',' << format_number(e.L) << ','
        << format_number(e.J) << ',' << format_number(e.I) << ',' << format_number(e.grad_p)
        << ',' << format_number(e.lq_q) << ',' << format_number(e.log_term) << ','
        << format_number(traj.dts[k]) << '\n';
  }
}

void emit_series(const Trajectory& traj, const std::filesystem::path& path) {
  auto out = open_out(path);
  emit_series(traj, out);
  check_written(out, path);
}

void emit_plot_data(const RunReport& report, std::ostream& out) {
  const auto& traj = report.trajectory;
  const BoundReport* decay = nullptr;
  for (const auto& b : report.bounds) {
    if (b.theorem == TheoremId::T23_decay && b.envelope.size() == traj.size()) decay = &b;
  }
  const bool blow = traj.verdict == Verdict::blowup && std::isfinite(traj.T_num);
  const double power = (2.0 - report.config.params.q) / 2.0;

  out << "t,L";
  if (decay) out << ",L_envelope";
  if (blow) out << ",L_pow,L_pow_fit";
  out << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = traj.times[k];
    out << format_number(t) << ',' << format_number(traj.reports[k].L);
    if (decay) out << ',' << format_number(decay->envelope[k]);
    if (blow) {
      out << ',' << format_number(std::pow(traj.reports[k].L, power)) << ','
          << format_number(traj.fit_intercept + traj.fit_slope * t);
    }
    out << '\n';
  }
  if (blow) {
    // The fitted line reaches zero at the extrapolated blow-up time.
    out << format_number(traj.T_num) << ',';
    if (decay) out << ',';
    out << ',' << format_number(traj.fit_intercept + traj.fit_slope * traj.T_num) << '\n';
  }
}

void emit_plot_data(const RunReport& report, const std::filesystem::path& path) {
  auto out = open_out(path);
  emit_plot_data(report, out);
  check_written(out, path);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  check_written(out, path);
}

void write_artifacts(const RunReport& report, const std::filesystem::path& out_dir) {
  const auto& o = report.config.outputs;
  emit_series(report.trajectory, out_dir / o.csv);
  emit_plot_data(report, out_dir / o.plot);
  write_text(out_dir / o.json, to_json(report).dump(2) + "\n");
  write_text(out_dir / o.report, text_report(report));
}

}  // namespace pwell

#include "pwell/params.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pwell/error.hpp"

namespace pwell {

ValidationError::ValidationError(std::vector<std::string> clauses)
    : InputError([&] {
        std::string msg = "validation failed:";
        for (const auto& c : clauses) msg += "\n  - " + c;
        return msg;
      }()),
      clauses_(std::move(clauses)) {}

std::vector<std::string> Params::violations() const {
  std::vector<std::string> out;
  if (!(p >= 2.0)) out.push_back(fmt::format("p >= 2 fails (p = {})", p));
  if (!(s >= 0.0)) out.push_back(fmt::format("s >= 0 fails (s = {})", s));
  if (!(s <= 2.0)) out.push_back(fmt::format("s <= 2 fails (s = {})", s));
  if (!(N > p)) {
    out.push_back(fmt::format("N > p fails (N = {}, p = {})", N, p));
  }
  if (!(q > p)) out.push_back(fmt::format("p < q fails (p = {}, q = {})", p, q));
  // Np/(N-p) is only meaningful for N > p; otherwise the clause above already fired.
  if (N > p && !(q < critical_exponent())) {
    out.push_back(fmt::format("q < Np/(N-p) fails (q = {}, Np/(N-p) = {})", q,
                              critical_exponent()));
  }
  if (!(R > 0.0) || !std::isfinite(R)) out.push_back(fmt::format("R > 0 fails (R = {})", R));
  return out;
}

void Params::validate() const {
  auto v = violations();
  if (!v.empty()) throw ValidationError(std::move(v));
}

double unit_sphere_area(int N) {
  const double half = 0.5 * N;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double ball_volume(int N, double R) { return unit_sphere_area(N) * std::pow(R, N) / N; }

}  // namespace pwell

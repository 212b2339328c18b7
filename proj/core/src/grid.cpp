#include "pwell/grid.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pwell/error.hpp"

namespace pwell {

namespace {

// |S^{N-1}| * int_a^b r^{N-1-beta} dr
double shell_integral(double area, int N, double beta, double a, double b) {
  const double e = N - beta;
  return area * (std::pow(b, e) - std::pow(a, e)) / e;
}

}  // namespace

RadialGrid::RadialGrid(const Params& params, int cells)
    : cells_(cells),
      radius_(params.R),
      width_(params.R / cells),
      dimension_(params.N),
      weight_exponent_(params.s),
      sphere_area_(unit_sphere_area(params.N)) {
  if (cells < 1) throw ConfigError(fmt::format("grid needs at least one cell (got {})", cells));
  if (!(params.R > 0.0)) throw ConfigError("grid radius must be positive");
  if (!(params.s < params.N)) throw DomainError("weight exponent must be below the dimension");

  centers_.resize(cells_);
  volumes_.resize(cells_);
  face_weights_.resize(cells_);
  for (int i = 0; i < cells_; ++i) {
    const double a = i * width_;
    const double b = (i + 1 == cells_) ? radius_ : (i + 1) * width_;
    centers_[i] = (i + 0.5) * width_;
    volumes_[i] = shell_integral(sphere_area_, dimension_, 0.0, a, b);
  }
  singular_volumes_ = weighted_volumes(weight_exponent_);
  for (int f = 1; f <= cells_; ++f) {
    const double rf = (f == cells_) ? radius_ : f * width_;
    face_weights_[f - 1] = sphere_area_ * std::pow(rf, dimension_ - 1) * face_spacing(f);
  }
}

std::vector<double> RadialGrid::weighted_volumes(double beta) const {
  if (!(beta < dimension_)) throw DomainError("weight exponent must be below the dimension");
  std::vector<double> out(cells_);
  for (int i = 0; i < cells_; ++i) {
    const double a = i * width_;
    const double b = (i + 1 == cells_) ? radius_ : (i + 1) * width_;
    out[i] = shell_integral(sphere_area_, dimension_, beta, a, b);
  }
  return out;
}

double RadialGrid::total_volume() const {
  double sum = 0.0;
  for (double w : volumes_) sum += w;
  return sum;
}

std::shared_ptr<const RadialGrid> make_grid(const Params& params, int cells) {
  params.validate();
  if (cells < 4) throw ConfigError(fmt::format("grid needs at least 4 cells (got {})", cells));
  return std::make_shared<const RadialGrid>(params, cells);
}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid)
    : grid_(std::move(grid)), values_(grid_->cells(), 0.0) {}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_->cells()) {
    throw ConfigError(fmt::format("field has {} values but the grid has {} cells",
                                  values_.size(), grid_->cells()));
  }
}

RadialField RadialField::sample(std::shared_ptr<const RadialGrid> grid,
                                const std::function<double(double)>& f) {
  std::vector<double> v;
  v.reserve(grid->cells());
  for (double r : grid->centers()) v.push_back(f(r));
  return RadialField(std::move(grid), std::move(v));
}

bool RadialField::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x == 0.0; });
}

bool RadialField::is_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

double RadialField::max_abs() const noexcept {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

RadialField RadialField::scaled(double factor) const {
  RadialField out = *this;
  for (double& x : out.values_) x *= factor;
  return out;
}

}  // namespace pwell

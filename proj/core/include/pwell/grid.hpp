#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pwell/params.hpp"

namespace pwell {

/// Cell-centered discretization of the radial interval (0, R).
///
/// Cell i covers [i h, (i+1) h] with center r_i = (i + 1/2) h, so no
/// quadrature node sits at the origin. Two families of cell weights are kept:
///
///   volume(i)          = |S^{N-1}| * int_cell r^{N-1} dr
///   singular_volume(i) = |S^{N-1}| * int_cell r^{N-1-s} dr
///
/// Both are closed-form shell integrals, so they sum exactly to the
/// corresponding integrals over the ball. Faces are indexed f = 1..M; face f
/// sits at r = f h. Face M is the Dirichlet boundary and lies half a cell
/// away from the last center.
class RadialGrid {
 public:
  RadialGrid(const Params& params, int cells);

  int cells() const noexcept { return cells_; }
  double radius() const noexcept { return radius_; }
  double width() const noexcept { return width_; }
  int dimension() const noexcept { return dimension_; }
  double weight_exponent() const noexcept { return weight_exponent_; }
  double sphere_area() const noexcept { return sphere_area_; }

  std::span<const double> centers() const noexcept { return centers_; }
  std::span<const double> volumes() const noexcept { return volumes_; }
  std::span<const double> singular_volumes() const noexcept { return singular_volumes_; }

  // Cell integrals of r^{N-1-beta} times the sphere area, for any beta < N.
  std::vector<double> weighted_volumes(double beta) const;

  // Quadrature weight attached to face f (1 <= f <= M) in the gradient
  // integral: |S^{N-1}| r_f^{N-1} times the distance between the values the
  // face difference connects.
  std::span<const double> face_weights() const noexcept { return face_weights_; }

  // Distance spanned by the difference across face f: h for interior faces,
  // h/2 for the boundary face.
  double face_spacing(int f) const noexcept { return f == cells_ ? 0.5 * width_ : width_; }

  double total_volume() const;

 private:
  int cells_;
  double radius_;
  double width_;
  int dimension_;
  double weight_exponent_;
  double sphere_area_;
  std::vector<double> centers_;
  std::vector<double> volumes_;
  std::vector<double> singular_volumes_;
  std::vector<double> face_weights_;  // index f-1 for face f
};

/// Validated factory: the parameter regime must be admissible and the grid
/// must have at least four cells.
std::shared_ptr<const RadialGrid> make_grid(const Params& params, int cells);

/// Radial profile sampled at cell centers. The Dirichlet value u(R) = 0 and
/// the zero-flux condition at r = 0 are implied by the grid, not stored.
class RadialField {
 public:
  RadialField() = default;
  explicit RadialField(std::shared_ptr<const RadialGrid> grid);
  RadialField(std::shared_ptr<const RadialGrid> grid, std::vector<double> values);

  // Samples f at the cell centers.
  static RadialField sample(std::shared_ptr<const RadialGrid> grid,
                            const std::function<double(double)>& f);

  const RadialGrid& grid() const { return *grid_; }
  const std::shared_ptr<const RadialGrid>& grid_ptr() const noexcept { return grid_; }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  double max_abs() const noexcept;

  RadialField scaled(double factor) const;

 private:
  std::shared_ptr<const RadialGrid> grid_;
  std::vector<double> values_;
};

}  // namespace pwell

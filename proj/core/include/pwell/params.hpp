#pragma once

#include <string>
#include <vector>

namespace pwell {

// Exponents of  |x|^{-s} u_t - div(|grad u|^{p-2} grad u) = |u|^{q-2} u ln|u|
// posed on the ball of radius R in R^N with homogeneous Dirichlet data.
struct Params {
  double p = 2.0;  // diffusion exponent
  double q = 3.0;  // source exponent
  int N = 3;       // spatial dimension
  double s = 0.0;  // singular weight exponent
  double R = 1.0;  // domain radius

  // Np/(N-p), the critical Sobolev exponent.
  double critical_exponent() const { return N * p / (N - p); }

  // Upper end of the admissible alpha range (0, Np/(N-p) - q].
  double alpha_max() const { return critical_exponent() - q; }

  // Human-readable description of each violated admissibility clause. Empty
  // when the parameters are admissible.
  std::vector<std::string> violations() const;

  // Throws ValidationError listing every violated clause.
  void validate() const;
};

// Surface area of the unit sphere in R^N.
double unit_sphere_area(int N);

// Lebesgue measure of the ball of radius R in R^N.
double ball_volume(int N, double R);

}  // namespace pwell

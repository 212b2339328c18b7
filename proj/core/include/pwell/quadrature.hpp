#pragma once

#include "pwell/grid.hpp"

namespace pwell {

// int_Omega |x|^{-s} u^2 dx, using exact cell integrals of the weight.
double weighted_l2_sq(const RadialField& u, double s);

// int_Omega |grad u|^p dx with face differences. Interior faces use
// (u_{i+1} - u_i)/h; the boundary face uses the Dirichlet ghost value
// (0 - u_{M-1})/(h/2); the face at the origin carries no flux.
double grad_norm_p(const RadialField& u, double p);

// (int_Omega |u|^e dx)^{1/e}
double lq_norm(const RadialField& u, double exponent);

// int_Omega |u|^e dx, the unrooted form of lq_norm.
double lq_norm_pow(const RadialField& u, double exponent);

// int_Omega |u|^gamma |x|^{-beta} dx for an arbitrary weight exponent.
double weighted_lq_pow(const RadialField& u, double gamma, double beta);

}  // namespace pwell

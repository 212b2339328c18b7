#pragma once

#include <cmath>
#include <functional>
#include <memory>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pwell/grid.hpp"
#include "pwell/params.hpp"

namespace oracle {

// |S^{N-1}| int_0^R g(r) r^{N-1} dr by adaptive Gauss-Kronrod. Independent
// of the cell quadrature in the library.
inline double radial_integral(const std::function<double(double)>& g, int N, double R) {
  const double area = 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
  auto f = [&](double r) { return g(r) * std::pow(r, N - 1); };
  return area * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, R, 20, 1e-14);
}

// |S^{N-1}| int_0^R g(r) r^{N-1-s} dr for smooth g and s < N, so the only
// singularity is the explicit weight. tanh_sinh handles the endpoint.
inline double singular_radial_integral(const std::function<double(double)>& g, int N, double s, double R) {
  const double area = 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double r) { return g(r) * std::pow(r, N - 1 - s); };
  return area * ts.integrate(f, 0.0, R);
}

inline pwell::Params params(double p, double q, int N, double s, double R = 1.0) {
  pwell::Params P;
  P.p = p;
  P.q = q;
  P.N = N;
  P.s = s;
  P.R = R;
  return P;
}

}  // namespace oracle

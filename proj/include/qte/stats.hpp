#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace qte {

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse standard normal CDF (Wichura's PPND16 rational approximation,
// relative accuracy ~1e-15). Throws BadConfig for p outside (0,1).
double normal_quantile(double p);

// Adaptive Simpson quadrature of f over [a,b] to absolute tolerance tol.
// Throws QuadratureFailure when the recursion cannot reach tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

// Root of a continuous monotone f on a bracketing interval [a,b]
// (f(a), f(b) of opposite sign) by bisection with secant acceleration.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Gauss-Hermite nodes/weights for integrals of g against the standard
// normal density: E g(Z) ~= sum_i w_i g(x_i).
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermite gauss_hermite(int n);

}  // namespace qte

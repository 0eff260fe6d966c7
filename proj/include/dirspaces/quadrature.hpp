#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dirspaces {

/// Nodes and weights of a Gauss rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on
/// (0, inf); the weights sum to Gamma(alpha + 1). Rules are cached.
const GaussRule& gauss_laguerre(std::size_t n, double alpha);

/// Integral of f over [a, b] by adaptive 31-point Gauss-Kronrod. Throws
/// NumericError if the error estimate stays above tol * max(1, |I|).
double adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace dirspaces

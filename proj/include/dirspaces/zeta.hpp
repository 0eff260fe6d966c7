#pragma once

namespace dirspaces {

/// Riemann zeta on the real axis, x > 1, by Euler-Maclaurin summation
/// (absolute error below 1e-12). Throws PoleError for x <= 1.
double zeta(double x);

}  // namespace dirspaces

#pragma once

// Bohr correspondence: n = p_1^{a_1} ... p_k^{a_k}  <->  z_1^{a_1} ... z_k^{a_k},
// turning a Dirichlet polynomial into an analytic polynomial on the polytorus.

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "dirspaces/primes.hpp"
#include "dirspaces/series.hpp"

namespace dirspaces {

/// Exponent multi-index over the first k primes, without trailing zeros.
struct BohrMonomial {
    std::vector<unsigned> exponents;

    static BohrMonomial of(std::size_t n, const PrimeTable& primes);
    /// The integer n whose factorization this monomial encodes.
    std::size_t index(const PrimeTable& primes) const;

    auto operator<=>(const BohrMonomial&) const = default;
};

struct PolytorusPolynomial {
    std::map<BohrMonomial, Complex> terms;
    /// Number of torus variables, i.e. primes up to the largest one used.
    std::size_t dimension = 0;
};

/// Requires an exact series.
PolytorusPolynomial bohr_lift(const DirichletSeries& f);

/// Inverse lift, an exact series with the given truncation (at least the
/// largest index present).
DirichletSeries bohr_unlift(const PolytorusPolynomial& poly, std::size_t truncation);

}  // namespace dirspaces

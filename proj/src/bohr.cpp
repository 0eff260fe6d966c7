#include "dirspaces/bohr.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dirspaces/error.hpp"

namespace dirspaces {

BohrMonomial BohrMonomial::of(std::size_t n, const PrimeTable& primes) {
    BohrMonomial m;
    for (const auto& [p, e] : primes.factor(n)) {
        const std::size_t k = primes.prime_index(p);
        if (m.exponents.size() <= k) m.exponents.resize(k + 1, 0);
        m.exponents[k] = e;
    }
    return m;
}

std::size_t BohrMonomial::index(const PrimeTable& primes) const {
    std::size_t n = 1;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) continue;
        if (k >= primes.primes().size()) throw std::out_of_range("monomial uses an untabulated prime");
        const std::size_t p = primes.primes()[k];
        for (unsigned e = 0; e < exponents[k]; ++e) {
            if (n > std::numeric_limits<std::size_t>::max() / p) {
                throw std::overflow_error("monomial index overflows");
            }
            n *= p;
        }
    }
    return n;
}

PolytorusPolynomial bohr_lift(const DirichletSeries& f) {
    if (!f.exact()) throw PreconditionError("bohr_lift: series is not an exact polynomial");
    const auto primes = PrimeTable::shared(f.truncation());
    PolytorusPolynomial out;
    for (const auto& [n, a] : f.terms()) {
        auto m = BohrMonomial::of(n, *primes);
        out.dimension = std::max(out.dimension, m.exponents.size());
        out.terms.emplace(std::move(m), a);
    }
    return out;
}

DirichletSeries bohr_unlift(const PolytorusPolynomial& poly, std::size_t truncation) {
    const auto primes = PrimeTable::shared(std::max<std::size_t>(truncation, 2));
    std::map<std::int64_t, Complex> terms;
    for (const auto& [m, a] : poly.terms) {
        const std::size_t n = m.index(*primes);
        if (n > truncation) {
            throw InvalidIndexError("monomial index " + std::to_string(n) + " exceeds truncation " +
                                    std::to_string(truncation));
        }
        terms[static_cast<std::int64_t>(n)] = a;
    }
    return DirichletSeries::from_terms(terms, truncation);
}

}  // namespace dirspaces

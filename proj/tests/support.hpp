#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dirspaces/measure.hpp"
#include "dirspaces/series.hpp"
#include "dirspaces/symbol.hpp"

namespace testing_support {

using dirspaces::Complex;
using dirspaces::DirichletSeries;
using dirspaces::Measure;
using dirspaces::Symbol;

inline DirichletSeries poly(const std::map<std::int64_t, Complex>& terms, std::size_t n = 0) {
    std::size_t largest = 1;
    for (const auto& [k, v] : terms) largest = std::max<std::size_t>(largest, static_cast<std::size_t>(k));
    return DirichletSeries::from_terms(terms, n ? n : largest);
}

inline Symbol symbol(int c0, const std::map<std::int64_t, Complex>& terms) { return Symbol(c0, poly(terms)); }

/// Admissible symbols that are not vertical translations.
inline std::vector<Symbol> gallery() {
    return {symbol(2, {{1, 0.0}}),
            symbol(1, {{1, 1.0}}),
            symbol(1, {{1, 1.0}, {2, 0.5}}),
            symbol(3, {{1, Complex{0.0, 1.0}}}),
            symbol(1, {{1, 0.5}, {4, 0.25}}),
            symbol(2, {{1, 1.0}})};
}

inline Symbol vertical_translation(double tau) { return symbol(1, {{1, Complex{0.0, tau}}}); }

/// (mu_0 + mu_1) / 2, density e^{-2 sigma} (1 + 2 sigma), as a user density.
inline Measure mixture_density() {
    return Measure::density([](double s) { return std::exp(-2.0 * s) * (1.0 + 2.0 * s); }, {}, "mixture");
}

/// Heavy-tailed density 2 / (1 + sigma)^3 on the composite scheme.
inline Measure pareto_density() {
    dirspaces::QuadratureSpec spec;
    spec.scheme = dirspaces::QuadratureScheme::AdaptiveComposite;
    return Measure::density([](double s) { return 2.0 / std::pow(1.0 + s, 3); }, spec, "pareto");
}

/// Exact polynomial of the given truncation with `count` random terms of
/// modulus at most 1 (index 1 always present).
inline DirichletSeries random_poly(std::mt19937_64& rng, std::size_t truncation, std::size_t count) {
    std::uniform_int_distribution<std::size_t> index(1, truncation);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Complex> c(truncation, Complex{});
    c[0] = Complex{unit(rng), unit(rng)};
    for (std::size_t k = 0; k < count; ++k) c[index(rng) - 1] = Complex{unit(rng), unit(rng)};
    return DirichletSeries(std::move(c), true);
}

/// Random exact polynomial without constant term.
inline DirichletSeries random_tail_poly(std::mt19937_64& rng, std::size_t truncation, std::size_t count) {
    DirichletSeries f = random_poly(rng, truncation, count);
    std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
    c[0] = 0.0;
    return DirichletSeries(std::move(c), true);
}

}  // namespace testing_support

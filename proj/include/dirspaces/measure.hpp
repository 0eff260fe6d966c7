#pragma once

// Probability measures d mu = h(sigma) d sigma on (0, inf) and the weights
//   w_h(n) = int_0^inf n^{-2 sigma} h(sigma) d sigma
// that make A^2_mu a weighted coefficient-sequence space.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dirspaces {

enum class QuadratureScheme {
    GaussLaguerre,      ///< rule matched to e^{-2 sigma}; for Gamma-type densities
    AdaptiveComposite,  ///< Gauss-Kronrod on dyadic panels, truncated at mass 1 - 1e-12
};

struct QuadratureSpec {
    std::size_t nodes = 64;
    QuadratureScheme scheme = QuadratureScheme::GaussLaguerre;
    double tolerance = 1e-8;
    /// Points where h may have a kink; composite panels are split there.
    std::vector<double> breakpoints;
};

/// Exactly 1 / (log n + 1)^{alpha + 1}. Throws InvalidMeasureError for alpha <= -1.
double alpha_weight(double alpha, std::size_t n);

class Measure {
public:
    using Density = std::function<double(double)>;

    /// mu_alpha, density 2^{alpha+1} / Gamma(alpha+1) sigma^alpha e^{-2 sigma}.
    static Measure alpha(double alpha, QuadratureSpec spec = {});

    /// User density. Validated on construction: unit mass within 1e-8,
    /// nonnegative and finite at every sampled node, positive on some sampled
    /// subinterval, and positive somewhere in (0, 1e-2] so that 0 is in the
    /// support.
    static Measure density(Density h, QuadratureSpec spec, std::string label = "density");

    bool is_alpha() const noexcept;
    /// Throws PreconditionError for density measures.
    double alpha_parameter() const;
    double density_at(double sigma) const;
    const QuadratureSpec& quadrature() const noexcept;
    std::string tag() const;

    /// int g d mu. Gauss rules are checked by node doubling; a change larger
    /// than the tolerance is a NumericError.
    double integrate(const std::function<double(double)>& g) const;
    /// Same, with a relative tolerance in place of the spec's.
    double integrate(const std::function<double(double)>& g, double tolerance) const;

    /// w_h(n), memoized. Closed form for mu_alpha.
    double weight(std::size_t n) const;
    /// w_h(1..N) as a shared table; element k is w_h(k + 1).
    std::shared_ptr<const std::vector<double>> weights(std::size_t truncation) const;

    /// w_h(t) for real t >= 1.
    double weight_at(double t) const;
    /// w_h(t) by quadrature regardless of the measure family.
    double weight_by_quadrature(double t) const;
    /// w_h(e^u), usable where e^u overflows.
    double weight_at_log(double u) const;

    /// Mean of sigma under the tilted measure t^{-2 sigma} d mu / w_h(t).
    /// n^{-x} / w_h(n) is nonincreasing in n past t whenever x >= 2 * tilted_mean(t).
    double tilted_mean(double t) const;

private:
    struct Impl;
    explicit Measure(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace dirspaces

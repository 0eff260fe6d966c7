#include "dirspaces/measure.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "dirspaces/error.hpp"
#include "dirspaces/quadrature.hpp"

namespace dirspaces {

namespace {

constexpr std::size_t kMaxNodes = 512;
constexpr double kTailMass = 1e-12;
constexpr double kMassTolerance = 1e-8;

double checked(double v) {
    if (!std::isfinite(v)) throw NumericError("integrand returned a non-finite value");
    return v;
}

// Gauss-Kronrod over [a, b], split at the sorted breakpoints inside it.
double split_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                     const std::vector<double>& breaks) {
    double sum = 0.0;
    double left = a;
    for (auto it = std::upper_bound(breaks.begin(), breaks.end(), a); it != breaks.end() && *it < b; ++it) {
        sum += adaptive_kronrod(f, left, *it, tol);
        left = *it;
    }
    return sum + adaptive_kronrod(f, left, b, tol);
}

}  // namespace

struct Measure::Impl {
    bool alpha_family = true;
    double alpha = 0.0;
    Density h;
    QuadratureSpec spec;
    std::string label;
    std::vector<double> panel_edges;  // composite scheme only

    mutable std::mutex mutex;
    mutable std::shared_ptr<const std::vector<double>> table;

    double density(double sigma) const {
        if (!(sigma > 0.0)) return 0.0;
        if (alpha_family) {
            return std::exp((alpha + 1.0) * std::log(2.0) - std::lgamma(alpha + 1.0) +
                            alpha * std::log(sigma) - 2.0 * sigma);
        }
        return h(sigma);
    }

    // Gauss-Laguerre sum with n nodes. For mu_alpha the rule carries the
    // whole density; for a user density the rule carries e^{-2 rate sigma}
    // and the sum is int g(sigma) e^{-2 (rate - 1) sigma} h(sigma) d sigma.
    double gauss_sum(std::size_t n, const std::function<double(double)>& g, double rate = 1.0) const {
        double sum = 0.0;
        if (alpha_family) {
            const GaussRule& rule = gauss_laguerre(n, alpha);
            const double norm = std::tgamma(alpha + 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (rule.weights[i] == 0.0) continue;
                sum += rule.weights[i] / norm * checked(g(0.5 * rule.nodes[i]));
            }
        } else {
            const GaussRule& rule = gauss_laguerre(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (rule.weights[i] <= 0.0) continue;
                const double sigma = 0.5 * rule.nodes[i] / rate;
                const double hv = checked(h(sigma));
                if (hv == 0.0) continue;
                const double scale = 0.5 / rate * std::exp(std::log(rule.weights[i]) + 2.0 * sigma);
                sum += scale * hv * checked(g(sigma));
            }
        }
        return checked(sum);
    }

    double gauss_integrate(const std::function<double(double)>& g, double rate, double tolerance) const {
        std::size_t n = std::max<std::size_t>(spec.nodes, 2);
        double coarse = gauss_sum(n, g, rate);
        std::ostringstream trail;
        trail << n << ':' << coarse;
        while (2 * n <= kMaxNodes) {
            const double fine = gauss_sum(2 * n, g, rate);
            trail << ", " << 2 * n << ':' << fine;
            if (std::abs(fine - coarse) <= tolerance * std::max(1.0, std::abs(fine))) return fine;
            coarse = fine;
            n *= 2;
        }
        std::ostringstream os;
        os.precision(17);
        os << "quadrature did not converge under node doubling (" << trail.str() << ")";
        throw NumericError(os.str());
    }

    double composite_integrate(const std::function<double(double)>& g, double tolerance) const {
        const double tol = tolerance * 1e-2;
        double sum = 0.0;
        for (std::size_t k = 0; k + 1 < panel_edges.size(); ++k) {
            sum += split_kronrod(
                [&](double sigma) { return checked(h(sigma)) * checked(g(sigma)); }, panel_edges[k],
                panel_edges[k + 1], tol, spec.breakpoints);
        }
        return checked(sum);
    }

    double integrate(const std::function<double(double)>& g, double tolerance) const {
        if (!alpha_family && spec.scheme == QuadratureScheme::AdaptiveComposite) {
            return composite_integrate(g, tolerance);
        }
        return gauss_integrate(g, 1.0, tolerance);
    }

    double integrate(const std::function<double(double)>& g) const { return integrate(g, spec.tolerance);
    }

    // int g(sigma) t^{-2 sigma} d mu. For large t the mass sits near 0, so a
    // user density gets a Laguerre rule stretched to the decay rate 1 + log t.
    double tilted_integrate(const std::function<double(double)>& g, double log_t) const {
        if (!alpha_family && spec.scheme == QuadratureScheme::GaussLaguerre) {
            return gauss_integrate(g, 1.0 + log_t, spec.tolerance);
        }
        return integrate([&](double sigma) { return g(sigma) * std::exp(-2.0 * sigma * log_t); });
    }

    double weight_by_quadrature(double t) const { return weight_by_log(std::log(t)); }

    double weight_by_log(double log_t) const {
        return tilted_integrate([](double) { return 1.0; }, log_t);
    }

    double weight_at(double t) const {
        if (alpha_family) return std::pow(std::log(t) + 1.0, -(alpha + 1.0));
        return weight_by_quadrature(t);
    }
};

double alpha_weight(double alpha, std::size_t n) {
    if (!(alpha > -1.0)) throw InvalidMeasureError("alpha must exceed -1");
    if (n < 1) throw InvalidIndexError("weight index must be at least 1");
    return std::pow(std::log(static_cast<double>(n)) + 1.0, -(alpha + 1.0));
}

Measure Measure::alpha(double alpha, QuadratureSpec spec) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw InvalidMeasureError("alpha must exceed -1");
    if (spec.nodes < 2) throw InvalidMeasureError("quadrature needs at least 2 nodes");
    if (!(spec.tolerance > 0.0)) throw InvalidMeasureError("quadrature tolerance must be positive");
    auto impl = std::make_shared<Impl>();
    impl->alpha_family = true;
    impl->alpha = alpha;
    impl->spec = spec;
    impl->spec.scheme = QuadratureScheme::GaussLaguerre;
    std::ostringstream os;
    os << "alpha(" << alpha << ')';
    impl->label = os.str();
    return Measure(std::move(impl));
}

Measure Measure::density(Density h, QuadratureSpec spec, std::string label) {
    if (!h) throw InvalidMeasureError("density function is empty");
    if (spec.nodes < 2) throw InvalidMeasureError("quadrature needs at least 2 nodes");
    if (!(spec.tolerance > 0.0)) throw InvalidMeasureError("quadrature tolerance must be positive");
    auto impl = std::make_shared<Impl>();
    impl->alpha_family = false;
    impl->h = std::move(h);
    impl->spec = spec;
    std::sort(impl->spec.breakpoints.begin(), impl->spec.breakpoints.end());
    impl->label = std::move(label);
    const auto& breaks = impl->spec.breakpoints;

    std::vector<double> samples;
    if (spec.scheme == QuadratureScheme::AdaptiveComposite) {
        // Dyadic panels; stop once a panel past sigma = 1 carries negligible mass.
        std::vector<double> edges{0.0, 0.125, 0.25, 0.5, 1.0};
        double mass = 0.0;
        for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
            mass += split_kronrod(impl->h, edges[k], edges[k + 1], spec.tolerance * 1e-2, breaks);
        }
        for (int k = 0;; ++k) {
            if (k > 60) throw InvalidMeasureError("density tail does not decay: mass keeps accumulating");
            const double a = edges.back();
            const double panel = split_kronrod(impl->h, a, 2.0 * a, spec.tolerance * 1e-2, breaks);
            edges.push_back(2.0 * a);
            mass += panel;
            if (std::abs(panel) <= 0.1 * kTailMass) break;
        }
        impl->panel_edges = std::move(edges);
        const double top = impl->panel_edges.back();
        for (int i = 0; i <= 256; ++i) samples.push_back(1e-6 * std::pow(top / 1e-6, i / 256.0));
    } else {
        for (double x : gauss_laguerre(spec.nodes, 0.0).nodes) samples.push_back(0.5 * x);
    }
    for (int i = 0; i <= 16; ++i) samples.push_back(1e-6 * std::pow(1e4, i / 16.0));
    std::sort(samples.begin(), samples.end());

    bool near_zero = false;
    bool positive_run = false;
    bool previous_positive = false;
    for (double sigma : samples) {
        const double v = impl->h(sigma);
        if (!std::isfinite(v) || v < 0.0) {
            std::ostringstream os;
            os << "density is negative or non-finite at sigma = " << sigma;
            throw InvalidMeasureError(os.str());
        }
        const bool positive = v > 0.0;
        if (positive && sigma <= 1e-2) near_zero = true;
        if (positive && previous_positive) positive_run = true;
        previous_positive = positive;
    }
    if (!near_zero) throw InvalidMeasureError("0 is not in the support: density vanishes on (0, 1e-2]");
    if (!positive_run) throw InvalidMeasureError("density is not positive on any sampled subinterval");

    const double mass = impl->integrate([](double) { return 1.0; });
    if (std::abs(mass - 1.0) > kMassTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "density has total mass " << mass << ", expected 1";
        throw InvalidMeasureError(os.str());
    }
    return Measure(std::move(impl));
}

bool Measure::is_alpha() const noexcept { return impl_->alpha_family; }

double Measure::alpha_parameter() const {
    if (!impl_->alpha_family) throw PreconditionError("measure is not of the alpha family");
    return impl_->alpha;
}

double Measure::density_at(double sigma) const { return impl_->density(sigma); }
const QuadratureSpec& Measure::quadrature() const noexcept { return impl_->spec; }
std::string Measure::tag() const { return impl_->label; }

double Measure::integrate(const std::function<double(double)>& g) const { return impl_->integrate(g); }

double Measure::integrate(const std::function<double(double)>& g, double tolerance) const {
    if (!(tolerance > 0.0)) throw PreconditionError("quadrature tolerance must be positive");
    return impl_->integrate(g, tolerance);
}

std::shared_ptr<const std::vector<double>> Measure::weights(std::size_t truncation) const {
    std::lock_guard lock(impl_->mutex);
    if (impl_->table && impl_->table->size() >= truncation) return impl_->table;
    auto grown = std::make_shared<std::vector<double>>(impl_->table ? *impl_->table : std::vector<double>{});
    const std::size_t target = std::max(truncation, 2 * grown->size());
    grown->reserve(target);
    for (std::size_t n = grown->size() + 1; n <= target; ++n) {
        grown->push_back(n == 1 ? 1.0 : impl_->weight_at(static_cast<double>(n)));
    }
    impl_->table = grown;
    return impl_->table;
}

double Measure::weight(std::size_t n) const {
    if (n < 1) throw InvalidIndexError("weight index must be at least 1");
    return (*weights(n))[n - 1];
}

double Measure::weight_at(double t) const {
    if (!(t >= 1.0)) throw PreconditionError("weight argument must be at least 1");
    return impl_->weight_at(t);
}

double Measure::weight_by_quadrature(double t) const {
    if (!(t >= 1.0)) throw PreconditionError("weight argument must be at least 1");
    return impl_->weight_by_quadrature(t);
}

double Measure::weight_at_log(double log_t) const {
    if (!(log_t >= 0.0)) throw PreconditionError("weight argument must be at least 1");
    if (impl_->alpha_family) return std::pow(log_t + 1.0, -(impl_->alpha + 1.0));
    return impl_->weight_by_log(log_t);
}

double Measure::tilted_mean(double t) const {
    if (!(t >= 1.0)) throw PreconditionError("tilt argument must be at least 1");
    if (impl_->alpha_family) return (impl_->alpha + 1.0) / (2.0 * (1.0 + std::log(t)));
    const double first = impl_->tilted_integrate([](double sigma) { return sigma; }, std::log(t));
    return first / impl_->weight_by_quadrature(t);
}

}  // namespace dirspaces

#include "dirspaces/norms.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "dirspaces/error.hpp"
#include "dirspaces/parallel.hpp"
#include "dirspaces/primes.hpp"
#include "dirspaces/zeta.hpp"

namespace dirspaces {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::size_t kMaxExactPowerTruncation = std::size_t{1} << 22;
constexpr std::size_t kMaxMonotoneStart = 10'000'000;

void require_exact(const DirichletSeries& f, const char* op) {
    if (!f.exact()) throw PreconditionError(std::string(op) + ": series is not an exact polynomial");
}

void require_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ValidationError("norm exponent p must be finite and >= 1");
}

bool is_even_integer(double p) { return p >= 2.0 && std::floor(p / 2.0) * 2.0 == p; }

std::size_t checked_power(std::size_t base, unsigned q) {
    std::size_t out = 1;
    for (unsigned i = 0; i < q; ++i) {
        if (base != 0 && out > kMaxExactPowerTruncation / base) return kMaxExactPowerTruncation + 1;
        out *= base;
    }
    return out;
}

// ||f^q||_{H^2}^{1/q}, computed on a truncation that holds f^q entirely.
double exact_even_power(const DirichletSeries& f, unsigned q) {
    const std::size_t deg = std::max<std::size_t>(f.degree(), 1);
    const std::size_t top = checked_power(deg, q);
    const DirichletSeries base = f.truncated(std::max<std::size_t>(top, 1));
    DirichletSeries power = DirichletSeries::constant(1.0, base.truncation());
    for (unsigned i = 0; i < q; ++i) power = multiply(power, base, base.truncation());
    double sum = 0.0;
    for (const Complex& a : power.coefficients()) sum += std::norm(a);
    return std::pow(sum, 0.5 / q);
}

struct LiftedTerm {
    Complex coefficient;
    std::vector<std::pair<std::size_t, unsigned>> factors;  // (prime position, exponent)
};

std::uint64_t next_unit_bits(std::mt19937_64& rng) { return rng() >> 11; }

HpNorm qmc_norm(const DirichletSeries& f, double p, const QmcOptions& qmc) {
    if (qmc.points < 1 || qmc.replicates < 2) {
        throw ValidationError("quasi-Monte Carlo needs at least 1 point and 2 replicates");
    }
    const auto primes = PrimeTable::shared(std::max<std::size_t>(f.truncation(), 2));
    std::vector<LiftedTerm> lifted;
    std::size_t dimension = 0;
    for (const auto& [n, a] : f.terms()) {
        LiftedTerm term{a, {}};
        for (const auto& [prime, e] : primes->factor(n)) {
            const std::size_t k = primes->prime_index(prime);
            dimension = std::max(dimension, k + 1);
            term.factors.emplace_back(k, e);
        }
        lifted.push_back(std::move(term));
    }
    std::vector<double> generator(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
        const double r = std::sqrt(static_cast<double>(primes->primes()[k]));
        generator[k] = r - std::floor(r);
    }

    std::vector<double> replicate_means(qmc.replicates, 0.0);
    parallel_for(qmc.replicates, [&](std::size_t r) {
        std::seed_seq seq{static_cast<std::uint32_t>(qmc.seed & 0xffffffffu),
                          static_cast<std::uint32_t>(qmc.seed >> 32), static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::vector<double> shift(dimension);
        for (double& u : shift) u = static_cast<double>(next_unit_bits(rng)) * 0x1.0p-53;
        std::vector<double> x(dimension);
        double total = 0.0;
        for (std::size_t i = 0; i < qmc.points; ++i) {
            for (std::size_t k = 0; k < dimension; ++k) {
                const double v = shift[k] + static_cast<double>(i) * generator[k];
                x[k] = v - std::floor(v);
            }
            Complex value{};
            for (const LiftedTerm& term : lifted) {
                double phase = 0.0;
                for (const auto& [k, e] : term.factors) phase += e * x[k];
                value += term.coefficient * std::polar(1.0, kTwoPi * phase);
            }
            total += std::pow(std::abs(value), p);
        }
        replicate_means[r] = total / static_cast<double>(qmc.points);
    });

    const double r = static_cast<double>(qmc.replicates);
    const double mean = std::accumulate(replicate_means.begin(), replicate_means.end(), 0.0) / r;
    double var = 0.0;
    for (double m : replicate_means) var += (m - mean) * (m - mean);
    var /= (r - 1.0);
    const double se_mean = std::sqrt(var / r);

    HpNorm out;
    out.method = HpMethod::QuasiMonteCarlo;
    out.value = std::pow(mean, 1.0 / p);
    out.standard_error = mean > 0.0 ? out.value * se_mean / (p * mean) : 0.0;
    if (se_mean > qmc.max_relative_error * mean) {
        std::ostringstream os;
        os.precision(10);
        os << "quasi-Monte Carlo estimate of the H^" << p << " norm did not converge: replicate means";
        for (double m : replicate_means) os << ' ' << m;
        throw NumericError(os.str());
    }
    return out;
}

// Integral of t^{-x} / w_h(t) over [start, inf).
double tail_integral(const Measure& mu, double x, double start) {
    if (mu.is_alpha()) {
        const double a = mu.alpha_parameter();
        const double v0 = (x - 1.0) * (1.0 + std::log(start));
        return std::exp((x - 1.0) - (a + 2.0) * std::log(x - 1.0)) * boost::math::tgamma(a + 2.0, v0);
    }
    const double log_start = std::log(start);
    boost::math::quadrature::exp_sinh<double> integrator;
    auto g = [&](double u) {
        const double t_log = log_start + u;
        const double decay = std::exp(-(x - 1.0) * t_log);
        return decay == 0.0 ? 0.0 : decay / mu.weight_at_log(t_log);
    };
    return integrator.integrate(g, 1e-10);
}

}  // namespace

std::string to_string(EstimateKind kind) {
    switch (kind) {
        case EstimateKind::Exact: return "exact";
        case EstimateKind::UpperBound: return "upper-bound";
        case EstimateKind::RatioUpToConstant: return "ratio-up-to-constant";
    }
    return "unknown";
}

std::string to_string(HpMethod method) {
    switch (method) {
        case HpMethod::Auto: return "auto";
        case HpMethod::ExactEvenPower: return "exact";
        case HpMethod::QuasiMonteCarlo: return "qmc";
    }
    return "unknown";
}

double norm_h2(const DirichletSeries& f) {
    require_exact(f, "norm_h2");
    double sum = 0.0;
    for (const Complex& a : f.coefficients()) sum += std::norm(a);
    return std::sqrt(sum);
}

HpNorm norm_hp(const DirichletSeries& f, double p, HpMethod method, const QmcOptions& qmc) {
    require_p(p);
    require_exact(f, "norm_hp");
    if (p == 2.0 && method != HpMethod::QuasiMonteCarlo) return {norm_h2(f), 0.0, HpMethod::ExactEvenPower};
    if (method == HpMethod::ExactEvenPower && !is_even_integer(p)) {
        throw ValidationError("exact H^p norms need an even integer p");
    }
    if (method != HpMethod::QuasiMonteCarlo && is_even_integer(p)) {
        const auto q = static_cast<unsigned>(p / 2.0);
        const std::size_t top = checked_power(std::max<std::size_t>(f.degree(), 1), q);
        if (top <= kMaxExactPowerTruncation) return {exact_even_power(f, q), 0.0, HpMethod::ExactEvenPower};
        if (method == HpMethod::ExactEvenPower) {
            throw ValidationError("exact H^p norm needs a convolution power beyond the supported size");
        }
    }
    return qmc_norm(f, p, qmc);
}

double norm_a2(const DirichletSeries& f, const Measure& mu) {
    require_exact(f, "norm_a2");
    return std::sqrt(inner_a2(f, f, mu).real());
}

Complex inner_a2(const DirichletSeries& f, const DirichletSeries& g, const Measure& mu) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    const auto w = mu.weights(n);
    Complex sum{};
    for (std::size_t k = 1; k <= n; ++k) {
        if (f[k] == Complex{} || g[k] == Complex{}) continue;
        sum += f[k] * std::conj(g[k]) * (*w)[k - 1];
    }
    return sum;
}

HpNorm norm_ap(const DirichletSeries& f, double p, const Measure& mu, HpMethod method,
               const QmcOptions& qmc) {
    require_p(p);
    require_exact(f, "norm_ap");
    HpMethod used = HpMethod::ExactEvenPower;
    // d(v^p) = p v^{p-1} dv. Replicate errors share the seed across sigma and
    // are therefore integrated, not added in quadrature.
    double se_integral = 0.0;
    std::vector<std::pair<double, double>> seen;
    // A QMC integrand is only known to its standard error, so node doubling
    // is judged against that rather than the measure's own tolerance.
    double tolerance = mu.quadrature().tolerance;
    const HpNorm probe = norm_hp(f, p, method, qmc);
    if (probe.method == HpMethod::QuasiMonteCarlo && probe.value > 0.0) {
        tolerance = std::max(tolerance, 0.1 * probe.standard_error / probe.value);
    }
    const double integral = mu.integrate([&](double sigma) {
        const HpNorm local = norm_hp(translate(f, sigma), p, method, qmc);
        used = local.method;
        seen.emplace_back(sigma, p * std::pow(local.value, p - 1.0) * local.standard_error);
        return std::pow(local.value, p);
    }, tolerance);
    if (used == HpMethod::QuasiMonteCarlo) {
        se_integral = mu.integrate([&](double sigma) {
            for (const auto& [at, se] : seen) {
                if (at == sigma) return se;
            }
            const HpNorm local = norm_hp(translate(f, sigma), p, method, qmc);
            return p * std::pow(local.value, p - 1.0) * local.standard_error;
        }, tolerance);
    }
    HpNorm out;
    out.method = used;
    out.value = std::pow(integral, 1.0 / p);
    out.standard_error = integral > 0.0 ? out.value * se_integral / (p * integral) : 0.0;
    return out;
}

double weighted_tail_bound(const Measure& mu, double x, std::size_t truncation) {
    if (!(x > 1.0)) {
        std::ostringstream os;
        os << "sum of n^{-" << x << "} / w_h(n) diverges; it converges for exponents above 1";
        throw DivergenceError(os.str(), 1.0);
    }
    // Advance the start until the summand is nonincreasing from there on.
    std::size_t start = std::max<std::size_t>(truncation, 1);
    double direct = 0.0;
    while (x < 2.0 * mu.tilted_mean(static_cast<double>(start))) {
        const std::size_t next = 2 * start;
        if (next > kMaxMonotoneStart) throw NumericError("tail bound: summand not monotone in reach");
        for (std::size_t n = start + 1; n <= next; ++n) {
            direct += std::pow(static_cast<double>(n), -x) / mu.weight_at(static_cast<double>(n));
        }
        start = next;
    }
    const double tail = direct + tail_integral(mu, x, static_cast<double>(start));
    if (!std::isfinite(tail)) {
        throw DivergenceError("tail of sum n^{-x} / w_h(n) is not finite", 1.0);
    }
    return tail;
}

KernelValue kernel(const Measure& mu, Complex s, Complex w, std::size_t truncation) {
    const double x = s.real() + w.real();
    if (!(x > 1.0)) {
        throw DivergenceError("kernel series diverges: Re s + Re w must exceed 1", 1.0);
    }
    if (!(s.real() > 0.5) || !(w.real() > 0.5)) {
        throw PreconditionError("kernel: both points must lie in Re > 1/2");
    }
    const auto weights = mu.weights(truncation);
    Complex sum{};
    const Complex e = std::conj(s) + w;
    for (std::size_t n = 1; n <= truncation; ++n) {
        sum += std::exp(-e * std::log(static_cast<double>(n))) / (*weights)[n - 1];
    }
    return {sum, weighted_tail_bound(mu, x, truncation)};
}

DirichletSeries kernel_series(const Measure& mu, Complex s, std::size_t truncation) {
    if (!(s.real() > 0.5)) throw PreconditionError("kernel: point must lie in Re s > 1/2");
    const auto weights = mu.weights(truncation);
    std::vector<Complex> c(truncation);
    const Complex e = std::conj(s);
    for (std::size_t n = 1; n <= truncation; ++n) {
        c[n - 1] = std::exp(-e * std::log(static_cast<double>(n))) / (*weights)[n - 1];
    }
    return {std::move(c), false};
}

FunctionalNormEstimate point_eval_norm_hp(Complex s, double p) {
    require_p(p);
    if (!(s.real() > 0.5)) throw PoleError("point evaluation is unbounded on H^p for Re s <= 1/2");
    FunctionalNormEstimate out;
    out.value = std::pow(zeta(2.0 * s.real()), 1.0 / p);
    out.kind = EstimateKind::Exact;
    std::ostringstream os;
    os << "H^" << p;
    out.space = os.str();
    out.point = s;
    return out;
}

FunctionalNormEstimate point_eval_bound_a1(const Measure& mu, Complex s, std::size_t truncation) {
    const double x = s.real();
    const double tail = weighted_tail_bound(mu, x, truncation);
    const auto weights = mu.weights(truncation);
    double sum = 0.0;
    for (std::size_t n = truncation; n >= 1; --n) {
        sum += std::pow(static_cast<double>(n), -x) / (*weights)[n - 1];
    }
    FunctionalNormEstimate out;
    out.value = sum + tail;
    out.kind = EstimateKind::UpperBound;
    out.space = "A^1_" + mu.tag();
    out.point = s;
    out.tail = tail;
    out.lower_bound = 1.0;
    return out;
}

FunctionalNormEstimate point_eval_ratio_alpha(double alpha, double p, Complex s) {
    if (!(alpha > -1.0)) throw InvalidMeasureError("alpha must exceed -1");
    require_p(p);
    const double x = s.real();
    if (!(x > 0.5)) throw PoleError("point evaluation bound has a pole at Re s = 1/2");
    FunctionalNormEstimate out;
    out.value = std::pow(x / (2.0 * x - 1.0), (2.0 + alpha) / p);
    out.kind = EstimateKind::RatioUpToConstant;
    std::ostringstream os;
    os << "A^" << p << "_alpha(" << alpha << ")";
    out.space = os.str();
    out.point = s;
    out.lower_bound = 0.0;
    return out;
}

}  // namespace dirspaces

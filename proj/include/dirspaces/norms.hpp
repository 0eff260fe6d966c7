#pragma once

// Norms of the Hardy spaces H^p and the weighted Bergman spaces A^p_mu of
// Dirichlet series, the reproducing kernel of A^2_mu, and bounds for point
// evaluation functionals.

#include <cstddef>
#include <cstdint>
#include <string>

#include "dirspaces/measure.hpp"
#include "dirspaces/series.hpp"

namespace dirspaces {

enum class EstimateKind { Exact, UpperBound, RatioUpToConstant };

std::string to_string(EstimateKind kind);

struct FunctionalNormEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::Exact;
    std::string space;
    Complex point{};
    double tail = 0.0;         ///< part of value contributed by a tail estimate
    double lower_bound = 1.0;  ///< the norm is never below 1 (test on f = 1)
};

enum class HpMethod {
    Auto,             ///< exact for even integer p, quasi-Monte Carlo otherwise
    ExactEvenPower,   ///< ||f^q||_{H^2}^{1/q} for p = 2q
    QuasiMonteCarlo,  ///< randomized Kronecker sequence on the polytorus
};

std::string to_string(HpMethod method);

struct QmcOptions {
    std::size_t points = std::size_t{1} << 14;
    std::size_t replicates = 8;
    std::uint64_t seed = 20130101;
    /// Replicate standard error allowed, relative to the estimate.
    double max_relative_error = 0.05;
};

struct HpNorm {
    double value = 0.0;
    double standard_error = 0.0;  ///< zero for exact methods
    HpMethod method = HpMethod::ExactEvenPower;
};

/// (sum |a_n|^2)^{1/2}. Requires an exact polynomial.
double norm_h2(const DirichletSeries& f);

/// ||f||_{H^p}, p >= 1, of an exact polynomial.
HpNorm norm_hp(const DirichletSeries& f, double p, HpMethod method = HpMethod::Auto,
               const QmcOptions& qmc = {});

/// (sum |a_n|^2 w_h(n))^{1/2}.
double norm_a2(const DirichletSeries& f, const Measure& mu);

/// <f, g>_{A^2_mu} = sum a_n conj(b_n) w_h(n) over the common truncation.
Complex inner_a2(const DirichletSeries& f, const DirichletSeries& g, const Measure& mu);

/// (int ||f_sigma||_{H^p}^p d mu(sigma))^{1/p}, integrating the H^p norms of
/// the translates against mu.
HpNorm norm_ap(const DirichletSeries& f, double p, const Measure& mu,
               HpMethod method = HpMethod::Auto, const QmcOptions& qmc = {});

/// Upper bound for sum_{n > N} n^{-x} / w_h(n), x > 1, by direct summation
/// up to the point where the summand is provably nonincreasing and integral
/// comparison beyond it.
double weighted_tail_bound(const Measure& mu, double x, std::size_t truncation);

struct KernelValue {
    Complex value;  ///< partial sum over n <= N
    double tail;    ///< bound on the modulus of the omitted terms
};

/// K_mu(s, w) = sum n^{-conj(s) - w} / w_h(n), truncated at N with a tail bound.
KernelValue kernel(const Measure& mu, Complex s, Complex w, std::size_t truncation);

/// K_mu(s, .) as a truncated Dirichlet series: coefficient n^{-conj(s)} / w_h(n).
DirichletSeries kernel_series(const Measure& mu, Complex s, std::size_t truncation);

/// ||delta_s|| on H^p: zeta(2 Re s)^{1/p}.
FunctionalNormEstimate point_eval_norm_hp(Complex s, double p);

/// Upper bound sum n^{-Re s} / w_h(n) for ||delta_s|| on A^1_mu.
FunctionalNormEstimate point_eval_bound_a1(const Measure& mu, Complex s, std::size_t truncation);

/// (Re s / (2 Re s - 1))^{(2 + alpha)/p}: the growth of ||delta_s|| on
/// A^p_alpha up to an unspecified constant.
FunctionalNormEstimate point_eval_ratio_alpha(double alpha, double p, Complex s);

}  // namespace dirspaces

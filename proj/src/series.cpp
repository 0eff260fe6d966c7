#include "dirspaces/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirspaces/error.hpp"

namespace dirspaces {

namespace {

void require_truncation(std::size_t truncation) {
    if (truncation == 0) throw ValidationError("truncation must be at least 1");
}

}  // namespace

DirichletSeries::DirichletSeries(std::size_t truncation, bool exact)
    : coeffs_(truncation, Complex{}), exact_(exact) {
    require_truncation(truncation);
}

DirichletSeries::DirichletSeries(std::vector<Complex> coeffs, bool exact)
    : coeffs_(std::move(coeffs)), exact_(exact) {
    require_truncation(coeffs_.size());
}

DirichletSeries DirichletSeries::from_terms(const std::map<std::int64_t, Complex>& terms,
                                            std::size_t truncation) {
    DirichletSeries out(truncation, true);
    for (const auto& [n, c] : terms) {
        if (n < 1 || static_cast<std::uint64_t>(n) > truncation) {
            throw InvalidIndexError("coefficient index " + std::to_string(n) +
                                    " outside 1.." + std::to_string(truncation));
        }
        out.coeffs_[static_cast<std::size_t>(n - 1)] = c;
    }
    return out;
}

DirichletSeries DirichletSeries::constant(Complex c, std::size_t truncation) {
    DirichletSeries out(truncation, true);
    out.coeffs_[0] = c;
    return out;
}

DirichletSeries DirichletSeries::monomial(std::size_t n, Complex c, std::size_t truncation) {
    if (n < 1 || n > truncation) {
        throw InvalidIndexError("monomial index " + std::to_string(n) + " outside 1.." +
                                std::to_string(truncation));
    }
    DirichletSeries out(truncation, true);
    out.coeffs_[n - 1] = c;
    return out;
}

std::size_t DirichletSeries::degree() const noexcept {
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
        if (coeffs_[k - 1] != Complex{}) return k;
    }
    return 0;
}

DirichletSeries DirichletSeries::truncated(std::size_t truncation) const {
    require_truncation(truncation);
    std::vector<Complex> c(truncation, Complex{});
    std::copy_n(coeffs_.begin(), std::min(truncation, coeffs_.size()), c.begin());
    // Extending a non-exact series would claim zeros we do not know.
    if (truncation > coeffs_.size() && !exact_) {
        throw PreconditionError("cannot extend a truncated series beyond its known coefficients");
    }
    return {std::move(c), exact_ && degree() <= truncation};
}

std::vector<std::pair<std::size_t, Complex>> DirichletSeries::terms() const {
    std::vector<std::pair<std::size_t, Complex>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != Complex{}) out.emplace_back(k + 1, coeffs_[k]);
    }
    return out;
}

DirichletSeries linear(const DirichletSeries& f, const DirichletSeries& g, Complex a, Complex b) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    std::vector<Complex> c(n);
    for (std::size_t k = 1; k <= n; ++k) c[k - 1] = a * f[k] + b * g[k];
    const bool exact = f.exact() && g.exact() && f.degree() <= n && g.degree() <= n;
    return {std::move(c), exact};
}

DirichletSeries multiply(const DirichletSeries& f, const DirichletSeries& g, std::size_t truncation) {
    if (truncation > std::min(f.truncation(), g.truncation())) {
        throw PreconditionError("multiply: requested truncation exceeds operand truncation");
    }
    std::vector<Complex> c(truncation, Complex{});
    const auto f_terms = f.terms();
    const auto g_terms = g.terms();
    for (const auto& [d, fd] : f_terms) {
        if (d > truncation) break;
        for (const auto& [e, ge] : g_terms) {
            const std::size_t n = d * e;
            if (n > truncation) break;
            c[n - 1] += fd * ge;
        }
    }
    const std::size_t df = f.degree();
    const std::size_t dg = g.degree();
    const bool exact = f.exact() && g.exact() && (df == 0 || dg == 0 || df * dg <= truncation);
    return {std::move(c), exact};
}

DirichletSeries exp_series(const DirichletSeries& f, std::size_t truncation) {
    if (f[1] != Complex{}) {
        throw PreconditionError("exp_series: series has a nonzero constant term");
    }
    if (truncation > f.truncation()) {
        throw PreconditionError("exp_series: requested truncation exceeds operand truncation");
    }
    // Logarithmic derivative weights f_d log d, pushed forward from each
    // finished g_m to acc[d m] so that acc[n] is complete when n is reached.
    std::vector<std::pair<std::size_t, Complex>> weighted;
    for (const auto& [d, fd] : f.terms()) {
        if (d > truncation) break;
        weighted.emplace_back(d, fd * std::log(static_cast<double>(d)));
    }
    std::vector<Complex> g(truncation, Complex{});
    std::vector<Complex> acc(truncation + 1, Complex{});
    g[0] = 1.0;
    for (std::size_t m = 1; m <= truncation; ++m) {
        if (m > 1) g[m - 1] = acc[m] / std::log(static_cast<double>(m));
        const Complex gm = g[m - 1];
        if (gm == Complex{}) continue;
        for (const auto& [d, w] : weighted) {
            const std::size_t n = d * m;
            if (n > truncation) break;
            acc[n] += w * gm;
        }
    }
    return {std::move(g), f.exact() && f.is_zero()};
}

DirichletSeries translate(const DirichletSeries& f, double sigma) {
    if (!(sigma >= 0.0)) throw PreconditionError("translate: sigma must be nonnegative");
    std::vector<Complex> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t k = 2; k <= c.size(); ++k) {
        if (c[k - 1] != Complex{}) c[k - 1] *= std::pow(static_cast<double>(k), -sigma);
    }
    return {std::move(c), f.exact()};
}

Complex evaluate(const DirichletSeries& f, Complex s) {
    Complex sum{};
    for (const auto& [n, a] : f.terms()) {
        sum += a * std::exp(-s * std::log(static_cast<double>(n)));
    }
    return sum;
}

}  // namespace dirspaces

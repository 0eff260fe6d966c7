#pragma once

// Truncated Dirichlet series  f(s) = sum_{n <= N} a_n n^{-s}  and their
// exact coefficient arithmetic.
//
// A series stores a_1..a_N. Coefficients beyond N are unknown unless the
// series is flagged exact, in which case it is a genuine Dirichlet polynomial
// and every a_n with n > N is zero. Operations never invent tail terms: a
// result is flagged exact only when its true support provably fits below its
// truncation.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace dirspaces {

using Complex = std::complex<double>;

class DirichletSeries {
public:
    /// The zero series with truncation N.
    DirichletSeries(std::size_t truncation, bool exact);

    /// coeffs[k] is a_{k+1}; the truncation is coeffs.size().
    DirichletSeries(std::vector<Complex> coeffs, bool exact);

    /// Exact polynomial with the listed coefficients. Throws
    /// InvalidIndexError on an index < 1 or > N.
    static DirichletSeries from_terms(const std::map<std::int64_t, Complex>& terms,
                                      std::size_t truncation);
    static DirichletSeries constant(Complex c, std::size_t truncation);
    /// c * n^{-s}
    static DirichletSeries monomial(std::size_t n, Complex c, std::size_t truncation);

    std::size_t truncation() const noexcept { return coeffs_.size(); }
    bool exact() const noexcept { return exact_; }

    /// a_n for 1 <= n <= N.
    Complex operator[](std::size_t n) const { return coeffs_.at(n - 1); }
    std::span<const Complex> coefficients() const noexcept { return coeffs_; }

    /// Largest n with a_n != 0; 0 for the zero series.
    std::size_t degree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }

    /// The first N coefficients. Stays exact only if nothing nonzero is cut.
    DirichletSeries truncated(std::size_t truncation) const;

    /// The same coefficients, declared to be a polynomial. Callers use this to
    /// measure a truncated series as if its tail were zero.
    DirichletSeries as_polynomial() const { return {coeffs_, true}; }

    /// Nonzero (n, a_n) pairs in increasing n.
    std::vector<std::pair<std::size_t, Complex>> terms() const;

    friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

private:
    std::vector<Complex> coeffs_;
    bool exact_;
};

/// a*f + b*g up to the smaller truncation.
DirichletSeries linear(const DirichletSeries& f, const DirichletSeries& g, Complex a, Complex b);

/// Dirichlet convolution, sum_{d | n} f_d g_{n/d} for n <= N.
/// Requires N <= min(f.truncation(), g.truncation()).
DirichletSeries multiply(const DirichletSeries& f, const DirichletSeries& g, std::size_t truncation);

/// exp(f) = sum_m f^m / m! up to N, for f without constant term.
///
/// Uses the logarithmic-derivative recurrence
///   g_1 = 1,   g_n log n = sum_{d | n, d > 1} f_d log(d) g_{n/d},
/// which is exact up to N because the support of f^m starts at 2^m.
DirichletSeries exp_series(const DirichletSeries& f, std::size_t truncation);

/// Vertical-strip shift f_sigma(s) = f(sigma + s): a_n -> a_n n^{-sigma}.
DirichletSeries translate(const DirichletSeries& f, double sigma);

/// Partial sum over the stored coefficients.
Complex evaluate(const DirichletSeries& f, Complex s);

}  // namespace dirspaces

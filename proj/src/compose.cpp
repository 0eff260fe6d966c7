#include "dirspaces/compose.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "dirspaces/error.hpp"
#include "dirspaces/parallel.hpp"

namespace dirspaces {

namespace {

// n^{c0}, or max() on overflow.
std::size_t dilation(std::size_t n, int c0) {
    std::size_t out = 1;
    for (int i = 0; i < c0; ++i) {
        if (out > std::numeric_limits<std::size_t>::max() / n) return std::numeric_limits<std::size_t>::max();
        out *= n;
    }
    return out;
}

void require_admissible(const Symbol& phi, AdmissibilityCheck check) {
    if (check == AdmissibilityCheck::Override) return;
    const Certificate cert = certify_admissible(phi);
    if (cert.verdict != Verdict::CertifiedYes) {
        throw PreconditionError("symbol " + phi.tag() + " is not certified admissible (" +
                                to_string(cert.verdict) + ", " + cert.method + ")");
    }
}

}  // namespace

DirichletSeries compose_basis(const Symbol& phi, std::size_t n, std::size_t truncation) {
    if (n < 1) throw InvalidIndexError("compose_basis: n must be at least 1");
    if (n == 1) return DirichletSeries::constant(1.0, truncation);
    const std::size_t dil = dilation(n, phi.c0());
    if (dil > truncation) {
        throw TruncationEmptyError("compose_basis: n^c0 = " +
                                   (dil == std::numeric_limits<std::size_t>::max() ? std::string("overflow")
                                                                                    : std::to_string(dil)) +
                                   " exceeds truncation " + std::to_string(truncation));
    }
    const std::size_t inner = truncation / dil;
    const double log_n = std::log(static_cast<double>(n));

    // psi = phi - c_1, scaled by -log n, on the inner truncation.
    DirichletSeries psi = phi.phi().truncated(std::max(inner, phi.phi().truncation()));
    std::vector<Complex> scaled(inner, Complex{});
    for (std::size_t k = 2; k <= inner; ++k) scaled[k - 1] = -log_n * psi[k];
    const DirichletSeries image = exp_series(DirichletSeries(std::move(scaled), true), inner);

    const Complex scale = std::exp(-phi.constant_term() * log_n);
    std::vector<Complex> out(truncation, Complex{});
    for (std::size_t j = 1; j <= inner; ++j) {
        if (image[j] != Complex{}) out[j * dil - 1] = scale * image[j];
    }
    return {std::move(out), image.exact()};
}

DirichletSeries apply(const Symbol& phi, const DirichletSeries& f, std::size_t truncation) {
    if (!f.exact()) throw PreconditionError("apply: series is not an exact polynomial");
    std::vector<Complex> out(truncation, Complex{});
    bool exact = true;
    for (const auto& [n, a] : f.terms()) {
        const DirichletSeries image = compose_basis(phi, n, truncation);
        exact = exact && image.exact();
        for (std::size_t m = 1; m <= truncation; ++m) out[m - 1] += a * image[m];
    }
    return {std::move(out), exact};
}

std::size_t column_count(const Symbol& phi, std::size_t truncation) {
    if (phi.c0() == 0) return truncation;
    std::size_t n = 1;
    while (dilation(n + 1, phi.c0()) <= truncation) ++n;
    return n;
}

OperatorMatrix operator_matrix(const Symbol& phi, const Measure& mu, std::size_t truncation,
                               AdmissibilityCheck check) {
    if (truncation < 2) throw ValidationError("operator_matrix needs N >= 2");
    require_admissible(phi, check);
    const std::size_t cols = column_count(phi, truncation);
    const auto w = mu.weights(truncation);
    OperatorMatrix out;
    out.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(truncation), static_cast<Eigen::Index>(cols));
    out.column_exact.assign(cols, 0);
    out.truncation = truncation;
    out.measure_tag = mu.tag();
    out.symbol_tag = phi.tag();
    parallel_for(cols, [&](std::size_t c) {
        const std::size_t n = c + 1;
        const DirichletSeries image = compose_basis(phi, n, truncation);
        const double wn = (*w)[n - 1];
        out.column_exact[c] = image.exact() ? 1 : 0;
        for (const auto& [m, g] : image.terms()) {
            out.entries(static_cast<Eigen::Index>(m - 1), static_cast<Eigen::Index>(c)) =
                g * std::sqrt((*w)[m - 1] / wn);
        }
    });
    return out;
}

Eigen::MatrixXcd gram(const OperatorMatrix& m) {
    const Eigen::Index cols = m.entries.cols();
    Eigen::MatrixXcd g(cols, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            const Complex v = m.entries.col(i).dot(m.entries.col(j));  // conj(col i) . col j
            g(i, j) = v;
            g(j, i) = std::conj(v);
        }
        g(j, j) = Complex{g(j, j).real(), 0.0};
    }
    return g;
}

double hermitian_spectral_norm(const Eigen::MatrixXcd& h) {
    if (h.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
    return std::max(std::abs(solver.eigenvalues().minCoeff()), std::abs(solver.eigenvalues().maxCoeff()));
}

double isometry_defect_at(const Symbol& phi, const Measure& mu, std::size_t truncation,
                          AdmissibilityCheck check) {
    const Eigen::MatrixXcd g = gram(operator_matrix(phi, mu, truncation, check));
    return hermitian_spectral_norm(g - Eigen::MatrixXcd::Identity(g.rows(), g.cols()));
}

DefectReport isometry_defect(const Symbol& phi, const Measure& mu, std::size_t truncation,
                             AdmissibilityCheck check) {
    if (truncation < 4) throw ValidationError("isometry_defect needs N >= 4 to compare with N/2");
    require_admissible(phi, check);
    const OperatorMatrix m = operator_matrix(phi, mu, truncation, AdmissibilityCheck::Override);
    const Eigen::MatrixXcd g = gram(m);

    DefectReport out;
    out.defect = hermitian_spectral_norm(g - Eigen::MatrixXcd::Identity(g.rows(), g.cols()));
    out.defect_half = isometry_defect_at(phi, mu, truncation / 2, AdmissibilityCheck::Override);
    out.delta = std::abs(out.defect - out.defect_half);

    const auto quarter = static_cast<Eigen::Index>(truncation / 4);
    const auto half = static_cast<Eigen::Index>(truncation / 2);
    const auto full = static_cast<Eigen::Index>(truncation);
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
        if (m.column_exact[static_cast<std::size_t>(c)]) continue;
        const double inner = m.entries.col(c).segment(quarter, half - quarter).squaredNorm();
        const double outer = m.entries.col(c).segment(half, full - half).squaredNorm();
        double tail = 0.0;
        if (outer > 0.0) tail = (inner > outer) ? outer * (outer / inner) / (1.0 - outer / inner) : outer;
        out.tail_heuristic = std::max(out.tail_heuristic, tail);
    }
    return out;
}

double contraction_lower_bound(const Symbol& phi, const Measure& mu, std::size_t truncation,
                               AdmissibilityCheck check) {
    const Eigen::MatrixXcd g = gram(operator_matrix(phi, mu, truncation, check));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace dirspaces

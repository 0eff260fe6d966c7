#pragma once

// The composition operator C_Phi f = f o Phi on truncated Dirichlet series,
// its finite section in the orthonormal basis e_n = n^{-s} / sqrt(w_h(n)) of
// A^2_mu, and Gram-matrix diagnostics for isometry and contraction.

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "dirspaces/measure.hpp"
#include "dirspaces/series.hpp"
#include "dirspaces/symbol.hpp"

namespace dirspaces {

/// Exact coefficients up to N of n^{-Phi(s)}
///   = n^{-c_1} exp(-log(n) psi(s)) dilated by n^{c0},  psi = phi - c_1.
/// Throws TruncationEmptyError when n^{c0} > N.
DirichletSeries compose_basis(const Symbol& phi, std::size_t n, std::size_t truncation);

/// C_Phi f up to N, summing a_n compose_basis(Phi, n, N).
DirichletSeries apply(const Symbol& phi, const DirichletSeries& f, std::size_t truncation);

/// Largest n with n^{c0} <= N (N itself for c0 = 0).
std::size_t column_count(const Symbol& phi, std::size_t truncation);

struct OperatorMatrix {
    /// N rows by N' columns; entry (m-1, n-1) is <C_Phi e_n, e_m>.
    Eigen::MatrixXcd entries;
    /// Nonzero where column n holds all of C_Phi n^{-s}.
    std::vector<unsigned char> column_exact;
    std::size_t truncation = 0;
    std::string measure_tag;
    std::string symbol_tag;
};

enum class AdmissibilityCheck { Require, Override };

/// Throws PreconditionError for a symbol that is not CertifiedYes unless the
/// check is overridden.
OperatorMatrix operator_matrix(const Symbol& phi, const Measure& mu, std::size_t truncation,
                               AdmissibilityCheck check = AdmissibilityCheck::Require);

/// M^* M, Hermitian by construction.
Eigen::MatrixXcd gram(const OperatorMatrix& m);

struct DefectReport {
    double defect = 0.0;       ///< ||G - I||_2 at truncation N
    double defect_half = 0.0;  ///< same at N / 2
    double delta = 0.0;        ///< |defect - defect_half|
    /// Largest per-column coefficient mass beyond N, extrapolated from the
    /// decay between the blocks (N/4, N/2] and (N/2, N]. Exact columns add 0.
    double tail_heuristic = 0.0;
};

double isometry_defect_at(const Symbol& phi, const Measure& mu, std::size_t truncation,
                          AdmissibilityCheck check = AdmissibilityCheck::Require);

DefectReport isometry_defect(const Symbol& phi, const Measure& mu, std::size_t truncation,
                             AdmissibilityCheck check = AdmissibilityCheck::Require);

/// Largest singular value of the finite section, a lower bound for ||C_Phi||.
double contraction_lower_bound(const Symbol& phi, const Measure& mu, std::size_t truncation,
                               AdmissibilityCheck check = AdmissibilityCheck::Require);

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_spectral_norm(const Eigen::MatrixXcd& h);

}  // namespace dirspaces

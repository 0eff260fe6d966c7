#pragma once

// Symbols Phi(s) = c0 s + phi(s) with phi a Dirichlet polynomial, and
// three-valued certificates for the half-plane mapping conditions that make
// C_Phi bounded.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirspaces/series.hpp"

namespace dirspaces {

class Symbol {
public:
    /// Throws ValidationError for c0 < 0 or a phi that is not exact.
    Symbol(int c0, DirichletSeries phi);

    int c0() const noexcept { return c0_; }
    const DirichletSeries& phi() const noexcept { return phi_; }
    /// Constant term c_1 of phi.
    Complex constant_term() const { return phi_[1]; }
    /// sum_{k >= 2} |c_k| k^{-eps}
    double oscillation_mass(double eps = 0.0) const;

    Complex operator()(Complex s) const { return static_cast<double>(c0_) * s + evaluate(phi_, s); }

    std::string tag() const;

private:
    int c0_;
    DirichletSeries phi_;
};

enum class Verdict { CertifiedYes, CertifiedNo, Unknown };

std::string to_string(Verdict verdict);

struct Certificate {
    Verdict verdict = Verdict::Unknown;
    std::optional<Complex> witness;  ///< present iff CertifiedNo
    /// CertifiedYes: slack of the sufficient inequality. CertifiedNo: the
    /// (negative) amount by which the witness violates the containment.
    double margin = 0.0;
    std::string method;
};

/// tau if Phi(s) = s + i tau, otherwise empty.
std::optional<double> is_vertical_translation(const Symbol& phi);

/// Certified lower bound of Re Phi on Re s > eps:
///   c0 eps + Re c_1 - sum_{k >= 2} |c_k| k^{-eps}.
double halfplane_lower_bound(const Symbol& phi, double eps);

/// Options for the refutation grid; sigma runs over 2^{-k}, k < sigma_levels,
/// together with 1 and 2, and t is aimed at the phases that make each term
/// of phi point to -1.
struct GridOptions {
    int sigma_levels = 30;
    double t_max = 200.0;
    std::size_t t_uniform = 512;
};

/// phi(C_+) in C_+ for c0 >= 1 (bounded contraction condition).
Certificate check_theorem1(const Symbol& phi, const GridOptions& grid = {});

/// Phi(C_+) in C_{1/2 + eta} for c0 = 0. CertifiedNo means the necessary
/// condition Phi(C_+) in C_{1/2} fails at the witness.
Certificate check_theorem2(const Symbol& phi, double eta, const GridOptions& grid = {});

/// check_theorem1 for c0 >= 1, check_theorem2 with the smallest eta otherwise.
Certificate certify_admissible(const Symbol& phi, const GridOptions& grid = {});

struct TranslatedSymbol {
    Symbol shifted;     ///< Phi_sigma(s) = Phi(sigma + s)
    Symbol normalized;  ///< Phi_sigma - sigma
};

TranslatedSymbol translate_symbol(const Symbol& phi, double sigma);

/// Re(Phi(sigma + s) - sigma) - (sigma (c0 - 1) + Re s). Requires a symbol
/// certified by check_theorem1.
double schwarz_margin(const Symbol& phi, double sigma, Complex s);

enum class RegionStatus { Found, VerticalTranslation, Unknown };

struct RegionResult {
    RegionStatus status = RegionStatus::Unknown;
    double eps = 0.0;
    double eta = 0.0;
};

/// First eps in the grid with eta = halfplane_lower_bound(Phi, 1/2 - eps) - 1/2 > 0,
/// so that Phi maps Re s > 1/2 - eps into Re s > 1/2 + eta.
RegionResult lemma1_region(const Symbol& phi, const std::vector<double>& eps_grid);

/// Default eps grid 0.45, 0.4, ..., 0.05, 0.01.
std::vector<double> default_eps_grid();

}  // namespace dirspaces

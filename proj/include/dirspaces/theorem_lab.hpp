#pragma once

// End-to-end diagnostics around the equivalence
//   C_Phi invertible <=> Fredholm <=> isometry <=> Phi(s) = s + i tau
// on A^p_mu. The verdict on invertibility and Fredholmness is structural
// (read off the symbol); the numerics corroborate the isometry leg.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dirspaces/compose.hpp"
#include "dirspaces/measure.hpp"
#include "dirspaces/norms.hpp"
#include "dirspaces/symbol.hpp"

namespace dirspaces {

struct Lemma2Point {
    double sigma = 0.0;
    std::optional<double> value;  ///< S(sigma); empty when the sum diverges
    double tail = 0.0;
    std::string error;
};

struct Lemma2Profile {
    std::vector<Lemma2Point> points;
    bool nonincreasing = true;  ///< over the points that converged
    bool at_least_one = true;
    /// S(sigma_max) - 1 for the largest convergent sigma.
    double limit_gap = 0.0;
};

/// S(sigma) = sum_{n <= N} n^{-sigma} / w_h(n) + tail, per sigma.
Lemma2Profile lemma2_profile(const Measure& mu, const std::vector<double>& sigmas, std::size_t truncation);

/// zeta(2 lb)^{1/p} / S(Re s) with lb the certified lower bound of Re Phi at
/// Re s; a lower bound for ||C_Phi|| on A^p_mu when c0 = 0. Throws PoleError
/// when lb <= 1/2.
double prop1_bound(const Symbol& phi, const Measure& mu, double p, Complex s, std::size_t truncation);

struct NormProfilePoint {
    double sigma = 0.0;
    double reference = 0.0;  ///< ||2^{-sigma - s}||_{H^p} = 2^{-sigma}
    double image = 0.0;      ///< ||2^{-Phi(sigma + s)}||_{H^p}, truncated at N
    double standard_error = 0.0;
};

struct NormProfile {
    std::vector<NormProfilePoint> points;
    bool inequality_holds = true;  ///< image <= reference + tolerance everywhere
    bool equality = true;          ///< image == reference within tolerance everywhere
    double tolerance = 1e-9;
    /// ||2^{-s}||_{A^p_mu} and ||2^{-Phi}||_{A^p_mu} from the same profile
    /// integrated against mu.
    double bergman_reference = 0.0;
    double bergman_image = 0.0;
};

NormProfile two_norm_profile(const Symbol& phi, const Measure& mu, double p,
                             const std::vector<double>& sigmas, std::size_t truncation,
                             const QmcOptions& qmc = {});

/// 2^{-lb}, lb the certified lower bound of Re Phi on Re s > sigma; bounds
/// sup_{Re s > 0} |2^{-Phi(sigma + s)}|.
double hinf_bound_2pow(const Symbol& phi, double sigma);

enum class ClassVerdict { IsometryInvertibleFredholm, NotIsometry, Inconclusive };

std::string to_string(ClassVerdict verdict);

struct ClassifyOptions {
    double threshold = 0.01;
    std::vector<double> profile_sigmas{0.25, 0.5, 1.0, 2.0};
    std::vector<double> eps_grid = default_eps_grid();
    double prop1_re_s = 12.0;
    QmcOptions qmc{};
};

struct ClassificationReport {
    std::string symbol_tag;
    std::string measure_tag;
    std::size_t truncation = 0;
    double p = 2.0;
    std::optional<double> vertical_translation;
    Certificate admissibility;
    std::optional<DefectReport> defect;
    std::optional<double> contraction_bound;
    std::optional<RegionResult> lemma1;
    std::optional<NormProfile> profile;
    std::optional<double> prop1;
    ClassVerdict verdict = ClassVerdict::Inconclusive;
    std::string reason;
};

ClassificationReport classify(const Symbol& phi, const Measure& mu, std::size_t truncation, double p = 2.0,
                              const ClassifyOptions& options = {});

}  // namespace dirspaces

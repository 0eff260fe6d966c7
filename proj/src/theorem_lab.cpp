#include "dirspaces/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirspaces/error.hpp"
#include "dirspaces/zeta.hpp"

namespace dirspaces {

Lemma2Profile lemma2_profile(const Measure& mu, const std::vector<double>& sigmas, std::size_t truncation) {
    Lemma2Profile out;
    for (double sigma : sigmas) {
        Lemma2Point point;
        point.sigma = sigma;
        try {
            const FunctionalNormEstimate est = point_eval_bound_a1(mu, Complex{sigma, 0.0}, truncation);
            point.value = est.value;
            point.tail = est.tail;
        } catch (const NumericError& e) {
            point.error = e.what();
        }
        out.points.push_back(std::move(point));
    }

    std::vector<const Lemma2Point*> converged;
    for (const auto& pt : out.points) {
        if (pt.value) converged.push_back(&pt);
    }
    std::sort(converged.begin(), converged.end(),
              [](const Lemma2Point* a, const Lemma2Point* b) { return a->sigma < b->sigma; });
    for (std::size_t i = 0; i < converged.size(); ++i) {
        if (*converged[i]->value < 1.0) out.at_least_one = false;
        if (i > 0 && *converged[i]->value > *converged[i - 1]->value) out.nonincreasing = false;
    }
    if (!converged.empty()) out.limit_gap = *converged.back()->value - 1.0;
    return out;
}

double prop1_bound(const Symbol& phi, const Measure& mu, double p, Complex s, std::size_t truncation) {
    if (phi.c0() != 0) throw PreconditionError("prop1_bound applies to symbols with c0 = 0");
    if (!(p >= 1.0)) throw ValidationError("norm exponent p must be >= 1");
    const double lb = halfplane_lower_bound(phi, s.real());
    if (!(lb > 0.5)) {
        std::ostringstream os;
        os << "prop1_bound: certified Re Phi(s) >= " << lb << " does not exceed 1/2";
        throw PoleError(os.str());
    }
    const double s_norm = point_eval_bound_a1(mu, s, truncation).value;
    return std::pow(zeta(2.0 * lb), 1.0 / p) / s_norm;
}

NormProfile two_norm_profile(const Symbol& phi, const Measure& mu, double p,
                             const std::vector<double>& sigmas, std::size_t truncation,
                             const QmcOptions& qmc) {
    if (phi.c0() < 1) throw PreconditionError("two_norm_profile needs c0 >= 1");
    if (check_theorem1(phi).verdict != Verdict::CertifiedYes) {
        throw PreconditionError("two_norm_profile needs a symbol certified by check_theorem1");
    }
    auto image_norm = [&](double sigma) {
        const Symbol shifted = translate_symbol(phi, sigma).shifted;
        return norm_hp(compose_basis(shifted, 2, truncation).as_polynomial(), p, HpMethod::Auto, qmc);
    };

    NormProfile out;
    for (double sigma : sigmas) {
        const HpNorm image = image_norm(sigma);
        NormProfilePoint point{sigma, std::pow(2.0, -sigma), image.value, image.standard_error};
        const double slack = out.tolerance + 3.0 * point.standard_error;
        if (point.image > point.reference + slack) out.inequality_holds = false;
        if (std::abs(point.image - point.reference) > slack) out.equality = false;
        out.points.push_back(point);
    }
    out.bergman_reference = std::pow(mu.integrate([p](double sigma) { return std::pow(2.0, -p * sigma); }), 1.0 / p);
    out.bergman_image =
        std::pow(mu.integrate([&](double sigma) { return std::pow(image_norm(sigma).value, p); }), 1.0 / p);
    return out;
}

double hinf_bound_2pow(const Symbol& phi, double sigma) {
    const double lb = halfplane_lower_bound(translate_symbol(phi, sigma).shifted, 0.0);
    return std::pow(2.0, -lb);
}

std::string to_string(ClassVerdict verdict) {
    switch (verdict) {
        case ClassVerdict::IsometryInvertibleFredholm: return "Isometry/Invertible/Fredholm";
        case ClassVerdict::NotIsometry: return "NotIsometry";
        case ClassVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

ClassificationReport classify(const Symbol& phi, const Measure& mu, std::size_t truncation, double p,
                              const ClassifyOptions& options) {
    ClassificationReport report;
    report.symbol_tag = phi.tag();
    report.measure_tag = mu.tag();
    report.truncation = truncation;
    report.p = p;
    report.vertical_translation = is_vertical_translation(phi);
    report.admissibility = certify_admissible(phi);
    report.lemma1 = lemma1_region(phi, options.eps_grid);

    const bool admissible = report.admissibility.verdict == Verdict::CertifiedYes;
    if (admissible) {
        report.defect = isometry_defect(phi, mu, truncation, AdmissibilityCheck::Override);
        report.contraction_bound = contraction_lower_bound(phi, mu, truncation, AdmissibilityCheck::Override);
        if (phi.c0() >= 1) {
            report.profile = two_norm_profile(phi, mu, p, options.profile_sigmas, truncation, options.qmc);
        }
    }
    if (phi.c0() == 0) {
        try {
            report.prop1 = prop1_bound(phi, mu, p, Complex{options.prop1_re_s, 0.0}, truncation);
        } catch (const NumericError&) {
        }
    }

    std::ostringstream why;
    if (report.vertical_translation) {
        report.verdict = ClassVerdict::IsometryInvertibleFredholm;
        why << "Phi(s) = s + i*" << *report.vertical_translation << " is a vertical translation";
    } else if (!admissible) {
        report.verdict = ClassVerdict::Inconclusive;
        why << "symbol not certified admissible: " << report.admissibility.method;
        if (report.admissibility.witness) {
            why << " at s = " << report.admissibility.witness->real() << (report.admissibility.witness->imag() < 0 ? "" : "+")
                << report.admissibility.witness->imag() << "i";
        }
    } else if (phi.c0() == 0) {
        report.verdict = ClassVerdict::Inconclusive;
        why << "c0 = 0: bounded only by the half-plane sufficiency test";
        if (report.prop1 && *report.prop1 > 1.0) {
            why << "; lower bound " << *report.prop1 << " > 1 on ||C_Phi|| shows it is not a contraction";
        }
    } else {
        const DefectReport& d = *report.defect;
        if (d.defect > options.threshold && d.delta < d.defect / 10.0) {
            report.verdict = ClassVerdict::NotIsometry;
            why << "isometry defect " << d.defect << " > " << options.threshold << " and stable under N -> N/2";
        } else {
            report.verdict = ClassVerdict::Inconclusive;
            why << "isometry defect " << d.defect << " (change " << d.delta
                << " from N/2) does not separate from an isometry";
        }
    }
    report.reason = why.str();
    return report;
}

}  // namespace dirspaces

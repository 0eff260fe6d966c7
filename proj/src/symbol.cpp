#include "dirspaces/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dirspaces/error.hpp"

namespace dirspaces {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWitnessSlack = 1e-12;

struct GridMinimum {
    double value = std::numeric_limits<double>::infinity();
    Complex point{};
};

// Minimizes Re phi over sigma in {2, 1, 1/2, ..., 2^{-levels+1}} and t on a
// uniform grid plus, for each k >= 2, the t at which c_k k^{-it} points to -1.
GridMinimum minimize_real_part(const DirichletSeries& phi, const GridOptions& grid) {
    std::vector<double> ts;
    const std::size_t m = std::max<std::size_t>(grid.t_uniform, 2);
    for (std::size_t i = 0; i < m; ++i) {
        ts.push_back(-grid.t_max + 2.0 * grid.t_max * static_cast<double>(i) / static_cast<double>(m - 1));
    }
    const auto terms = phi.terms();
    for (const auto& [k, c] : terms) {
        if (k < 2) continue;
        const double lk = std::log(static_cast<double>(k));
        const double base = (std::arg(c) - kPi) / lk;
        const double period = 2.0 * kPi / lk;
        const auto lo = static_cast<long>(std::ceil((-grid.t_max - base) / period));
        const auto hi = static_cast<long>(std::floor((grid.t_max - base) / period));
        for (long j = lo; j <= hi; ++j) ts.push_back(base + period * static_cast<double>(j));
    }
    std::vector<double> sigmas{2.0};
    for (int k = 0; k < grid.sigma_levels; ++k) sigmas.push_back(std::ldexp(1.0, -k));

    GridMinimum best;
    for (double sigma : sigmas) {
        for (double t : ts) {
            const Complex s{sigma, t};
            const double v = evaluate(phi, s).real();
            if (v < best.value) best = {v, s};
        }
    }
    return best;
}

}  // namespace

Symbol::Symbol(int c0, DirichletSeries phi) : c0_(c0), phi_(std::move(phi)) {
    if (c0_ < 0) throw ValidationError("symbol: c0 must be a nonnegative integer");
    if (!phi_.exact()) throw ValidationError("symbol: phi must be an exact Dirichlet polynomial");
}

double Symbol::oscillation_mass(double eps) const {
    double sum = 0.0;
    for (const auto& [k, c] : phi_.terms()) {
        if (k >= 2) sum += std::abs(c) * std::pow(static_cast<double>(k), -eps);
    }
    return sum;
}

std::string Symbol::tag() const {
    std::ostringstream os;
    os << "(" << c0_ << ", ";
    const auto terms = phi_.terms();
    if (terms.empty()) os << '0';
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        if (k > 1) os << '*' << k << "^-s";
    }
    os << ')';
    return os.str();
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::CertifiedYes: return "CertifiedYes";
        case Verdict::CertifiedNo: return "CertifiedNo";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<double> is_vertical_translation(const Symbol& phi) {
    if (phi.c0() != 1) return std::nullopt;
    const Complex c1 = phi.constant_term();
    if (c1.real() != 0.0) return std::nullopt;
    if (phi.phi().degree() > 1) return std::nullopt;
    return c1.imag();
}

double halfplane_lower_bound(const Symbol& phi, double eps) {
    if (!(eps >= 0.0)) throw PreconditionError("halfplane_lower_bound: eps must be nonnegative");
    return phi.c0() * eps + phi.constant_term().real() - phi.oscillation_mass(eps);
}

Certificate check_theorem1(const Symbol& phi, const GridOptions& grid) {
    if (phi.c0() < 1) throw PreconditionError("check_theorem1 needs c0 >= 1");
    Certificate cert;
    const double re_c1 = phi.constant_term().real();
    const double mass = phi.oscillation_mass();
    if (mass == 0.0 && re_c1 == 0.0) {
        cert.verdict = Verdict::CertifiedYes;
        cert.method = "imaginary-constant";
        return cert;
    }
    if (re_c1 >= mass) {
        cert.verdict = Verdict::CertifiedYes;
        cert.margin = re_c1 - mass;
        cert.method = "sufficient: Re c1 >= sum |c_k|";
        return cert;
    }
    const GridMinimum low = minimize_real_part(phi.phi(), grid);
    if (low.value < -kWitnessSlack) {
        cert.verdict = Verdict::CertifiedNo;
        cert.witness = low.point;
        cert.margin = low.value;
        cert.method = "grid witness: Re phi < 0";
        return cert;
    }
    cert.margin = low.value;
    cert.method = "inconclusive: sufficient test failed, no grid witness";
    return cert;
}

Certificate check_theorem2(const Symbol& phi, double eta, const GridOptions& grid) {
    if (phi.c0() != 0) throw PreconditionError("check_theorem2 needs c0 = 0");
    if (!(eta > 0.0)) throw PreconditionError("check_theorem2 needs eta > 0");
    Certificate cert;
    const double lower = phi.constant_term().real() - phi.oscillation_mass();
    if (lower >= 0.5 + eta) {
        cert.verdict = Verdict::CertifiedYes;
        cert.margin = lower - (0.5 + eta);
        cert.method = "sufficient: Re c1 - sum |c_k| >= 1/2 + eta";
        return cert;
    }
    const GridMinimum low = minimize_real_part(phi.phi(), grid);
    if (low.value < 0.5 - kWitnessSlack) {
        cert.verdict = Verdict::CertifiedNo;
        cert.witness = low.point;
        cert.margin = low.value - 0.5;
        cert.method = "necessity fails: grid witness with Re Phi < 1/2";
        return cert;
    }
    cert.margin = low.value - 0.5;
    cert.method = "inconclusive: between necessity (1/2) and sufficiency (1/2 + eta)";
    return cert;
}

Certificate certify_admissible(const Symbol& phi, const GridOptions& grid) {
    if (phi.c0() >= 1) return check_theorem1(phi, grid);
    const double slack = phi.constant_term().real() - phi.oscillation_mass() - 0.5;
    return check_theorem2(phi, slack > 0.0 ? slack : 1e-12, grid);
}

TranslatedSymbol translate_symbol(const Symbol& phi, double sigma) {
    if (!(sigma > 0.0)) throw PreconditionError("translate_symbol: sigma must be positive");
    const DirichletSeries moved = translate(phi.phi(), sigma);
    std::vector<Complex> shifted(moved.coefficients().begin(), moved.coefficients().end());
    std::vector<Complex> normalized = shifted;
    shifted[0] += phi.c0() * sigma;
    normalized[0] += (phi.c0() - 1) * sigma;
    return {Symbol(phi.c0(), DirichletSeries(std::move(shifted), true)),
            Symbol(phi.c0(), DirichletSeries(std::move(normalized), true))};
}

double schwarz_margin(const Symbol& phi, double sigma, Complex s) {
    if (!(sigma > 0.0) || !(s.real() > 0.0)) {
        throw PreconditionError("schwarz_margin needs sigma > 0 and Re s > 0");
    }
    if (check_theorem1(phi).verdict != Verdict::CertifiedYes) {
        throw PreconditionError("schwarz_margin needs a symbol certified by check_theorem1");
    }
    // Re(c0 (sigma + s) + phi(sigma + s)) - sigma - sigma (c0 - 1) - Re s
    // collapses to (c0 - 1) Re s + Re phi(sigma + s); the collapsed form keeps
    // the equality case exact.
    return (phi.c0() - 1) * s.real() + evaluate(phi.phi(), Complex{sigma, 0.0} + s).real();
}

RegionResult lemma1_region(const Symbol& phi, const std::vector<double>& eps_grid) {
    if (is_vertical_translation(phi)) return {RegionStatus::VerticalTranslation, 0.0, 0.0};
    for (double eps : eps_grid) {
        if (!(eps > 0.0) || !(eps <= 0.5)) throw PreconditionError("lemma1_region: eps must lie in (0, 1/2]");
        const double eta = halfplane_lower_bound(phi, 0.5 - eps) - 0.5;
        if (eta > 0.0) return {RegionStatus::Found, eps, eta};
    }
    return {RegionStatus::Unknown, 0.0, 0.0};
}

std::vector<double> default_eps_grid() {
    std::vector<double> grid;
    for (int k = 9; k >= 1; --k) grid.push_back(0.05 * k);
    grid.push_back(0.01);
    return grid;
}

}  // namespace dirspaces

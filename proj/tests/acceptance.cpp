// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance <path-to-dirspaces-cli>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "dirspaces/compose.hpp"
#include "dirspaces/norms.hpp"
#include "dirspaces/theorem_lab.hpp"
#include "dirspaces/zeta.hpp"
#include "support.hpp"

using namespace dirspaces;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

using Check = std::function<void(Outcome&)>;

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail << "; ";
    o.pass = false;
    o.detail << " FAILED: " << why;
}

void parseval_fubini(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    const std::array<Measure, 3> measures{Measure::alpha(0.0), Measure::alpha(1.0), mixture_density()};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DirichletSeries f = random_poly(rng, 64, 12);
        for (const Measure& mu : measures) {
            const double a2 = norm_a2(f, mu);
            const double ap = norm_ap(f, 2.0, mu).value;
            worst = std::max(worst, std::abs(ap - a2) / a2);
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.detail << "max rel diff " << worst << ", " << seconds << " s";
    if (worst > 1e-6) fail(o, "relative difference above 1e-6");
    if (seconds > 10.0) fail(o, "runtime above 10 s");
}

void weight_closed_form(Outcome& o) {
    double worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
        const Measure mu = Measure::alpha(alpha);
        for (std::size_t n = 1; n <= 10000; ++n) {
            const double exact = alpha_weight(alpha, n);
            worst = std::max(worst, std::abs(mu.weight_by_quadrature(static_cast<double>(n)) - exact) / exact);
        }
    }
    o.detail << "max rel error " << worst;
    if (worst > 1e-8) fail(o, "above 1e-8");
}

void reproducing_kernel(Outcome& o) {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> re(0.6, 3.0);
    std::uniform_real_distribution<double> im(-20.0, 20.0);
    const Measure mu = Measure::alpha(0.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const DirichletSeries f = random_poly(rng, 48, 10);
        const Complex s{re(rng), im(rng)};
        const Complex lhs = inner_a2(f, kernel_series(mu, s, 48), mu);
        worst = std::max(worst, std::abs(lhs - evaluate(f, s)));
    }
    o.detail << "max |<f,K> - f(s)| " << worst;
    if (worst > 1e-12) fail(o, "above 1e-12");
}

void composition_pointwise(Outcome& o) {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> im(-10.0, 10.0);
    constexpr std::size_t N = 128;
    double worst = 0.0;
    for (const Symbol& phi : gallery()) {
        // keep deg(f)^{c0} <= N so every term of f has an image
        std::size_t degree = 1;
        while (std::pow(static_cast<double>(degree + 1), phi.c0()) <= N && degree < 16) ++degree;
        for (int trial = 0; trial < 20; ++trial) {
            const DirichletSeries f = random_poly(rng, degree, 6);
            const Complex s{4.0, im(rng)};
            worst = std::max(worst, std::abs(evaluate(apply(phi, f, N), s) - evaluate(f, phi(s))));
        }
    }
    o.detail << "max pointwise error " << worst;
    if (worst > 1e-6) fail(o, "above 1e-6");
}

void isometry_leg(Outcome& o) {
    double worst_translation = 0.0;
    for (double alpha : {0.0, 1.0}) {
        const Measure mu = Measure::alpha(alpha);
        for (double tau : {0.0, 1.0, -1.0, 10.0, -10.0}) {
            worst_translation = std::max(worst_translation, isometry_defect_at(vertical_translation(tau), mu, 64));
        }
    }
    o.detail << "translations max defect " << worst_translation;
    if (worst_translation > 1e-10) fail(o, "translation defect above 1e-10");

    double smallest = 1e300;
    for (double alpha : {0.0, 1.0}) {
        const Measure mu = Measure::alpha(alpha);
        for (const Symbol& phi : gallery()) {
            const DefectReport d = isometry_defect(phi, mu, 64);
            smallest = std::min(smallest, d.defect);
            if (d.defect < 0.01) fail(o, phi.tag() + " defect below 0.01");
            if (!(d.delta < d.defect / 10.0)) fail(o, phi.tag() + " not stabilized");
        }
    }
    o.detail << ", gallery min defect " << smallest;

    const Symbol doubling = gallery()[0];
    const Measure mu0 = Measure::alpha(0.0);
    const Eigen::MatrixXcd g = gram(operator_matrix(doubling, mu0, 64));
    const double expected = (1.0 + std::log(2.0)) / (1.0 + 2.0 * std::log(2.0));
    const double d = isometry_defect_at(doubling, mu0, 64);
    o.detail << ", (2,0) G[2][2] " << g(1, 1).real() << " defect " << d;
    if (std::abs(g(1, 1).real() - expected) > 1e-12) fail(o, "(2,0) Gram diagonal mismatch");
    if (d < 0.29) fail(o, "(2,0) defect below 0.29");
}

void hardy_bergman_contrast(Outcome& o) {
    const Symbol doubling = gallery()[0];
    constexpr std::size_t N = 64;
    double worst_h2 = 0.0;
    for (std::size_t n = 1; n * n <= N; ++n) {
        worst_h2 = std::max(worst_h2, std::abs(norm_h2(compose_basis(doubling, n, N)) - 1.0));
    }
    o.detail << "H2 column norms max |norm - 1| " << worst_h2;
    if (worst_h2 != 0.0) fail(o, "H2 column norm differs from 1");
    for (double alpha : {0.0, 1.0}) {
        const Eigen::MatrixXcd g = gram(operator_matrix(doubling, Measure::alpha(alpha), N));
        double largest = 0.0;
        for (Eigen::Index k = 1; k < g.rows(); ++k) largest = std::max(largest, g(k, k).real());
        o.detail << ", alpha " << alpha << " max Gram diagonal (n >= 2) " << largest;
        if (!(largest < 0.8)) fail(o, "Gram diagonal not below 0.8");
    }
}

void lemma2(Outcome& o) {
    const Lemma2Profile profile = lemma2_profile(Measure::alpha(0.0), {4, 6, 8, 10, 12}, 10000);
    double s10 = 0.0;
    double s12 = 0.0;
    for (const auto& pt : profile.points) {
        if (!pt.value) fail(o, "sigma " + std::to_string(pt.sigma) + " did not converge");
        if (pt.sigma == 10.0 && pt.value) s10 = *pt.value;
        if (pt.sigma == 12.0 && pt.value) s12 = *pt.value;
    }
    // direct summation oracle: 1 + sum n^{-10} (1 + log n)
    double oracle = 0.0;
    for (int n = 200000; n >= 1; --n) oracle += std::pow(n, -10.0) * (1.0 + std::log(n));
    o.detail << "S(10) " << s10 << " (oracle " << oracle << "), S(12) - 1 " << s12 - 1.0;
    if (!profile.nonincreasing) fail(o, "not nonincreasing");
    if (!profile.at_least_one) fail(o, "S below 1");
    if (!(s12 - 1.0 <= 1e-2)) fail(o, "S(12) - 1 above 1e-2");
    if (std::abs(s10 - 1.00169) > 1e-4 || std::abs(s10 - oracle) > 1e-10) fail(o, "S(10) off");
}

void proposition1(Outcome& o) {
    const Measure mu = Measure::alpha(0.0);
    for (double c1 : {0.75, 1.0, 2.0}) {
        const double bound = prop1_bound(symbol(0, {{1, c1}}), mu, 2.0, Complex{12.0, 0.0}, 10000);
        const double required = std::sqrt(zeta(2.0 * c1)) / 1.01 - 1.0;
        o.detail << (c1 == 0.75 ? "" : ", ") << "c1 " << c1 << ": bound - 1 = " << bound - 1.0 << " (need "
                 << required << ")";
        if (!(required > 0.0 && bound - 1.0 >= required)) fail(o, "bound too small");
    }
}

void schwarz(Outcome& o) {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> positive(1e-6, 2.0);
    std::uniform_int_distribution<int> c0_dist(1, 3);
    std::uniform_int_distribution<int> kind(0, 4);
    int draws = 0;
    int translations = 0;
    double smallest_other = 1e300;
    while (draws < 1000) {
        const int c0 = c0_dist(rng);
        std::map<std::int64_t, Complex> terms;
        const bool translation = kind(rng) == 0;
        if (translation) {
            terms[1] = Complex{0.0, 10.0 * unit(rng)};
        } else {
            double mass = 0.0;
            for (std::int64_t k : {2, 3, 5, 6, 8}) {
                const Complex c{unit(rng), unit(rng)};
                terms[k] = c * 0.5;
                mass += std::abs(c * 0.5);
            }
            // a third of the draws sit on the boundary Re c1 = sum |c_k|
            const double u = unit(rng);
            terms[1] = Complex{std::abs(u) < 0.33 ? mass : mass * (1.0 + 0.2 * std::abs(u)), unit(rng)};
        }
        const Symbol phi = symbol(translation ? 1 : c0, terms);
        if (check_theorem1(phi).verdict != Verdict::CertifiedYes) continue;
        const double sigma = positive(rng);
        const Complex s{positive(rng), 10.0 * unit(rng)};
        const double margin = schwarz_margin(phi, sigma, s);
        ++draws;
        if (translation) {
            ++translations;
            if (margin != 0.0) fail(o, "translation with nonzero margin");
        } else {
            smallest_other = std::min(smallest_other, margin);
            if (!(margin > 0.0)) fail(o, "non-translation with margin <= 0");
        }
    }
    o.detail << draws << " draws, " << translations << " translations at margin 0, others min margin "
             << smallest_other;
}

void norm_profile(Outcome& o) {
    const Measure mu = Measure::alpha(0.0);
    const std::vector<double> sigmas{0.25, 0.5, 1.0, 2.0};
    double worst = -1e300;
    for (const Symbol& phi : gallery()) {
        const NormProfile p = two_norm_profile(phi, mu, 2.0, sigmas, 64);
        for (const auto& pt : p.points) worst = std::max(worst, pt.image - pt.reference);
        if (!p.inequality_holds) fail(o, phi.tag() + " exceeds 2^{-sigma}");
        if (p.equality) fail(o, phi.tag() + " shows equality but is not a translation");
    }
    for (double tau : {0.0, 1.0, -10.0}) {
        const NormProfile p = two_norm_profile(vertical_translation(tau), mu, 2.0, sigmas, 64);
        if (!p.equality) fail(o, "translation profile not equal");
    }
    o.detail << "max image - reference over gallery " << worst;
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    const int status = pclose(pipe);
    if (status != 0) out += "\n<exit " + std::to_string(status) + ">";
    return out;
}

void determinism(Outcome& o, const std::string& cli) {
    const std::vector<std::string> runs = {
        " norm --series '{\"terms\":[[1,1],[2,0.5,0.5],[3,-0.25],[6,0,1]]}' --p 3 --seed 11",
        " norm --series '{\"terms\":[[1,1],[2,1]]}' --p 1.5 --alpha 1 --seed 5",
        " classify --c0 1 --phi '{\"terms\":[[1,1],[2,0.5]]}' --N 32",
        " profile --c0 2 --phi '{\"terms\":[[1,0]]}' --p 3 --N 32 --seed 3 --csv",
    };
    for (const auto& args : runs) {
        const std::string a = capture("'" + cli + "'" + args);
        const std::string b = capture("'" + cli + "'" + args);
        if (a.empty() || a.find("<exit") != std::string::npos) fail(o, "run failed:" + args);
        if (a != b) fail(o, "outputs differ:" + args);
    }
    o.detail << runs.size() << " commands run twice";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <dirspaces-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::vector<std::pair<std::string, Check>> criteria = {
        {"parseval-fubini", parseval_fubini},
        {"weight-closed-form", weight_closed_form},
        {"reproducing-kernel", reproducing_kernel},
        {"composition-pointwise", composition_pointwise},
        {"isometry-leg", isometry_leg},
        {"hardy-vs-bergman", hardy_bergman_contrast},
        {"lemma2-profile", lemma2},
        {"prop1-noncontraction", proposition1},
        {"schwarz-margin", schwarz},
        {"norm-profile", norm_profile},
        {"cli-determinism", [&cli](Outcome& o) { determinism(o, cli); }},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].first << ": " << o.detail.str()
                  << std::endl;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << criteria.size() - failures << '/' << criteria.size() << " criteria passed in " << seconds << " s\n";
    return failures == 0 ? 0 : 1;
}

#include "dirspaces/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "dirspaces/error.hpp"

namespace dirspaces::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

struct Tabulated {
    std::vector<double> sigma;
    std::vector<double> h;
    double scale = 1.0;

    double operator()(double s) const {
        if (s <= sigma.front()) return scale * h.front();
        if (s > sigma.back()) return 0.0;
        const auto it = std::upper_bound(sigma.begin(), sigma.end(), s);
        const std::size_t k = static_cast<std::size_t>(it - sigma.begin());
        const double t = (s - sigma[k - 1]) / (sigma[k] - sigma[k - 1]);
        return scale * ((1.0 - t) * h[k - 1] + t * h[k]);
    }

    // Exact integral of the interpolant.
    double mass() const {
        double m = h.front() * sigma.front();
        for (std::size_t k = 1; k < sigma.size(); ++k) m += 0.5 * (h[k] + h[k - 1]) * (sigma[k] - sigma[k - 1]);
        return m;
    }
};

}  // namespace

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const DirichletSeries& f) {
    Json terms = Json::array();
    for (const auto& [n, a] : f.terms()) terms.push_back(Json::array({n, a.real(), a.imag()}));
    return Json{{"N", f.truncation()}, {"exact", f.exact()}, {"terms", std::move(terms)}};
}

DirichletSeries series_from_json(const Json& j) {
    return guarded("series JSON", [&] {
        if (!j.is_object() || !j.contains("terms")) throw ValidationError("series JSON needs a \"terms\" array");
        std::map<std::int64_t, Complex> terms;
        std::int64_t largest = 1;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() < 2 || t.size() > 3) {
                throw ValidationError("series term must be [n, re] or [n, re, im]");
            }
            const auto n = t.at(0).get<std::int64_t>();
            const double re = t.at(1).get<double>();
            const double im = t.size() == 3 ? t.at(2).get<double>() : 0.0;
            if (terms.count(n)) throw ValidationError("series JSON repeats index " + std::to_string(n));
            terms[n] = Complex{re, im};
            largest = std::max(largest, n);
        }
        const std::int64_t n_max = j.contains("N") ? j.at("N").get<std::int64_t>() : largest;
        if (n_max < 1) throw ValidationError("series JSON: N must be at least 1");
        DirichletSeries f = DirichletSeries::from_terms(terms, static_cast<std::size_t>(n_max));
        const bool exact = j.contains("exact") ? j.at("exact").get<bool>() : true;
        return exact ? f : DirichletSeries(std::vector<Complex>(f.coefficients().begin(), f.coefficients().end()), false);
    });
}

Measure measure_from_json(const Json& j) {
    return guarded("measure JSON", [&] {
        if (!j.is_object() || !j.contains("type")) throw ValidationError("measure JSON needs a \"type\"");
        const std::string type = j.at("type").get<std::string>();
        QuadratureSpec spec;
        if (j.contains("quadrature")) {
            const Json& q = j.at("quadrature");
            if (q.contains("nodes")) spec.nodes = q.at("nodes").get<std::size_t>();
            if (q.contains("tol")) spec.tolerance = q.at("tol").get<double>();
            if (q.contains("scheme")) {
                const std::string scheme = q.at("scheme").get<std::string>();
                if (scheme == "gauss_laguerre") spec.scheme = QuadratureScheme::GaussLaguerre;
                else if (scheme == "composite") spec.scheme = QuadratureScheme::AdaptiveComposite;
                else throw ValidationError("unknown quadrature scheme \"" + scheme + "\"");
            }
        }
        if (type == "alpha") return Measure::alpha(j.at("alpha").get<double>(), spec);
        if (type != "density") throw ValidationError("unknown measure type \"" + type + "\"");

        if (!j.contains("quadrature") || !j.at("quadrature").contains("scheme")) {
            spec.scheme = QuadratureScheme::AdaptiveComposite;
        }
        auto table = std::make_shared<Tabulated>();
        for (const auto& pt : j.at("samples")) {
            if (!pt.is_array() || pt.size() != 2) throw ValidationError("density sample must be [sigma, h]");
            table->sigma.push_back(pt.at(0).get<double>());
            table->h.push_back(pt.at(1).get<double>());
        }
        if (table->sigma.size() < 2) throw InvalidMeasureError("density needs at least two samples");
        for (std::size_t k = 0; k < table->sigma.size(); ++k) {
            if (!(table->sigma[k] >= 0.0) || (k > 0 && !(table->sigma[k] > table->sigma[k - 1]))) {
                throw InvalidMeasureError("density samples must have increasing sigma >= 0");
            }
        }
        if (j.value("normalize", false)) {
            const double mass = table->mass();
            if (!(mass > 0.0)) throw InvalidMeasureError("density samples have no mass");
            table->scale = 1.0 / mass;
        }
        spec.breakpoints = table->sigma;
        return Measure::density([table](double s) { return (*table)(s); }, spec, "density(tabulated)");
    });
}

Json to_json(const Symbol& phi) { return Json{{"c0", phi.c0()}, {"phi", to_json(phi.phi())}}; }

Symbol symbol_from_json(const Json& j) {
    return guarded("symbol JSON", [&] {
        if (!j.is_object() || !j.contains("c0") || !j.contains("phi")) {
            throw ValidationError("symbol JSON needs \"c0\" and \"phi\"");
        }
        return Symbol(j.at("c0").get<int>(), series_from_json(j.at("phi")));
    });
}

Json to_json(const Certificate& cert) {
    return Json{{"verdict", to_string(cert.verdict)},
                {"witness", cert.witness ? complex_json(*cert.witness) : Json(nullptr)},
                {"margin", cert.margin},
                {"method", cert.method}};
}

Json to_json(const FunctionalNormEstimate& est) {
    return Json{{"value", est.value},   {"kind", to_string(est.kind)}, {"tail", est.tail},
                {"stderr", 0.0},        {"space", est.space},           {"point", complex_json(est.point)},
                {"lower_bound", est.lower_bound}};
}

Json to_json(const HpNorm& norm, const std::string& space) {
    return Json{{"value", norm.value},
                {"kind", norm.method == HpMethod::QuasiMonteCarlo ? "estimate" : "exact"},
                {"tail", 0.0},
                {"stderr", norm.standard_error},
                {"space", space},
                {"method", to_string(norm.method)}};
}

Json to_json(const DefectReport& d) {
    return Json{{"defect", d.defect},
                {"defect_half", d.defect_half},
                {"delta", d.delta},
                {"tail_heuristic", d.tail_heuristic}};
}

Json to_json(const RegionResult& r) {
    const char* status = r.status == RegionStatus::Found                 ? "found"
                         : r.status == RegionStatus::VerticalTranslation ? "vertical-translation"
                                                                         : "unknown";
    Json out{{"status", status}};
    if (r.status == RegionStatus::Found) {
        out["eps"] = r.eps;
        out["eta"] = r.eta;
    }
    return out;
}

Json to_json(const Lemma2Profile& profile) {
    Json points = Json::array();
    for (const auto& pt : profile.points) {
        Json o{{"sigma", pt.sigma}, {"S", optional_number(pt.value)}, {"tail", pt.tail}};
        if (!pt.error.empty()) o["error"] = pt.error;
        points.push_back(std::move(o));
    }
    return Json{{"points", std::move(points)},
                {"nonincreasing", profile.nonincreasing},
                {"at_least_one", profile.at_least_one},
                {"limit_gap", profile.limit_gap}};
}

Json to_json(const NormProfile& profile) {
    Json points = Json::array();
    for (const auto& pt : profile.points) {
        points.push_back(Json{{"sigma", pt.sigma},
                              {"reference", pt.reference},
                              {"image", pt.image},
                              {"stderr", pt.standard_error}});
    }
    return Json{{"points", std::move(points)},
                {"inequality_holds", profile.inequality_holds},
                {"equality", profile.equality},
                {"tolerance", profile.tolerance},
                {"bergman_reference", profile.bergman_reference},
                {"bergman_image", profile.bergman_image}};
}

Json to_json(const ClassificationReport& r) {
    Json out{{"symbol", r.symbol_tag}, {"measure", r.measure_tag}, {"N", r.truncation}, {"p", r.p}};
    out["verdict"] = to_string(r.verdict);
    out["reason"] = r.reason;
    out["vertical_translation"] = optional_number(r.vertical_translation);
    out["admissibility"] = to_json(r.admissibility);
    out["isometry_defect"] = r.defect ? to_json(*r.defect) : Json(nullptr);
    out["contraction_bound"] = optional_number(r.contraction_bound);
    out["lemma1_region"] = r.lemma1 ? to_json(*r.lemma1) : Json(nullptr);
    out["two_norm_profile"] = r.profile ? to_json(*r.profile) : Json(nullptr);
    out["prop1_bound"] = optional_number(r.prop1);
    return out;
}

Json to_json(const OperatorMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.entries.cols(); ++k) row.push_back(complex_json(m.entries(i, k)));
        rows.push_back(std::move(row));
    }
    return Json{{"N", m.truncation},
                {"columns", m.entries.cols()},
                {"measure", m.measure_tag},
                {"symbol", m.symbol_tag},
                {"entries", std::move(rows)}};
}

std::string to_csv_abs(const OperatorMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    os << "m";
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k) os << ",n=" << k + 1;
    os << '\n';
    for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
        os << i + 1;
        for (Eigen::Index k = 0; k < m.entries.cols(); ++k) os << ',' << std::abs(m.entries(i, k));
        os << '\n';
    }
    return os.str();
}

}  // namespace dirspaces::io

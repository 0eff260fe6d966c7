#include "dirspaces/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dirspaces/error.hpp"

namespace dirspaces::cli {

namespace {

using io::Json;

const std::vector<std::string> kCommands = {"norm",     "weights", "kernel",  "compose",
                                            "check-symbol", "classify", "lemma2", "profile"};

Complex parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0;
    double im = 0.0;
    char sep = 0;
    if (!(is >> re)) throw ValidationError("cannot parse complex number \"" + text + "\"");
    if (is >> sep) {
        if (sep != ',' || !(is >> im)) throw ValidationError("complex numbers are written re or re,im");
    }
    return {re, im};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse number \"" + item + "\" in list");
        }
    }
    return out;
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("--") + what + " is not valid JSON: " + e.what());
    }
}

void apply_config_file(RunConfig& c, const Json& j) {
    try {
        if (j.contains("command")) c.command = j.at("command").get<std::string>();
        if (j.contains("measure")) c.measure = j.at("measure");
        if (j.contains("alpha")) c.measure = Json{{"type", "alpha"}, {"alpha", j.at("alpha").get<double>()}};
        if (j.contains("symbol")) c.symbol = j.at("symbol");
        if (j.contains("c0") && j.contains("phi")) c.symbol = Json{{"c0", j.at("c0")}, {"phi", j.at("phi")}};
        if (j.contains("series")) c.series = j.at("series");
        if (j.contains("N")) c.truncation = j.at("N").get<std::size_t>();
        if (j.contains("p")) c.p = j.at("p").get<double>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("csv")) c.csv = j.at("csv").get<bool>();
        if (j.contains("matrix")) c.matrix = j.at("matrix").get<bool>();
        if (j.contains("s")) c.s = Complex{j.at("s").at(0).get<double>(), j.at("s").at(1).get<double>()};
        if (j.contains("w")) c.w = Complex{j.at("w").at(0).get<double>(), j.at("w").at(1).get<double>()};
        if (j.contains("sigma")) c.sigmas = j.at("sigma").get<std::vector<double>>();
        if (j.contains("eta")) c.eta = j.at("eta").get<double>();
        if (j.contains("eps")) c.eps = j.at("eps").get<double>();
        if (j.contains("n")) c.n = j.at("n").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config file: ") + e.what());
    }
}

Measure need_measure(const RunConfig& c, bool default_alpha0) {
    if (c.measure) return io::measure_from_json(*c.measure);
    if (default_alpha0) return Measure::alpha(0.0);
    throw ValidationError(c.command + " needs --measure or --alpha");
}

Symbol need_symbol(const RunConfig& c) {
    if (!c.symbol) throw ValidationError(c.command + " needs --symbol or --c0 with --phi");
    return io::symbol_from_json(*c.symbol);
}

DirichletSeries need_series(const RunConfig& c) {
    if (!c.series) throw ValidationError(c.command + " needs --series");
    return io::series_from_json(*c.series);
}

QmcOptions qmc_for(const RunConfig& c) {
    QmcOptions q;
    q.seed = c.seed;
    return q;
}

std::string csv_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_norm(const RunConfig& c, std::ostream& out) {
    const DirichletSeries f = need_series(c);
    Json j;
    if (c.measure) {
        const Measure mu = io::measure_from_json(*c.measure);
        const std::string space = "A^" + csv_number(c.p) + "_" + mu.tag();
        if (c.p == 2.0) {
            j = io::to_json(HpNorm{norm_a2(f, mu), 0.0, HpMethod::ExactEvenPower}, space);
        } else {
            j = io::to_json(norm_ap(f, c.p, mu, HpMethod::Auto, qmc_for(c)), space);
        }
    } else {
        j = io::to_json(norm_hp(f, c.p, HpMethod::Auto, qmc_for(c)), "H^" + csv_number(c.p));
    }
    if (c.csv) {
        out << "value,kind,tail,stderr\n"
            << csv_number(j["value"].get<double>()) << ',' << j["kind"].get<std::string>() << ','
            << csv_number(j["tail"].get<double>()) << ',' << csv_number(j["stderr"].get<double>()) << '\n';
    } else {
        emit(out, j);
    }
    return kOk;
}

int cmd_weights(const RunConfig& c, std::ostream& out) {
    const Measure mu = need_measure(c, false);
    const auto w = mu.weights(c.truncation);
    if (c.csv) {
        out << "n,weight\n";
        for (std::size_t n = 1; n <= c.truncation; ++n) out << n << ',' << csv_number((*w)[n - 1]) << '\n';
        return kOk;
    }
    Json values = Json::array();
    for (std::size_t n = 1; n <= c.truncation; ++n) values.push_back((*w)[n - 1]);
    emit(out, Json{{"measure", mu.tag()}, {"N", c.truncation}, {"weights", std::move(values)}});
    return kOk;
}

int cmd_kernel(const RunConfig& c, std::ostream& out) {
    const Measure mu = need_measure(c, false);
    if (!c.s || !c.w) throw ValidationError("kernel needs --s and --w");
    const KernelValue k = kernel(mu, *c.s, *c.w, c.truncation);
    if (c.csv) {
        out << "re,im,tail\n"
            << csv_number(k.value.real()) << ',' << csv_number(k.value.imag()) << ',' << csv_number(k.tail) << '\n';
        return kOk;
    }
    emit(out, Json{{"value", io::complex_json(k.value)},
                   {"kind", "partial-sum"},
                   {"tail", k.tail},
                   {"stderr", 0.0},
                   {"N", c.truncation}});
    return kOk;
}

int cmd_compose(const RunConfig& c, std::ostream& out) {
    const Symbol phi = need_symbol(c);
    if (c.matrix) {
        const Measure mu = need_measure(c, true);
        const OperatorMatrix m = operator_matrix(phi, mu, c.truncation);
        if (c.csv) out << io::to_csv_abs(m);
        else emit(out, io::to_json(m));
        return kOk;
    }
    const DirichletSeries image =
        c.n ? compose_basis(phi, *c.n, c.truncation) : apply(phi, need_series(c), c.truncation);
    if (c.csv) {
        out << "n,re,im\n";
        for (const auto& [n, a] : image.terms()) {
            out << n << ',' << csv_number(a.real()) << ',' << csv_number(a.imag()) << '\n';
        }
    } else {
        emit(out, io::to_json(image));
    }
    return kOk;
}

int cmd_check_symbol(const RunConfig& c, std::ostream& out) {
    const Symbol phi = need_symbol(c);
    const auto tau = is_vertical_translation(phi);
    Json j{{"symbol", phi.tag()}};
    j["vertical_translation"] = tau ? Json(*tau) : Json(nullptr);
    j["admissibility"] = io::to_json(certify_admissible(phi));
    if (phi.c0() == 0 && c.eta) j["theorem2"] = io::to_json(check_theorem2(phi, *c.eta));
    j["halfplane_lower_bound"] = Json{{"eps", c.eps}, {"value", halfplane_lower_bound(phi, c.eps)}};
    j["lemma1_region"] = io::to_json(lemma1_region(phi, default_eps_grid()));
    if (c.csv) {
        out << "field,value\n"
            << "vertical_translation," << (tau ? csv_number(*tau) : "") << '\n'
            << "admissibility," << j["admissibility"]["verdict"].get<std::string>() << '\n'
            << "halfplane_lower_bound," << csv_number(j["halfplane_lower_bound"]["value"].get<double>()) << '\n'
            << "lemma1_region," << j["lemma1_region"]["status"].get<std::string>() << '\n';
        return kOk;
    }
    emit(out, j);
    return kOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
    const Symbol phi = need_symbol(c);
    const Measure mu = need_measure(c, true);
    ClassifyOptions options;
    options.qmc = qmc_for(c);
    if (!c.sigmas.empty()) options.profile_sigmas = c.sigmas;
    const ClassificationReport r = classify(phi, mu, c.truncation, c.p, options);
    if (c.csv) {
        out << "field,value\n"
            << "symbol," << r.symbol_tag << '\n'
            << "verdict," << to_string(r.verdict) << '\n'
            << "admissibility," << to_string(r.admissibility.verdict) << '\n'
            << "isometry_defect," << (r.defect ? csv_number(r.defect->defect) : "") << '\n'
            << "stabilization_delta," << (r.defect ? csv_number(r.defect->delta) : "") << '\n'
            << "contraction_bound," << (r.contraction_bound ? csv_number(*r.contraction_bound) : "") << '\n'
            << "prop1_bound," << (r.prop1 ? csv_number(*r.prop1) : "") << '\n';
        return kOk;
    }
    emit(out, io::to_json(r));
    return kOk;
}

int cmd_lemma2(const RunConfig& c, std::ostream& out) {
    const Measure mu = need_measure(c, true);
    const std::vector<double> sigmas = c.sigmas.empty() ? std::vector<double>{4, 6, 8, 10, 12} : c.sigmas;
    const Lemma2Profile profile = lemma2_profile(mu, sigmas, c.truncation);
    if (c.csv) {
        out << "sigma,S,tail\n";
        for (const auto& pt : profile.points) {
            out << csv_number(pt.sigma) << ',' << (pt.value ? csv_number(*pt.value) : "") << ','
                << csv_number(pt.tail) << '\n';
        }
        return kOk;
    }
    Json j = io::to_json(profile);
    j["measure"] = mu.tag();
    j["N"] = c.truncation;
    emit(out, j);
    return kOk;
}

int cmd_profile(const RunConfig& c, std::ostream& out) {
    const Symbol phi = need_symbol(c);
    const Measure mu = need_measure(c, true);
    const std::vector<double> sigmas = c.sigmas.empty() ? std::vector<double>{0.25, 0.5, 1, 2} : c.sigmas;
    const NormProfile profile = two_norm_profile(phi, mu, c.p, sigmas, c.truncation, qmc_for(c));
    if (c.csv) {
        out << "sigma,reference,image,stderr\n";
        for (const auto& pt : profile.points) {
            out << csv_number(pt.sigma) << ',' << csv_number(pt.reference) << ',' << csv_number(pt.image) << ','
                << csv_number(pt.standard_error) << '\n';
        }
        return kOk;
    }
    Json j = io::to_json(profile);
    j["symbol"] = phi.tag();
    j["measure"] = mu.tag();
    j["p"] = c.p;
    j["N"] = c.truncation;
    emit(out, j);
    return kOk;
}

}  // namespace

std::string usage() {
    return "usage: dirspaces <command> [options]\n"
           "commands: norm weights kernel compose check-symbol classify lemma2 profile\n"
           "options:\n"
           "  --series JSON    Dirichlet series {\"N\":..,\"exact\":..,\"terms\":[[n,re,im],..]}\n"
           "  --symbol JSON    symbol {\"c0\":int,\"phi\":<series>}  (or --c0 INT --phi JSON)\n"
           "  --measure JSON   {\"type\":\"alpha\",\"alpha\":a} or a tabulated density  (or --alpha A)\n"
           "  --N INT          truncation (default 64)\n"
           "  --p REAL         norm exponent (default 2)\n"
           "  --seed INT       seed for quasi-Monte Carlo estimates\n"
           "  --s RE[,IM]      point s;  --w RE[,IM]  second kernel point\n"
           "  --sigma LIST     comma-separated sigma values (lemma2, profile, classify)\n"
           "  --eta REAL       margin for the c0 = 0 sufficiency test (check-symbol)\n"
           "  --eps REAL       half-plane offset for the lower bound (check-symbol)\n"
           "  --n INT          compose a single basis element n^{-s}\n"
           "  --matrix         compose: emit the operator matrix instead of f o Phi\n"
           "  --csv            CSV output instead of JSON\n"
           "  --config FILE    JSON file with any of the keys above\n"
           "environment: DIRSPACES_THREADS caps internal parallelism\n";
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"dirspaces"};
    std::string command;
    std::string series;
    std::string symbol;
    std::string measure;
    std::string phi;
    std::string config;
    std::string s_text;
    std::string w_text;
    std::string sigma_text;
    int c0 = 0;
    double alpha = 0.0;
    RunConfig c;
    std::size_t truncation = 0;
    std::size_t n = 0;
    double eta = 0.0;
    app.add_option("command", command);
    auto* o_series = app.add_option("--series", series);
    auto* o_symbol = app.add_option("--symbol", symbol);
    auto* o_measure = app.add_option("--measure", measure);
    auto* o_alpha = app.add_option("--alpha", alpha);
    auto* o_c0 = app.add_option("--c0", c0);
    auto* o_phi = app.add_option("--phi", phi);
    auto* o_n_trunc = app.add_option("--N", truncation);
    auto* o_p = app.add_option("--p", c.p);
    auto* o_seed = app.add_option("--seed", c.seed);
    auto* o_s = app.add_option("--s", s_text);
    auto* o_w = app.add_option("--w", w_text);
    auto* o_sigma = app.add_option("--sigma", sigma_text);
    auto* o_eta = app.add_option("--eta", eta);
    auto* o_eps = app.add_option("--eps", c.eps);
    auto* o_n = app.add_option("--n", n);
    auto* o_matrix = app.add_flag("--matrix", c.matrix);
    auto* o_csv = app.add_flag("--csv", c.csv);
    auto* o_config = app.add_option("--config", config);
    (void)o_matrix;
    (void)o_csv;
    (void)o_p;
    (void)o_seed;
    (void)o_eps;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ValidationError(std::string("bad arguments: ") + e.what());
    }

    // The config file is read first; explicit flags win.
    if (o_config->count()) {
        std::ifstream in(config);
        if (!in) throw ValidationError("cannot read config file " + config);
        RunConfig from_file;
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("config file is not valid JSON: ") + e.what());
        }
        apply_config_file(from_file, j);
        if (!o_p->count()) c.p = from_file.p;
        if (!o_seed->count()) c.seed = from_file.seed;
        if (!o_eps->count()) c.eps = from_file.eps;
        if (!o_csv->count()) c.csv = from_file.csv;
        if (!o_matrix->count()) c.matrix = from_file.matrix;
        c.command = from_file.command;
        c.measure = from_file.measure;
        c.symbol = from_file.symbol;
        c.series = from_file.series;
        c.truncation = from_file.truncation;
        c.s = from_file.s;
        c.w = from_file.w;
        c.sigmas = from_file.sigmas;
        c.eta = from_file.eta;
        c.n = from_file.n;
    }
    if (!command.empty()) c.command = command;
    if (o_series->count()) c.series = parse_json(series, "series");
    if (o_symbol->count()) c.symbol = parse_json(symbol, "symbol");
    if (o_measure->count()) c.measure = parse_json(measure, "measure");
    if (o_alpha->count()) c.measure = Json{{"type", "alpha"}, {"alpha", alpha}};
    if (o_c0->count() || o_phi->count()) {
        if (!o_c0->count() || !o_phi->count()) throw ValidationError("--c0 and --phi go together");
        c.symbol = Json{{"c0", c0}, {"phi", parse_json(phi, "phi")}};
    }
    if (o_n_trunc->count()) c.truncation = truncation;
    if (o_s->count()) c.s = parse_complex(s_text);
    if (o_w->count()) c.w = parse_complex(w_text);
    if (o_sigma->count()) c.sigmas = parse_list(sigma_text);
    if (o_eta->count()) c.eta = eta;
    if (o_n->count()) c.n = n;

    if (c.command.empty()) throw ValidationError("missing command");
    if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end()) {
        throw ValidationError("unknown command \"" + c.command + "\"");
    }
    if (c.truncation < 1) throw ValidationError("--N must be at least 1");
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.command == "norm") return cmd_norm(c, out);
        if (c.command == "weights") return cmd_weights(c, out);
        if (c.command == "kernel") return cmd_kernel(c, out);
        if (c.command == "compose") return cmd_compose(c, out);
        if (c.command == "check-symbol") return cmd_check_symbol(c, out);
        if (c.command == "classify") return cmd_classify(c, out);
        if (c.command == "lemma2") return cmd_lemma2(c, out);
        if (c.command == "profile") return cmd_profile(c, out);
        err << usage();
        return kValidationError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() == 1 && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
        out << usage();
        return kOk;
    }
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n' << usage();
        return kValidationError;
    }
    try {
        return run(config, out, err);
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    }
}

}  // namespace dirspaces::cli

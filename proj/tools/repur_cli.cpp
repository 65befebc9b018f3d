// repur command-line front end. Talks to the library only through repur.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "repur/repur.h"

namespace {

enum class Format { Text, Csv, Json };

struct CliError {
    int exit_code;
    std::string status;
    std::string message;
};

bool is_validation(repur_status s) {
    switch (s) {
        case REPUR_E_INVALID_ARGUMENT:
        case REPUR_E_NON_POSITIVE_ORDER:
        case REPUR_E_OUT_OF_RANGE:
        case REPUR_E_ORDER_UNSUPPORTED:
        case REPUR_E_INSUFFICIENT_TOWER:
        case REPUR_E_IO:
        case REPUR_E_PARSE:
            return true;
        default:
            return false;
    }
}

void check(repur_status s) {
    if (s == REPUR_OK) return;
    throw CliError{is_validation(s) ? 2 : 3, repur_status_name(s), repur_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw CliError{2, "InvalidArgument", msg}; }

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Amplitude = std::unique_ptr<repur_amplitude, Deleter<repur_amplitude, repur_amplitude_free>>;
using Density = std::unique_ptr<repur_density, Deleter<repur_density, repur_density_free>>;
using Table = std::unique_ptr<repur_table, Deleter<repur_table, repur_table_free>>;
using Scan = std::unique_ptr<repur_scan, Deleter<repur_scan, repur_scan_free>>;
using Cumulants = std::unique_ptr<repur_cumulants, Deleter<repur_cumulants, repur_cumulants_free>>;
using Recon = std::unique_ptr<repur_reconstruction, Deleter<repur_reconstruction, repur_reconstruction_free>>;

std::string take(char* s) {
    std::string out(s);
    repur_string_free(s);
    return out;
}

std::string num(double v) {
    if (std::isnan(v)) return "INDETERMINATE";
    if (std::isinf(v)) return v > 0 ? "INF" : "-INF";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string ext(const repur_ext& v) {
    switch (v.kind) {
        case REPUR_EXT_FINITE: return num(v.value);
        case REPUR_EXT_POS_INF: return "INF";
        case REPUR_EXT_NEG_INF: return "-INF";
        case REPUR_EXT_INDETERMINATE: break;
    }
    return "INDETERMINATE";
}

nlohmann::json ext_json(const repur_ext& v) {
    switch (v.kind) {
        case REPUR_EXT_FINITE: return nlohmann::json::parse(num(v.value));
        case REPUR_EXT_POS_INF: return {{"kind", "inf"}};
        case REPUR_EXT_NEG_INF: return {{"kind", "-inf"}};
        case REPUR_EXT_INDETERMINATE: break;
    }
    return {{"kind", "indeterminate"}};
}

nlohmann::json num_json(double v) { return ext_json({REPUR_EXT_FINITE, v}); }

double parse_index(const std::string& s) {
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "inf" || lower == "infinity") return INFINITY;
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        usage_error("not a number: '" + s + "'");
    }
}

struct Globals {
    bool json = false;
    bool csv = false;
    double hbar = 1.0;
    std::string config;
    std::string input;
    unsigned threads = 0;

    Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Text); }
    repur_format table_format() const { return json ? REPUR_FORMAT_JSON : REPUR_FORMAT_CSV; }
};

struct StateSpec {
    std::string state = "gaussian";
    std::string space = "x";
    double sigma = 1.0;
    double center = 0.0;
    double zeta = 1.0;
    double omega = 1.0;
    double gamma = 1.0;
    double m = 0.0;
    double length = 1.0;
    double lambda = 1.0;
    double alpha = 1.5;
    double c = 1.0;
    double a = 2.0;
    double beta = 0.5 * M_LOG2E;
    double d = 0.3989422804014327;
    double core_sigma = 1.0;
    std::string mix = "0.5:-2:1,0.5:2:1";
    std::size_t n = 0;
    double half_width = 0.0;
};

void add_state_options(CLI::App* sub, StateSpec& s) {
    sub->add_option("--state", s.state, "gaussian|squeezed|cauchy|mixture|uniform|laplace|exponential|power-tail|stretched-tail")
        ->check(CLI::IsMember({"gaussian", "squeezed", "cauchy", "mixture", "uniform", "laplace", "exponential",
                               "power-tail", "stretched-tail"}));
    sub->add_option("--space", s.space, "x or p (momentum density via the Fourier transform)")
        ->check(CLI::IsMember({"x", "p"}));
    sub->add_option("--sigma", s.sigma, "Gaussian standard deviation");
    sub->add_option("--center", s.center, "Gaussian center");
    sub->add_option("--zeta", s.zeta, "squeezing parameter");
    sub->add_option("--omega", s.omega, "oscillator frequency");
    sub->add_option("--gamma", s.gamma, "Cauchy scale");
    sub->add_option("--m", s.m, "Cauchy median");
    sub->add_option("--length", s.length, "uniform support length");
    sub->add_option("--lambda", s.lambda, "Laplace / exponential rate");
    sub->add_option("--alpha", s.alpha, "power-tail exponent");
    sub->add_option("--c", s.c, "power-tail constant");
    sub->add_option("--a", s.a, "stretched-tail shape");
    sub->add_option("--beta", s.beta, "stretched-tail rate (bits)");
    sub->add_option("--d", s.d, "stretched-tail prefactor");
    sub->add_option("--core-sigma", s.core_sigma, "core width of synthetic tail densities");
    sub->add_option("--mix", s.mix, "mixture components w:mean:sigma,...");
    sub->add_option("--n", s.n, "grid points (0 = default)");
    sub->add_option("--half-width", s.half_width, "Cauchy half-width in units of gamma (0 = default)");
}

struct Mixture {
    std::vector<double> w, mu, s;
};

Mixture parse_mix(const std::string& text) {
    Mixture m;
    std::stringstream all(text);
    std::string part;
    while (std::getline(all, part, ',')) {
        std::stringstream one(part);
        std::string a, b, c;
        if (!std::getline(one, a, ':') || !std::getline(one, b, ':') || !std::getline(one, c)) {
            usage_error("mixture component '" + part + "' is not w:mean:sigma");
        }
        m.w.push_back(parse_index(a));
        m.mu.push_back(parse_index(b));
        m.s.push_back(parse_index(c));
    }
    if (m.w.empty()) usage_error("empty mixture");
    return m;
}

bool is_amplitude_state(const std::string& s) {
    return s == "gaussian" || s == "squeezed" || s == "cauchy" || s == "mixture";
}

Amplitude build_amplitude(const StateSpec& s, const Globals& g) {
    repur_amplitude* out = nullptr;
    if (!g.input.empty()) {
        repur_density* d = nullptr;
        check(repur_read_csv(g.input.c_str(), &d, &out));
        if (d) {
            repur_density_free(d);
            usage_error("input file holds a density; this command needs an amplitude (x,re,im)");
        }
    } else if (s.state == "gaussian") {
        check(repur_gaussian_state(s.sigma, s.center, s.n, &out));
    } else if (s.state == "squeezed") {
        check(repur_squeezed_state(s.zeta, s.omega, g.hbar, &out));
    } else if (s.state == "cauchy") {
        check(repur_cauchy_state(s.gamma, s.m, g.hbar, s.half_width, s.n, &out));
    } else if (s.state == "mixture") {
        const auto mix = parse_mix(s.mix);
        check(repur_mixture_state(mix.w.data(), mix.mu.data(), mix.s.data(), mix.w.size(), s.n, &out));
    } else {
        usage_error("state '" + s.state + "' has no wavefunction; use a density command");
    }
    return Amplitude(out);
}

Amplitude to_space(Amplitude psi, const StateSpec& s, const Globals& g) {
    if (s.space == "x") return psi;
    repur_amplitude* out = nullptr;
    check(repur_amplitude_fourier(psi.get(), g.hbar, &out));
    return Amplitude(out);
}

Density normalized(repur_density* raw) {
    Density d(raw);
    repur_density* out = nullptr;
    check(repur_density_normalize(d.get(), &out));
    return Density(out);
}

Density build_density(const StateSpec& s, const Globals& g) {
    repur_density* out = nullptr;
    if (!g.input.empty()) {
        repur_amplitude* a = nullptr;
        check(repur_read_csv(g.input.c_str(), &out, &a));
        if (a) {
            Amplitude psi = to_space(Amplitude(a), s, g);
            check(repur_amplitude_density(psi.get(), &out));
        }
        return normalized(out);
    }
    if (s.space == "p" || s.state == "squeezed") {
        Amplitude psi = to_space(build_amplitude(s, g), s, g);
        check(repur_amplitude_density(psi.get(), &out));
        return normalized(out);
    }
    if (s.state == "gaussian") {
        check(repur_gaussian_density(s.sigma, s.center, s.n, &out));
    } else if (s.state == "cauchy") {
        check(repur_cauchy_density(s.gamma, s.m, s.half_width, s.n, &out));
    } else if (s.state == "mixture") {
        const auto mix = parse_mix(s.mix);
        check(repur_mixture_density(mix.w.data(), mix.mu.data(), mix.s.data(), mix.w.size(), s.n, &out));
    } else if (s.state == "uniform") {
        check(repur_uniform_density(s.length, s.n, &out));
    } else if (s.state == "laplace") {
        check(repur_laplace_density(s.lambda, s.n, &out));
    } else if (s.state == "exponential") {
        check(repur_exponential_density(s.lambda, s.n, &out));
    } else if (s.state == "power-tail") {
        check(repur_power_tail_density(s.alpha, s.c, s.core_sigma, &out));
    } else {
        check(repur_stretched_tail_density(s.a, s.beta, s.d, s.core_sigma, &out));
    }
    return normalized(out);
}

std::string state_label(const StateSpec& s, const Globals& g) {
    if (!g.input.empty()) return g.input;
    if (s.state == "gaussian") return "gaussian sigma=" + num(s.sigma);
    if (s.state == "squeezed") return "squeezed zeta=" + num(s.zeta);
    if (s.state == "cauchy") return "cauchy gamma=" + num(s.gamma) + " m=" + num(s.m);
    if (s.state == "mixture") return "mixture " + s.mix;
    return s.state;
}

Scan make_scan(const repur_density* d, std::size_t bins, double span) {
    repur_scan* out = nullptr;
    check(repur_scan_create(d, bins, span, &out));
    return Scan(out);
}

void emit(const std::string& s) {
    std::cout << s;
    if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

// ---- subcommands ----

int cmd_state(const StateSpec& s, const Globals& g) {
    const repur_format fmt = g.table_format();
    if (g.input.empty() && !is_amplitude_state(s.state)) {
        Density d = build_density(s, g);
        char* text = nullptr;
        check(repur_density_format(d.get(), fmt, &text));
        emit(take(text));
        return 0;
    }
    Amplitude psi = to_space(build_amplitude(s, g), s, g);
    char* text = nullptr;
    check(repur_amplitude_format(psi.get(), fmt, &text));
    emit(take(text));
    return 0;
}

int cmd_entropy(const StateSpec& s, const Globals& g, const std::string& index, bool want_power,
                bool require_finite) {
    Density d = build_density(s, g);
    repur_entropy_result r{};
    check(repur_entropy(d.get(), parse_index(index), &r));
    const repur_ext& value = want_power ? r.power : r.entropy_bits;
    if (g.format() == Format::Text) {
        std::cout << ext(value) << '\n';
    } else {
        char* text = nullptr;
        check(repur_entropy_format(&r, g.table_format(), &text));
        emit(take(text));
    }
    if (require_finite && value.kind != REPUR_EXT_FINITE) {
        throw CliError{3, "NonFinite", "result is " + ext(value)};
    }
    return 0;
}

int cmd_repur(const StateSpec& s, const Globals& g, const std::vector<std::string>& r_text, bool vur,
              bool require_finite) {
    Amplitude psi = build_amplitude(s, g);
    if (vur) {
        repur_vur v{};
        check(repur_vur_chain(psi.get(), g.hbar, &v));
        char* text = nullptr;
        check(repur_vur_format(&v, g.table_format(), &text));
        emit(take(text));
        return 0;
    }
    std::vector<double> r;
    for (const auto& t : r_text) r.push_back(parse_index(t));
    repur_table* raw = nullptr;
    check(repur_sweep(psi.get(), r.data(), r.size(), g.hbar, g.threads, state_label(s, g).c_str(), &raw));
    Table table(raw);
    char* text = nullptr;
    check(repur_table_format(table.get(), g.table_format(), &text));
    emit(take(text));
    if (require_finite) {
        for (std::size_t k = 0; k < repur_table_rows(table.get()); ++k) {
            repur_row row{};
            check(repur_table_row(table.get(), k, &row));
            if (row.product.kind != REPUR_EXT_FINITE) {
                throw CliError{3, "NonFinite", "product at r=" + num(row.r) + " is " + ext(row.product)};
            }
        }
    }
    return 0;
}

int cmd_scan(const StateSpec& s, const Globals& g, std::size_t bins, double span, bool peaks) {
    Density d = build_density(s, g);
    Scan scan = make_scan(d.get(), bins, span);
    if (!peaks) {
        char* text = nullptr;
        check(repur_scan_format(scan.get(), g.table_format(), &text));
        emit(take(text));
        return 0;
    }
    std::size_t count = 0;
    check(repur_scan_peaks(scan.get(), 0.0, nullptr, 0, &count));
    std::vector<double> found(count);
    check(repur_scan_peaks(scan.get(), 0.0, found.data(), found.size(), &count));
    if (g.format() == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (double p : found) arr.push_back(num_json(p));
        std::cout << nlohmann::json{{"peaks", arr}}.dump() << '\n';
    } else {
        std::cout << "peak_bits\n";
        for (double p : found) std::cout << num(p) << '\n';
    }
    return 0;
}

struct CumulantFlags {
    int n_max = 4;
    double delta = 0.01;
    bool richardson = false;
    std::string source = "gldf";
    std::size_t bins = 0;
};

Cumulants make_cumulants(const repur_density* d, const CumulantFlags& f, const Globals& g, int n_max) {
    repur_cumulants* out = nullptr;
    if (f.source == "scan") {
        Scan scan = make_scan(d, f.bins, 0.0);
        check(repur_cumulants_from_scan(scan.get(), n_max, &out));
    } else {
        check(repur_cumulants_gldf(d, n_max, f.delta, f.richardson ? 1 : 0, g.threads, &out));
    }
    return Cumulants(out);
}

int cmd_cumulants(const StateSpec& s, const Globals& g, const CumulantFlags& f) {
    Density d = build_density(s, g);
    Cumulants c = make_cumulants(d.get(), f, g, f.n_max);
    char* text = nullptr;
    check(repur_cumulants_format(c.get(), g.table_format(), &text));
    emit(take(text));
    return 0;
}

int cmd_reconstruct(const StateSpec& s, const Globals& g, const CumulantFlags& f, int order) {
    if (order < 2 || order > 4) throw CliError{2, "OrderUnsupported", "order must be 2, 3 or 4"};
    Density d = build_density(s, g);
    Cumulants c = make_cumulants(d.get(), f, g, order);
    Scan scan = make_scan(d.get(), f.bins, 0.0);
    repur_reconstruction* raw = nullptr;
    check(repur_reconstruct(c.get(), order, scan.get(), &raw));
    Recon r(raw);
    char* text = nullptr;
    check(repur_reconstruction_format(r.get(), g.table_format(), &text));
    emit(take(text));
    return 0;
}

int cmd_tailfit(const StateSpec& s, const Globals& g, const std::string& model, const std::vector<double>& window,
                std::size_t bins, double span) {
    Density d = build_density(s, g);
    Scan scan = make_scan(d.get(), bins, span);
    repur_tail_fit fit{};
    if (model == "auto") {
        check(repur_classify_tail(scan.get(), 0.0, 0.0, 0, &fit));
    } else {
        if (window.size() != 2) usage_error("--window lo hi is required for a fixed model");
        if (model == "power") {
            check(repur_fit_power_tail(scan.get(), window[0], window[1], &fit));
        } else {
            check(repur_fit_stretched_tail(scan.get(), window[0], window[1], &fit));
        }
    }
    char* text = nullptr;
    check(repur_tail_fit_format(&fit, g.table_format(), &text));
    emit(take(text));
    return 0;
}

// Prefixes every data row of a CSV table with fixed columns.
std::string prefixed(const std::string& csv, const std::string& header, const std::string& values, bool with_header) {
    std::stringstream in(csv);
    std::string line, out;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            if (with_header) out += header + line + '\n';
            continue;
        }
        out += values + line + '\n';
    }
    return out;
}

Table sweep(const repur_amplitude* psi, const Globals& g, const std::string& label) {
    repur_table* raw = nullptr;
    check(repur_sweep(psi, nullptr, 0, g.hbar, g.threads, label.c_str(), &raw));
    return Table(raw);
}

std::string table_text(const Table& t, repur_format fmt) {
    char* text = nullptr;
    check(repur_table_format(t.get(), fmt, &text));
    return take(text);
}

int reproduce_fig1(const Globals& g) {
    nlohmann::json all = nlohmann::json::array();
    std::string csv;
    for (double zeta : {1.0, 2.0, 3.0}) {
        repur_amplitude* raw = nullptr;
        check(repur_squeezed_state(zeta, 1.0, g.hbar, &raw));
        Amplitude psi(raw);
        Table t = sweep(psi.get(), g, "squeezed zeta=" + num(zeta));
        if (g.format() == Format::Json) {
            auto j = nlohmann::json::parse(table_text(t, REPUR_FORMAT_JSON));
            j["zeta"] = num_json(zeta);
            all.push_back(j);
        } else {
            csv += prefixed(table_text(t, REPUR_FORMAT_CSV), "zeta,", num(zeta) + ",", csv.empty());
        }
    }
    if (g.format() == Format::Json) {
        std::cout << all.dump() << '\n';
    } else {
        std::cout << csv;
    }
    return 0;
}

int reproduce_eq30(const Globals& g) {
    const double target = 0.0052 * std::pow(M_PI, 4);
    struct Level {
        double factor;
        std::size_t n;
    };
    const Level levels[] = {{1e4, std::size_t{1} << 17}, {2e4, std::size_t{1} << 18}, {4e4, std::size_t{1} << 19}};
    nlohmann::json rows = nlohmann::json::array();
    std::vector<double> products;
    for (const auto& lv : levels) {
        repur_amplitude* raw = nullptr;
        check(repur_cauchy_state(1.0, 0.0, g.hbar, lv.factor, lv.n, &raw));
        Amplitude psi(raw);
        repur_row row{};
        check(repur_product(psi.get(), 0.0, g.hbar, &row));
        if (row.product.kind != REPUR_EXT_FINITE) {
            throw CliError{3, "NonFinite", "Shannon product is " + ext(row.product)};
        }
        products.push_back(row.product.value / (g.hbar * g.hbar));
        rows.push_back({{"half_width_factor", num_json(lv.factor)},
                        {"n", lv.n},
                        {"product", num_json(products.back())},
                        {"ratio", num_json(products.back() / target)}});
    }
    const double drift = std::abs(products.back() / products.front() - 1.0);
    if (g.format() == Format::Json) {
        std::cout << nlohmann::json{{"product", num_json(products.front())},
                                    {"reference", num_json(target)},
                                    {"ratio", num_json(products.front() / target)},
                                    {"convergence", rows},
                                    {"drift", num_json(drift)}}
                         .dump()
                  << '\n';
    } else if (g.format() == Format::Csv) {
        std::cout << "half_width_factor,n,product,ratio\n";
        for (std::size_t k = 0; k < products.size(); ++k) {
            std::cout << num(levels[k].factor) << ',' << levels[k].n << ',' << num(products[k]) << ','
                      << num(products[k] / target) << '\n';
        }
    } else {
        std::cout << "product/hbar^2 = " << num(products.front()) << "\nratio to 0.0052 pi^4 = "
                  << num(products.front() / target) << "\nconvergence drift = " << num(drift) << '\n';
    }
    return 0;
}

int reproduce_figs3(const Globals& g) {
    nlohmann::json all = nlohmann::json::array();
    std::string csv;
    for (double gamma : {0.5, 1.0, 2.0}) {
        for (double m : {0.0, 1.0}) {
            repur_amplitude* raw = nullptr;
            check(repur_cauchy_state(gamma, m, g.hbar, 0.0, 0, &raw));
            Amplitude psi(raw);
            Table t = sweep(psi.get(), g, "cauchy gamma=" + num(gamma) + " m=" + num(m));
            if (g.format() == Format::Json) {
                auto j = nlohmann::json::parse(table_text(t, REPUR_FORMAT_JSON));
                j["gamma"] = num_json(gamma);
                j["m"] = num_json(m);
                all.push_back(j);
            } else {
                csv += prefixed(table_text(t, REPUR_FORMAT_CSV), "gamma,m,", num(gamma) + "," + num(m) + ",",
                                csv.empty());
            }
        }
    }
    if (g.format() == Format::Json) {
        std::cout << all.dump() << '\n';
    } else {
        std::cout << csv;
    }
    return 0;
}

// ---- config file ----

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "Io", "cannot open config file " + path};
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CliError{2, "Parse", path + ":" + std::to_string(lineno) + ": expected key=value"};
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::string find_config(const std::vector<std::string>& args) {
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) return args[k + 1];
        if (args[k].rfind("--config=", 0) == 0) return args[k].substr(9);
    }
    return {};
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
    for (const auto& a : args) {
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
}

// Config entries become ordinary arguments placed right after the subcommand
// name, skipping any option the user already passed explicitly.
std::vector<std::string> apply_config(CLI::App& app, std::vector<std::string> args) {
    const std::string path = find_config(args);
    if (path.empty()) return args;
    const auto entries = read_config(path);
    std::size_t at = args.size();
    CLI::App* sub = nullptr;
    for (std::size_t k = 0; k < args.size(); ++k) {
        sub = app.get_subcommand_no_throw(args[k]);
        if (sub != nullptr) {
            at = k + 1;
            break;
        }
    }
    std::vector<std::string> extra;
    for (const auto& [key, value] : entries) {
        const std::string flag = "--" + key;
        if (given(args, flag) || key == "config") continue;
        const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
        if (opt == nullptr) opt = app.get_option_no_throw(flag);
        if (opt == nullptr) continue;
        if (opt->get_items_expected_max() == 0) {
            if (value == "true" || value == "1" || value == "yes" || value == "on") extra.push_back(flag);
            continue;
        }
        extra.push_back(flag);
        std::stringstream ss(value);
        std::string item;
        if (opt->get_items_expected_max() > 1) {
            while (ss >> item) extra.push_back(item);
        } else {
            extra.push_back(value);
        }
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
    return args;
}

void report(const CliError& e, bool json) {
    if (json) {
        std::cerr << nlohmann::json{{"error", {{"status", e.status}, {"message", e.message}, {"exit_code", e.exit_code}}}}
                         .dump()
                  << '\n';
    } else {
        std::cerr << "error: " << e.status << ": " << e.message << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renyi entropy powers, entropic uncertainty relations and information scans"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    auto* json_flag = app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);
    app.add_option("--hbar", g.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
    app.add_option("--config", g.config, "key=value defaults file (flags take precedence)");
    app.add_option("--input", g.input, "grid CSV: x,value (density) or x,re,im (amplitude)");
    app.add_option("--threads", g.threads, "worker threads, 0 = auto")->envname("REPUR_THREADS");

    StateSpec spec;

    std::string kind;
    std::string synthetic_model = "power";
    auto* state = app.add_subcommand("state", "write the sampled wavefunction or density");
    add_state_options(state, spec);
    state->add_option("kind", kind, "state name, same choices as --state, or synthetic")
        ->check(CLI::IsMember({"gaussian", "squeezed", "cauchy", "mixture", "uniform", "laplace", "exponential",
                               "power-tail", "stretched-tail", "synthetic"}));
    state->add_option("--model", synthetic_model, "tail law of a synthetic density: power or stretched")
        ->check(CLI::IsMember({"power", "stretched"}));

    std::string index = "1";
    bool require_finite = false;
    auto* entropy = app.add_subcommand("entropy", "Renyi entropy in bits");
    add_state_options(entropy, spec);
    entropy->add_option("--index", index, "Renyi order p > 0 or inf");
    entropy->add_flag("--require-finite", require_finite, "exit 3 on an infinite or indeterminate result");

    auto* power = app.add_subcommand("power", "Renyi entropy power");
    add_state_options(power, spec);
    power->add_option("--index", index, "Renyi order p > 0 or inf");
    power->add_flag("--require-finite", require_finite, "exit 3 on an infinite or indeterminate result");

    std::vector<std::string> r_values;
    bool vur = false;
    auto* repur = app.add_subcommand("repur", "entropy-power products N_{1+t}(x) N_{1+r}(p) against hbar^2/4");
    add_state_options(repur, spec);
    repur->add_option("--r", r_values, "index r in [-1/2, inf]; repeatable (default: full sweep)");
    repur->add_flag("--vur", vur, "variance / Shannon / bound chain instead of the sweep");
    repur->add_flag("--require-finite", require_finite, "exit 3 when a product is not finite");

    std::size_t bins = 0;
    double span = 0.0;
    bool peaks = false;
    auto* scan = app.add_subcommand("scan", "information scan f(x), g(x)");
    add_state_options(scan, spec);
    scan->add_option("--bins", bins, "information bins (default 1024)");
    scan->add_option("--span", span, "window width in bits (default 40)");
    scan->add_flag("--peaks", peaks, "list detected peaks of g");

    CumulantFlags cf;
    auto* cumulants = app.add_subcommand("cumulants", "information cumulants");
    add_state_options(cumulants, spec);
    cumulants->add_option("--n-max", cf.n_max, "highest order");
    cumulants->add_option("--delta", cf.delta, "index resolution");
    cumulants->add_flag("--richardson", cf.richardson, "one Richardson step at delta/2");
    cumulants->add_option("--source", cf.source, "gldf or scan")->check(CLI::IsMember({"gldf", "scan"}));
    cumulants->add_option("--bins", cf.bins, "scan bins for --source scan");

    int order = 2;
    auto* reconstruct = app.add_subcommand("reconstruct", "Gram-Charlier reconstruction of g(x)");
    add_state_options(reconstruct, spec);
    reconstruct->add_option("--order", order, "2, 3 or 4");
    reconstruct->add_option("--delta", cf.delta, "index resolution");
    reconstruct->add_flag("--richardson", cf.richardson, "one Richardson step at delta/2");
    reconstruct->add_option("--source", cf.source, "gldf or scan")->check(CLI::IsMember({"gldf", "scan"}));
    reconstruct->add_option("--bins", cf.bins, "information bins");

    std::string model = "auto";
    std::vector<double> window;
    auto* tailfit = app.add_subcommand("tailfit", "fit the tail of g(x)");
    add_state_options(tailfit, spec);
    tailfit->add_option("--model", model, "auto, power or stretched")
        ->check(CLI::IsMember({"auto", "power", "stretched"}));
    tailfit->add_option("--window", window, "fit window lo hi in bits")->expected(2);
    tailfit->add_option("--bins", bins, "information bins (default 1024)");
    tailfit->add_option("--span", span, "window width in bits (default 40)");

    std::string target;
    auto* reproduce = app.add_subcommand("reproduce", "regenerate a published table");
    reproduce->add_option("target", target, "fig1, eq30 or figS3")
        ->required()
        ->check(CLI::IsMember({"fig1", "eq30", "figS3"}));

    std::vector<std::string> args(argv + 1, argv + argc);
    const bool json_errors = given(args, "--json");
    try {
        args = apply_config(app, args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report(CliError{2, "Usage", e.what()}, json_errors);
        return 2;
    } catch (const CliError& e) {
        report(e, json_errors);
        return e.exit_code;
    }

    try {
        if (*state) {
            if (kind == "synthetic") {
                spec.state = synthetic_model == "power" ? "power-tail" : "stretched-tail";
            } else if (!kind.empty()) {
                spec.state = kind;
            }
            return cmd_state(spec, g);
        }
        if (*entropy) return cmd_entropy(spec, g, index, false, require_finite);
        if (*power) return cmd_entropy(spec, g, index, true, require_finite);
        if (*repur) return cmd_repur(spec, g, r_values, vur, require_finite);
        if (*scan) return cmd_scan(spec, g, bins, span, peaks);
        if (*cumulants) return cmd_cumulants(spec, g, cf);
        if (*reconstruct) return cmd_reconstruct(spec, g, cf, order);
        if (*tailfit) return cmd_tailfit(spec, g, model, window, bins, span);
        if (*reproduce) {
            if (target == "fig1") return reproduce_fig1(g);
            if (target == "eq30") return reproduce_eq30(g);
            return reproduce_figs3(g);
        }
    } catch (const CliError& e) {
        report(e, g.json);
        return e.exit_code;
    }
    return 2;
}

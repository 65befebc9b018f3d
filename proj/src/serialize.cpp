#include "repur/serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>
#include <vector>

namespace repur {

namespace {

double round12(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

const char* source_name(CumulantSource s) { return s == CumulantSource::Gldf ? "gldf" : "scan"; }

std::string index_label(const EntropyIndex& idx) { return idx.is_infinite() ? "INF" : format_number(idx.value()); }

}  // namespace

nlohmann::json to_json(double v) {
    if (std::isnan(v)) return {{"kind", "indeterminate"}};
    if (std::isinf(v)) return {{"kind", v > 0 ? "inf" : "-inf"}};
    return round12(v);
}

nlohmann::json to_json(const ExtReal& v) {
    switch (v.kind()) {
        case ExtReal::Kind::Finite: return round12(v.value());
        case ExtReal::Kind::PosInf: return {{"kind", "inf"}};
        case ExtReal::Kind::NegInf: return {{"kind", "-inf"}};
        case ExtReal::Kind::Indeterminate: break;
    }
    return {{"kind", "indeterminate"}};
}

std::string format_r(double r) { return format_number(r); }

std::string table_csv(const RepurTable& t) {
    std::ostringstream out;
    out << "r,t,power_x,power_p,product,gap,saturated\n";
    for (const auto& row : t.rows) {
        out << format_number(row.r) << ',' << format_number(row.t) << ',' << format_ext(row.power_x) << ','
            << format_ext(row.power_p) << ',' << format_ext(row.product) << ',' << format_ext(row.gap) << ','
            << (row.saturated ? "true" : "false") << '\n';
    }
    return out.str();
}

nlohmann::json table_json(const RepurTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        rows.push_back({{"r", to_json(row.r)},
                        {"t", to_json(row.t)},
                        {"power_x", to_json(row.power_x)},
                        {"power_p", to_json(row.power_p)},
                        {"product", to_json(row.product)},
                        {"gap", to_json(row.gap)},
                        {"saturated", row.saturated}});
    }
    return {{"state", t.state_label}, {"hbar", to_json(t.hbar)}, {"rows", rows}};
}

std::string scan_csv(const InformationScan& s) {
    std::ostringstream out;
    out << "x_bits,f,g\n";
    for (std::size_t k = 0; k < s.g.size(); ++k) {
        out << format_number(s.x_grid[k]) << ',' << format_number(s.f[k]) << ',' << format_number(s.g[k]) << '\n';
    }
    return out.str();
}

nlohmann::json scan_json(const InformationScan& s) {
    nlohmann::json x = nlohmann::json::array(), f = nlohmann::json::array(), g = nlohmann::json::array();
    for (std::size_t k = 0; k < s.g.size(); ++k) {
        x.push_back(to_json(s.x_grid[k]));
        f.push_back(to_json(s.f[k]));
        g.push_back(to_json(s.g[k]));
    }
    return {{"onset", to_json(s.onset)},
            {"bin_width", to_json(s.bin_width)},
            {"overflow_mass", to_json(s.overflow_mass)},
            {"dropped_samples", s.dropped_samples},
            {"x_bits", x},
            {"f", f},
            {"g", g}};
}

std::string cumulants_csv(const CumulantSet& k) {
    std::ostringstream out;
    out << "n,kappa\n";
    for (int n = 1; n <= k.order(); ++n) out << n << ',' << format_number(k(n)) << '\n';
    return out.str();
}

nlohmann::json cumulants_json(const CumulantSet& k) {
    nlohmann::json kappa = nlohmann::json::array();
    for (double v : k.kappa) kappa.push_back(to_json(v));
    return {{"delta", to_json(k.delta)}, {"D", k.dim}, {"kappa", kappa}, {"source", source_name(k.source)}};
}

namespace {

std::vector<std::pair<const char*, double>> tail_params(const TailFit& f) {
    if (f.model == TailModel::PowerLaw) return {{"alpha", f.alpha}, {"c_sum", f.c_sum}, {"c_side", f.c_side}};
    return {{"a", f.a}, {"beta", f.beta}, {"d_sum", f.d_sum}, {"d_side", f.d_side}};
}

}  // namespace

std::string tailfit_csv(const TailFit& f) {
    std::ostringstream out;
    out << "key,value\nmodel," << to_string(f.model) << '\n';
    for (const auto& [key, value] : tail_params(f)) out << key << ',' << format_number(value) << '\n';
    out << "x_lo," << format_number(f.x_lo) << "\nx_hi," << format_number(f.x_hi) << "\nresidual,"
        << format_number(f.residual) << "\nambiguous," << (f.ambiguous ? "true" : "false") << '\n';
    return out.str();
}

nlohmann::json tailfit_json(const TailFit& f) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : tail_params(f)) params[key] = to_json(value);
    return {{"model", std::string(to_string(f.model))},
            {"params", params},
            {"window", {to_json(f.x_lo), to_json(f.x_hi)}},
            {"residual", to_json(f.residual)},
            {"ambiguous", f.ambiguous}};
}

std::string reconstruction_csv(const Reconstruction& r) {
    std::ostringstream out;
    out << "x_bits,g_reference,g_reconstructed\n";
    for (std::size_t k = 0; k < r.g_reference.size(); ++k) {
        out << format_number(r.x_grid[k]) << ',' << format_number(r.g_reference[k]) << ','
            << format_number(r.g_reconstructed[k]) << '\n';
    }
    return out.str();
}

nlohmann::json reconstruction_json(const Reconstruction& r) {
    nlohmann::json x = nlohmann::json::array(), ref = nlohmann::json::array(), rec = nlohmann::json::array();
    for (std::size_t k = 0; k < r.g_reference.size(); ++k) {
        x.push_back(to_json(r.x_grid[k]));
        ref.push_back(to_json(r.g_reference[k]));
        rec.push_back(to_json(r.g_reconstructed[k]));
    }
    return {{"order", r.model.order},
            {"a", to_json(r.model.a)},
            {"alpha", to_json(r.model.alpha)},
            {"beta", to_json(r.model.beta)},
            {"exact", r.model.exact},
            {"clipped_mass", to_json(r.clipped_mass)},
            {"x_bits", x},
            {"g_reference", ref},
            {"g_reconstructed", rec}};
}

std::string entropy_csv(const EntropyResult& e) {
    std::ostringstream out;
    out << "index,entropy_bits,power,diverged\n"
        << index_label(e.index) << ',' << format_ext(e.entropy_bits) << ',' << format_ext(e.power) << ','
        << (e.diverged ? "true" : "false") << '\n';
    return out.str();
}

nlohmann::json entropy_json(const EntropyResult& e) {
    return {{"index", to_json(e.index.value())},
            {"entropy_bits", to_json(e.entropy_bits)},
            {"power", to_json(e.power)},
            {"diverged", e.diverged}};
}

std::string vur_csv(const VurChain& v) {
    std::ostringstream out;
    out << "sigma2_x,sigma2_p,variance_product,shannon_product,bound,chain_ok\n"
        << format_ext(v.sigma2_x) << ',' << format_ext(v.sigma2_p) << ',' << format_ext(v.variance_product) << ','
        << format_number(v.shannon_product) << ',' << format_number(v.bound) << ','
        << (v.chain_ok ? "true" : "false") << '\n';
    return out.str();
}

nlohmann::json vur_json(const VurChain& v) {
    return {{"sigma2_x", to_json(v.sigma2_x)},
            {"sigma2_p", to_json(v.sigma2_p)},
            {"variance_product", to_json(v.variance_product)},
            {"shannon_product", to_json(v.shannon_product)},
            {"bound", to_json(v.bound)},
            {"chain_ok", v.chain_ok}};
}

std::string density_csv(const SampledDensity& d) {
    std::ostringstream out;
    out << "x,value\n";
    for (std::size_t k = 0; k < d.size(); ++k) out << format_number(d.grid()[k]) << ',' << format_number(d[k]) << '\n';
    return out.str();
}

nlohmann::json density_json(const SampledDensity& d) {
    nlohmann::json x = nlohmann::json::array(), v = nlohmann::json::array();
    for (std::size_t k = 0; k < d.size(); ++k) {
        x.push_back(to_json(d.grid()[k]));
        v.push_back(to_json(d[k]));
    }
    return {{"D", d.dim()}, {"x", x}, {"value", v}};
}

std::string amplitude_csv(const SampledAmplitude& a) {
    std::ostringstream out;
    out << "x,re,im\n";
    for (std::size_t k = 0; k < a.size(); ++k) {
        out << format_number(a.grid()[k]) << ',' << format_number(a[k].real()) << ',' << format_number(a[k].imag())
            << '\n';
    }
    return out.str();
}

nlohmann::json amplitude_json(const SampledAmplitude& a) {
    nlohmann::json x = nlohmann::json::array(), re = nlohmann::json::array(), im = nlohmann::json::array();
    for (std::size_t k = 0; k < a.size(); ++k) {
        x.push_back(to_json(a.grid()[k]));
        re.push_back(to_json(a[k].real()));
        im.push_back(to_json(a[k].imag()));
    }
    return {{"D", a.dim()}, {"x", x}, {"re", re}, {"im", im}};
}

}  // namespace repur

#include "repur/repur.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "repur/csv.hpp"
#include "repur/cumulants.hpp"
#include "repur/error.hpp"
#include "repur/infoscan.hpp"
#include "repur/renyi.hpp"
#include "repur/repur.hpp"
#include "repur/serialize.hpp"
#include "repur/states.hpp"
#include "repur/tails.hpp"
#include "repur/transform.hpp"

struct repur_amplitude {
    repur::SampledAmplitude value;
};
struct repur_density {
    repur::SampledDensity value;
};
struct repur_table {
    repur::RepurTable value;
};
struct repur_scan {
    repur::InformationScan value;
};
struct repur_cumulants {
    repur::CumulantSet value;
};
struct repur_reconstruction {
    repur::Reconstruction value;
};

namespace {

thread_local std::string g_last_error;

repur_status to_status(repur::ErrorCode code) {
    using repur::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return REPUR_E_INVALID_ARGUMENT;
        case ErrorCode::ZeroMass: return REPUR_E_ZERO_MASS;
        case ErrorCode::NonPositiveOrder: return REPUR_E_NON_POSITIVE_ORDER;
        case ErrorCode::OutOfRange: return REPUR_E_OUT_OF_RANGE;
        case ErrorCode::GridTooCoarse: return REPUR_E_GRID_TOO_COARSE;
        case ErrorCode::InsufficientTower: return REPUR_E_INSUFFICIENT_TOWER;
        case ErrorCode::NonFinitePower: return REPUR_E_NON_FINITE_POWER;
        case ErrorCode::OrderUnsupported: return REPUR_E_ORDER_UNSUPPORTED;
        case ErrorCode::DegenerateFit: return REPUR_E_DEGENERATE_FIT;
        case ErrorCode::NoConvergence: return REPUR_E_NO_CONVERGENCE;
        case ErrorCode::InsufficientTail: return REPUR_E_INSUFFICIENT_TAIL;
        case ErrorCode::SpliceFailure: return REPUR_E_SPLICE_FAILURE;
        case ErrorCode::DomainError: return REPUR_E_DOMAIN_ERROR;
        case ErrorCode::Io: return REPUR_E_IO;
        case ErrorCode::Parse: return REPUR_E_PARSE;
    }
    return REPUR_E_INTERNAL;
}

template <class F>
repur_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return REPUR_OK;
    } catch (const repur::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return REPUR_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return REPUR_E_INTERNAL;
    }
}

repur_status null_argument(const char* name) {
    g_last_error = std::string("null argument: ") + name;
    return REPUR_E_INVALID_ARGUMENT;
}

#define REPUR_REQUIRE(p) \
    if ((p) == nullptr) return null_argument(#p)

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

repur_ext to_c(const repur::ExtReal& v) {
    switch (v.kind()) {
        case repur::ExtReal::Kind::Finite: return {REPUR_EXT_FINITE, v.value()};
        case repur::ExtReal::Kind::PosInf: return {REPUR_EXT_POS_INF, 0.0};
        case repur::ExtReal::Kind::NegInf: return {REPUR_EXT_NEG_INF, 0.0};
        case repur::ExtReal::Kind::Indeterminate: break;
    }
    return {REPUR_EXT_INDETERMINATE, 0.0};
}

repur::ExtReal from_c(const repur_ext& v) {
    switch (v.kind) {
        case REPUR_EXT_FINITE: return repur::ExtReal::finite(v.value);
        case REPUR_EXT_POS_INF: return repur::ExtReal::pos_inf();
        case REPUR_EXT_NEG_INF: return repur::ExtReal::neg_inf();
        case REPUR_EXT_INDETERMINATE: break;
    }
    return repur::ExtReal::indeterminate();
}

repur_row to_c(const repur::RepurRow& r) {
    return {r.r, r.t, to_c(r.power_x), to_c(r.power_p), to_c(r.product), to_c(r.gap), r.saturated ? 1 : 0};
}

repur_vur to_c(const repur::VurChain& v) {
    return {to_c(v.sigma2_x), to_c(v.sigma2_p), to_c(v.variance_product), v.shannon_product, v.bound,
            v.chain_ok ? 1 : 0};
}

repur_tail_fit to_c(const repur::TailFit& f) {
    return {f.model == repur::TailModel::PowerLaw ? REPUR_TAIL_POWER_LAW : REPUR_TAIL_STRETCHED,
            f.alpha,
            f.c_sum,
            f.c_side,
            f.a,
            f.beta,
            f.d_side,
            f.d_sum,
            f.x_lo,
            f.x_hi,
            f.residual,
            f.points,
            f.iterations,
            f.ambiguous ? 1 : 0};
}

repur::TailFit from_c(const repur_tail_fit& f) {
    repur::TailFit out;
    out.model = f.model == REPUR_TAIL_POWER_LAW ? repur::TailModel::PowerLaw : repur::TailModel::Stretched;
    out.alpha = f.alpha;
    out.c_sum = f.c_sum;
    out.c_side = f.c_side;
    out.a = f.a;
    out.beta = f.beta;
    out.d_side = f.d_side;
    out.d_sum = f.d_sum;
    out.x_lo = f.x_lo;
    out.x_hi = f.x_hi;
    out.residual = f.residual;
    out.points = f.points;
    out.iterations = f.iterations;
    out.ambiguous = f.ambiguous != 0;
    return out;
}

std::vector<repur::MixtureComponent> mixture(const double* w, const double* mu, const double* s, size_t count) {
    if (count == 0) repur::fail(repur::ErrorCode::InvalidArgument, "mixture needs at least one component");
    if (w == nullptr || mu == nullptr || s == nullptr) {
        repur::fail(repur::ErrorCode::InvalidArgument, "null mixture arrays");
    }
    std::vector<repur::MixtureComponent> parts;
    for (size_t k = 0; k < count; ++k) parts.push_back({w[k], mu[k], s[k]});
    return parts;
}

std::vector<double> r_values(const double* r, size_t count) {
    if (count == 0) return repur::default_r_grid();
    if (r == nullptr) repur::fail(repur::ErrorCode::InvalidArgument, "null r array");
    return {r, r + count};
}

template <class T>
std::string render(repur_format fmt, std::string (*csv)(const T&), nlohmann::json (*json)(const T&), const T& v) {
    if (fmt == REPUR_FORMAT_JSON) return json(v).dump();
    if (fmt == REPUR_FORMAT_CSV) return csv(v);
    repur::fail(repur::ErrorCode::InvalidArgument, "unknown output format");
}

repur::CauchyOptions cauchy_options(double half_width_factor, size_t n) {
    repur::CauchyOptions o;
    if (half_width_factor > 0.0) o.half_width_factor = half_width_factor;
    if (n > 0) o.n = n;
    return o;
}

}  // namespace

extern "C" {

const char* repur_version(void) { return "0.1.0"; }

const char* repur_last_error(void) { return g_last_error.c_str(); }

const char* repur_status_name(repur_status status) {
    switch (status) {
        case REPUR_OK: return "Ok";
        case REPUR_E_INVALID_ARGUMENT: return "InvalidArgument";
        case REPUR_E_ZERO_MASS: return "ZeroMass";
        case REPUR_E_NON_POSITIVE_ORDER: return "NonPositiveOrder";
        case REPUR_E_OUT_OF_RANGE: return "OutOfRange";
        case REPUR_E_GRID_TOO_COARSE: return "GridTooCoarse";
        case REPUR_E_INSUFFICIENT_TOWER: return "InsufficientTower";
        case REPUR_E_NON_FINITE_POWER: return "NonFinitePower";
        case REPUR_E_ORDER_UNSUPPORTED: return "OrderUnsupported";
        case REPUR_E_DEGENERATE_FIT: return "DegenerateFit";
        case REPUR_E_NO_CONVERGENCE: return "NoConvergence";
        case REPUR_E_INSUFFICIENT_TAIL: return "InsufficientTail";
        case REPUR_E_SPLICE_FAILURE: return "SpliceFailure";
        case REPUR_E_DOMAIN_ERROR: return "DomainError";
        case REPUR_E_IO: return "Io";
        case REPUR_E_PARSE: return "Parse";
        case REPUR_E_INTERNAL: return "Internal";
    }
    return "Unknown";
}

void repur_string_free(char* s) { std::free(s); }

/* amplitudes */

repur_status repur_amplitude_create(double x0, double dx, size_t n, const double* re, const double* im,
                                    repur_amplitude** out) {
    REPUR_REQUIRE(re);
    REPUR_REQUIRE(im);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::SampledAmplitude a(repur::Grid1D(x0, dx, n), std::span<const double>(re, n),
                                  std::span<const double>(im, n));
        *out = new repur_amplitude{std::move(a)};
    });
}

void repur_amplitude_free(repur_amplitude* a) { delete a; }

size_t repur_amplitude_size(const repur_amplitude* a) { return a ? a->value.size() : 0; }

repur_status repur_amplitude_grid(const repur_amplitude* a, double* x0, double* dx) {
    REPUR_REQUIRE(a);
    if (x0) *x0 = a->value.grid().x0();
    if (dx) *dx = a->value.grid().dx();
    return REPUR_OK;
}

repur_status repur_amplitude_values(const repur_amplitude* a, double* re, double* im) {
    REPUR_REQUIRE(a);
    for (size_t k = 0; k < a->value.size(); ++k) {
        if (re) re[k] = a->value[k].real();
        if (im) im[k] = a->value[k].imag();
    }
    return REPUR_OK;
}

repur_status repur_amplitude_normalize(const repur_amplitude* a, repur_amplitude** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::normalize(a->value)}; });
}

repur_status repur_amplitude_lp_norm(const repur_amplitude* a, double p, double* out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::lp_norm(a->value, p); });
}

repur_status repur_amplitude_fourier(const repur_amplitude* a, double hbar, repur_amplitude** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::fourier_conjugate(a->value, hbar)}; });
}

repur_status repur_amplitude_fourier_inverse(const repur_amplitude* a, double hbar, repur_amplitude** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::fourier_inverse(a->value, hbar)}; });
}

repur_status repur_amplitude_beckner(const repur_amplitude* a, double hbar, repur_amplitude** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::beckner_rescale(a->value, hbar)}; });
}

repur_status repur_amplitude_density(const repur_amplitude* a, repur_density** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_density{repur::density_from_amplitude(a->value)}; });
}

repur_status repur_amplitude_format(const repur_amplitude* a, repur_format fmt, char** out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::amplitude_csv, repur::amplitude_json, a->value)); });
}

/* states */

repur_status repur_gaussian_state(double sigma, double center, size_t n, repur_amplitude** out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::gaussian_state(sigma, center, n ? n : 2048)}; });
}

repur_status repur_squeezed_state(double zeta, double omega, double hbar, repur_amplitude** out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_amplitude{repur::squeezed_superposition(zeta, omega, hbar).psi}; });
}

repur_status repur_squeezed_variances(double zeta, double omega, double hbar, double* var_x, double* var_p) {
    return guarded([&] {
        if (var_x) *var_x = repur::squeezed_variance_x(zeta, omega, hbar);
        if (var_p) *var_p = repur::squeezed_variance_p(zeta, omega, hbar);
    });
}

repur_status repur_cauchy_state(double gamma, double m, double hbar, double half_width_factor, size_t n,
                                repur_amplitude** out) {
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_amplitude{repur::cauchy_pltwp(gamma, m, hbar, cauchy_options(half_width_factor, n)).psi};
    });
}

repur_status repur_cauchy_momentum_variance(double gamma, double hbar, double* out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::cauchy_momentum_variance(gamma, hbar); });
}

repur_status repur_mixture_state(const double* weights, const double* means, const double* sigmas, size_t count,
                                 size_t n, repur_amplitude** out) {
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_amplitude{
            repur::gaussian_mixture_state(mixture(weights, means, sigmas, count), n ? n : 4096)};
    });
}

repur_status repur_bessel_k0(double u, double* out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::bessel_k0(u); });
}

/* densities */

repur_status repur_density_create(double x0, double dx, size_t n, const double* values, int dim,
                                  repur_density** out) {
    REPUR_REQUIRE(values);
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_density{
            repur::SampledDensity(repur::Grid1D(x0, dx, n), std::vector<double>(values, values + n), dim)};
    });
}

void repur_density_free(repur_density* d) { delete d; }

size_t repur_density_size(const repur_density* d) { return d ? d->value.size() : 0; }

repur_status repur_density_grid(const repur_density* d, double* x0, double* dx) {
    REPUR_REQUIRE(d);
    if (x0) *x0 = d->value.grid().x0();
    if (dx) *dx = d->value.grid().dx();
    return REPUR_OK;
}

repur_status repur_density_values(const repur_density* d, double* values) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(values);
    for (size_t k = 0; k < d->value.size(); ++k) values[k] = d->value[k];
    return REPUR_OK;
}

repur_status repur_density_mass(const repur_density* d, double* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::integrate(d->value); });
}

repur_status repur_density_normalize(const repur_density* d, repur_density** out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_density{repur::normalize(d->value)}; });
}

repur_status repur_density_format(const repur_density* d, repur_format fmt, char** out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::density_csv, repur::density_json, d->value)); });
}

repur_status repur_uniform_density(double length, size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_density{repur::uniform_density(length, n ? n : 1025)}; });
}

repur_status repur_gaussian_density(double sigma, double center, size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_density{repur::gaussian_density(sigma, center, n ? n : 4097)}; });
}

repur_status repur_laplace_density(double lambda, size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_density{repur::laplace_density(lambda, n ? n : size_t{1} << 16)}; });
}

repur_status repur_exponential_density(double lambda, size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded(
        [&] { *out = new repur_density{repur::exponential_density(lambda, n ? n : size_t{1} << 16)}; });
}

repur_status repur_cauchy_density(double gamma, double m, double half_width_factor, size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded(
        [&] { *out = new repur_density{repur::cauchy_density(gamma, m, cauchy_options(half_width_factor, n))}; });
}

repur_status repur_mixture_density(const double* weights, const double* means, const double* sigmas, size_t count,
                                   size_t n, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_density{
            repur::gaussian_mixture_density(mixture(weights, means, sigmas, count), n ? n : 4096)};
    });
}

repur_status repur_power_tail_density(double alpha, double c, double core_sigma, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_density{repur::synthetic_tail_density(repur::PowerLawTail{alpha, c}, core_sigma)};
    });
}

repur_status repur_stretched_tail_density(double a, double beta, double d, double core_sigma, repur_density** out) {
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_density{repur::synthetic_tail_density(repur::StretchedTail{a, beta, d}, core_sigma)};
    });
}

repur_status repur_read_csv(const char* path, repur_density** density, repur_amplitude** amplitude) {
    REPUR_REQUIRE(path);
    REPUR_REQUIRE(density);
    REPUR_REQUIRE(amplitude);
    *density = nullptr;
    *amplitude = nullptr;
    return guarded([&] {
        auto data = repur::read_grid_csv_file(path);
        if (auto* d = std::get_if<repur::SampledDensity>(&data)) {
            *density = new repur_density{std::move(*d)};
        } else {
            *amplitude = new repur_amplitude{std::get<repur::SampledAmplitude>(std::move(data))};
        }
    });
}

/* entropy */

repur_status repur_entropy(const repur_density* d, double p, repur_entropy_result* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] {
        const auto r = repur::evaluate_entropy(d->value, repur::EntropyIndex::from_value(p));
        *out = {r.index.value(),     to_c(r.entropy_bits),        to_c(r.power),
                r.diverged ? 1 : 0, r.peak_unresolved ? 1 : 0, r.tail_exponent};
    });
}

repur_status repur_entropy_power(const repur_density* d, double p, repur_ext* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::entropy_power(d->value, repur::EntropyIndex::from_value(p))); });
}

repur_status repur_entropy_power_half(const repur_density* d, repur_ext* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::entropy_power_half(d->value)); });
}

repur_status repur_entropy_format(const repur_entropy_result* e, repur_format fmt, char** out) {
    REPUR_REQUIRE(e);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::EntropyResult r;
        r.index = repur::EntropyIndex::from_value(e->index);
        r.entropy_bits = from_c(e->entropy_bits);
        r.power = from_c(e->power);
        r.diverged = e->diverged != 0;
        r.peak_unresolved = e->peak_unresolved != 0;
        r.tail_exponent = e->tail_exponent;
        *out = dup_string(render(fmt, repur::entropy_csv, repur::entropy_json, r));
    });
}

repur_status repur_holder_conjugate(double p, double* out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::holder_conjugate(repur::EntropyIndex::from_value(p)).value(); });
}

/* uncertainty relations */

repur_status repur_conjugate_index(double r, double* t) {
    REPUR_REQUIRE(t);
    return guarded([&] { *t = repur::conjugate_index(r).t; });
}

repur_status repur_product(const repur_amplitude* psi, double r, double hbar, repur_row* out) {
    REPUR_REQUIRE(psi);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::repur_product(psi->value, r, hbar)); });
}

repur_status repur_product_densities(const repur_density* x, const repur_density* p, double r, double hbar,
                                     repur_row* out) {
    REPUR_REQUIRE(x);
    REPUR_REQUIRE(p);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::repur_row(x->value, p->value, r, hbar)); });
}

repur_status repur_default_r_grid(double* r, size_t capacity, size_t* count) {
    REPUR_REQUIRE(count);
    return guarded([&] {
        const auto grid = repur::default_r_grid();
        *count = grid.size();
        for (size_t k = 0; r != nullptr && k < grid.size() && k < capacity; ++k) r[k] = grid[k];
    });
}

repur_status repur_sweep(const repur_amplitude* psi, const double* r, size_t r_count, double hbar, unsigned threads,
                         const char* label, repur_table** out) {
    REPUR_REQUIRE(psi);
    REPUR_REQUIRE(out);
    return guarded([&] {
        auto table = repur::repur_sweep(psi->value, r_values(r, r_count), hbar, {threads});
        if (label) table.state_label = label;
        *out = new repur_table{std::move(table)};
    });
}

repur_status repur_sweep_densities(const repur_density* x, const repur_density* p, const double* r, size_t r_count,
                                   double hbar, unsigned threads, const char* label, repur_table** out) {
    REPUR_REQUIRE(x);
    REPUR_REQUIRE(p);
    REPUR_REQUIRE(out);
    return guarded([&] {
        auto table = repur::repur_sweep(x->value, p->value, r_values(r, r_count), hbar, {threads});
        if (label) table.state_label = label;
        *out = new repur_table{std::move(table)};
    });
}

void repur_table_free(repur_table* t) { delete t; }

size_t repur_table_rows(const repur_table* t) { return t ? t->value.rows.size() : 0; }

repur_status repur_table_row(const repur_table* t, size_t i, repur_row* out) {
    REPUR_REQUIRE(t);
    REPUR_REQUIRE(out);
    if (i >= t->value.rows.size()) {
        g_last_error = "row index out of range";
        return REPUR_E_OUT_OF_RANGE;
    }
    *out = to_c(t->value.rows[i]);
    return REPUR_OK;
}

repur_status repur_table_format(const repur_table* t, repur_format fmt, char** out) {
    REPUR_REQUIRE(t);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::table_csv, repur::table_json, t->value)); });
}

repur_status repur_vur_chain(const repur_amplitude* psi, double hbar, repur_vur* out) {
    REPUR_REQUIRE(psi);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::vur_chain(psi->value, hbar)); });
}

repur_status repur_vur_chain_densities(const repur_density* x, const repur_density* p, double hbar,
                                       repur_vur* out) {
    REPUR_REQUIRE(x);
    REPUR_REQUIRE(p);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::vur_chain(x->value, p->value, hbar)); });
}

repur_status repur_vur_format(const repur_vur* v, repur_format fmt, char** out) {
    REPUR_REQUIRE(v);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::VurChain c{from_c(v->sigma2_x), from_c(v->sigma2_p), from_c(v->variance_product),
                          v->shannon_product,  v->bound,            v->chain_ok != 0};
        *out = dup_string(render(fmt, repur::vur_csv, repur::vur_json, c));
    });
}

/* scans */

repur_status repur_scan_create(const repur_density* d, size_t bins, double span_bits, repur_scan** out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::ScanOptions opts;
        if (bins > 0) opts.bins = bins;
        if (span_bits > 0.0) opts.span_bits = span_bits;
        *out = new repur_scan{repur::information_scan(d->value, opts)};
    });
}

void repur_scan_free(repur_scan* s) { delete s; }

repur_status repur_scan_get_info(const repur_scan* s, repur_scan_info* out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    const auto& v = s->value;
    *out = {v.onset, v.bin_width, v.g.size(), v.populated_bins(), v.total_mass(), v.overflow_mass,
            v.dropped_samples};
    return REPUR_OK;
}

repur_status repur_scan_values(const repur_scan* s, double* x_bits, double* f, double* g, double* mass) {
    REPUR_REQUIRE(s);
    const auto& v = s->value;
    for (size_t k = 0; k < v.g.size(); ++k) {
        if (x_bits) x_bits[k] = v.x_grid[k];
        if (f) f[k] = v.f[k];
        if (g) g[k] = v.g[k];
        if (mass) mass[k] = v.mass[k];
    }
    return REPUR_OK;
}

repur_status repur_scan_peaks(const repur_scan* s, double rel_threshold, double* peaks, size_t capacity,
                              size_t* count) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(count);
    return guarded([&] {
        const auto found = repur::detect_peaks(s->value, rel_threshold > 0.0 ? rel_threshold : 1e-3);
        *count = found.size();
        for (size_t k = 0; peaks != nullptr && k < found.size() && k < capacity; ++k) peaks[k] = found[k];
    });
}

repur_status repur_scan_format(const repur_scan* s, repur_format fmt, char** out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::scan_csv, repur::scan_json, s->value)); });
}

repur_status repur_onset_point(const repur_density* d, double* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::onset_point(d->value); });
}

repur_status repur_laplace_consistency(const repur_density* d, const repur_scan* s, double p, double* lhs,
                                       double* rhs) {
    REPUR_REQUIRE(d);
    return guarded([&] {
        const auto c = s ? repur::laplace_consistency(d->value, s->value, p) : repur::laplace_consistency(d->value, p);
        if (lhs) *lhs = c.lhs;
        if (rhs) *rhs = c.rhs;
    });
}

repur_status repur_equimeasurable(const repur_density* a, const repur_density* b, double tol, int* out) {
    REPUR_REQUIRE(a);
    REPUR_REQUIRE(b);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::equimeasurable(a->value, b->value, tol) ? 1 : 0; });
}

/* cumulants */

repur_status repur_cumulants_gldf(const repur_density* d, int n_max, double delta, int richardson, unsigned threads,
                                  repur_cumulants** out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::GldfOptions opts;
        if (delta > 0.0) opts.delta = delta;
        opts.richardson = richardson != 0;
        opts.threads = threads;
        *out = new repur_cumulants{repur::cumulants_gldf(d->value, n_max, opts)};
    });
}

repur_status repur_cumulants_from_tower(const int* k, const double* powers, size_t count, double delta, int dim,
                                        int n_max, repur_cumulants** out) {
    REPUR_REQUIRE(out);
    if (count > 0) {
        REPUR_REQUIRE(k);
        REPUR_REQUIRE(powers);
    }
    return guarded([&] {
        std::vector<repur::TowerEntry> tower;
        for (size_t j = 0; j < count; ++j) tower.push_back({k[j], powers[j]});
        *out = new repur_cumulants{repur::cumulants_gldf(tower, delta, dim, n_max)};
    });
}

repur_status repur_cumulants_from_scan(const repur_scan* s, int n_max, repur_cumulants** out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = new repur_cumulants{repur::cumulants_from_scan(s->value, n_max)}; });
}

repur_status repur_cumulants_create(const double* kappa, size_t n, double delta, int dim, repur_cumulants** out) {
    REPUR_REQUIRE(kappa);
    REPUR_REQUIRE(out);
    return guarded([&] {
        if (n < 2) repur::fail(repur::ErrorCode::InvalidArgument, "a cumulant set needs at least kappa_1 and kappa_2");
        if (dim < 1) repur::fail(repur::ErrorCode::InvalidArgument, "dimension must be >= 1");
        repur::CumulantSet c;
        c.kappa.assign(kappa, kappa + n);
        c.delta = delta;
        c.dim = dim;
        *out = new repur_cumulants{std::move(c)};
    });
}

void repur_cumulants_free(repur_cumulants* c) { delete c; }

int repur_cumulants_order(const repur_cumulants* c) { return c ? c->value.order() : 0; }

repur_status repur_cumulants_get(const repur_cumulants* c, int n, double* out) {
    REPUR_REQUIRE(c);
    REPUR_REQUIRE(out);
    if (n < 1 || n > c->value.order()) {
        g_last_error = "cumulant order out of range";
        return REPUR_E_OUT_OF_RANGE;
    }
    *out = c->value(n);
    return REPUR_OK;
}

repur_status repur_cumulants_format(const repur_cumulants* c, repur_format fmt, char** out) {
    REPUR_REQUIRE(c);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::cumulants_csv, repur::cumulants_json, c->value)); });
}

repur_status repur_gaussian_reference_cumulant(double sigma, int n, double* out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::gaussian_reference_cumulants(sigma, n); });
}

repur_status repur_varentropy(const repur_density* d, double* out) {
    REPUR_REQUIRE(d);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::varentropy(d->value); });
}

repur_status repur_laguerre(int k, double delta, double x, double* out) {
    REPUR_REQUIRE(out);
    return guarded([&] { *out = repur::laguerre(k, delta, x); });
}

repur_status repur_reconstruct(const repur_cumulants* c, int order, const repur_scan* scan,
                               repur_reconstruction** out) {
    REPUR_REQUIRE(c);
    REPUR_REQUIRE(out);
    return guarded([&] {
        *out = new repur_reconstruction{scan ? repur::gram_charlier_reconstruct(c->value, order, scan->value.x_grid)
                                             : repur::gram_charlier_reconstruct(c->value, order)};
    });
}

void repur_reconstruction_free(repur_reconstruction* r) { delete r; }

repur_status repur_reconstruction_get_info(const repur_reconstruction* r, repur_reconstruction_info* out) {
    REPUR_REQUIRE(r);
    REPUR_REQUIRE(out);
    const auto& m = r->value.model;
    *out = {m.order, m.a, m.alpha, m.beta, m.exact ? 1 : 0, r->value.clipped_mass, r->value.g_reference.size()};
    return REPUR_OK;
}

repur_status repur_reconstruction_values(const repur_reconstruction* r, double* x_bits, double* reference,
                                         double* reconstructed) {
    REPUR_REQUIRE(r);
    const auto& v = r->value;
    for (size_t k = 0; k < v.g_reference.size(); ++k) {
        if (x_bits) x_bits[k] = v.x_grid[k];
        if (reference) reference[k] = v.g_reference[k];
        if (reconstructed) reconstructed[k] = v.g_reconstructed[k];
    }
    return REPUR_OK;
}

repur_status repur_reconstruction_format(const repur_reconstruction* r, repur_format fmt, char** out) {
    REPUR_REQUIRE(r);
    REPUR_REQUIRE(out);
    return guarded(
        [&] { *out = dup_string(render(fmt, repur::reconstruction_csv, repur::reconstruction_json, r->value)); });
}

/* tails */

repur_status repur_fit_power_tail(const repur_scan* s, double x_lo, double x_hi, repur_tail_fit* out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::fit_power_tail(s->value, x_lo, x_hi)); });
}

repur_status repur_fit_stretched_tail(const repur_scan* s, double x_lo, double x_hi, repur_tail_fit* out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = to_c(repur::fit_stretched_tail(s->value, x_lo, x_hi)); });
}

repur_status repur_classify_tail(const repur_scan* s, double upper_fraction, double clearance_bits, size_t min_bins,
                                 repur_tail_fit* out) {
    REPUR_REQUIRE(s);
    REPUR_REQUIRE(out);
    return guarded([&] {
        repur::ClassifyOptions opts;
        if (upper_fraction > 0.0) opts.upper_fraction = upper_fraction;
        if (clearance_bits > 0.0) opts.clearance_bits = clearance_bits;
        if (min_bins > 0) opts.min_bins = min_bins;
        *out = to_c(repur::classify_tail(s->value, opts));
    });
}

repur_status repur_tail_fit_format(const repur_tail_fit* f, repur_format fmt, char** out) {
    REPUR_REQUIRE(f);
    REPUR_REQUIRE(out);
    return guarded([&] { *out = dup_string(render(fmt, repur::tailfit_csv, repur::tailfit_json, from_c(*f))); });
}

}  // extern "C"

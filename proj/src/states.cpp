#include "repur/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "repur/error.hpp"
#include "repur/transform.hpp"

namespace repur {

namespace {

constexpr double kPi = std::numbers::pi;

template <std::size_t N>
double poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (std::size_t k = N - 1; k-- > 0;) r = r * x + c[k];
    return r;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
    }
}

}  // namespace

double bessel_k0(double u) {
    if (!(u > 0.0)) fail(ErrorCode::DomainError, "K0 needs u > 0");
    if (u <= 2.0) {
        // K0 = -(ln(u/2) + gamma) I0(u) + sum_k (u^2/4)^k / (k!)^2 H_k
        const double q = 0.25 * u * u;
        double term = 1.0, i0 = 1.0, s = 0.0, h = 0.0;
        for (int k = 1; k < 40; ++k) {
            term *= q / (static_cast<double>(k) * k);
            h += 1.0 / k;
            i0 += term;
            s += term * h;
            if (term * h < 1e-18 * s) break;
        }
        return -(std::log(0.5 * u) + std::numbers::egamma) * i0 + s;
    }
    // rational minimax fit in 1/u, Russon and Blair
    static const double P[] = {1.1600249425076035558e+02, 2.3444738764199315021e+03, 1.8321525870183537725e+04,
                               7.1557062783764037541e+04, 1.5097646353289914539e+05, 1.7398867902565686251e+05,
                               1.0577068948034021957e+05, 3.1075408980684392399e+04, 3.6832589957340267940e+03,
                               1.1394980557384778174e+02};
    static const double Q[] = {9.2556599177304839811e+01, 1.8821890840982713696e+03, 1.4847228371802360957e+04,
                               5.8824616785857027752e+04, 1.2689839587977598727e+05, 1.5144644673520157801e+05,
                               9.7418829762268075784e+04, 3.1474655750295278825e+04, 4.4329628889746408858e+03,
                               2.0013443064949242491e+02, 1.0};
    const double y = 1.0 / u;
    return std::exp(-u) / std::sqrt(u) * poly(P, y) / poly(Q, y);
}

SampledAmplitude gaussian_state(double sigma, double center, std::size_t n) {
    require_positive(sigma, "sigma");
    const Grid1D g = Grid1D::centered(center, 12.0 * sigma, next_power_of_two(std::max<std::size_t>(n, 2048)));
    std::vector<std::complex<double>> v(g.size());
    const double amp = std::pow(2.0 * kPi * sigma * sigma, -0.25);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double u = (g[k] - center) / sigma;
        v[k] = amp * std::exp(-0.25 * u * u);
    }
    return normalize(SampledAmplitude(g, std::move(v)));
}

double squeezed_variance_x(double zeta, double omega, double hbar) {
    const double N2 = 1.0 / (2.0 + 2.0 / std::sqrt(std::cosh(zeta)));
    return N2 * hbar / omega *
           (0.5 * (1.0 + std::exp(-2.0 * zeta)) + std::sqrt(1.0 / std::cosh(zeta)) * (1.0 - std::tanh(zeta)));
}

double squeezed_variance_p(double zeta, double omega, double hbar) {
    const double N2 = 1.0 / (2.0 + 2.0 / std::sqrt(std::cosh(zeta)));
    return N2 * hbar * omega *
           (0.5 * (1.0 + std::exp(2.0 * zeta)) + std::sqrt(1.0 / std::cosh(zeta)) * (1.0 + std::tanh(zeta)));
}

SqueezedState squeezed_superposition(double zeta, double omega, double hbar) {
    if (!(std::abs(zeta) <= 4.0)) fail(ErrorCode::OutOfRange, "|zeta| must be <= 4");
    require_positive(omega, "omega");
    require_positive(hbar, "hbar");
    // density widths of the two components in each quadrature
    const double sx = std::sqrt(hbar / (2.0 * omega));
    const double sp = std::sqrt(hbar * omega / 2.0);
    const double sx_min = std::min(sx, sx * std::exp(-zeta)), sx_max = std::max(sx, sx * std::exp(-zeta));
    const double sp_min = std::min(sp, sp * std::exp(zeta)), sp_max = std::max(sp, sp * std::exp(zeta));
    const double X = std::max(12.0 * sx_max, 8.0 * kPi * hbar / sp_min);
    const double dx = std::min(sx_min / 8.0, kPi * hbar / (12.0 * sp_max));
    const std::size_t n = next_power_of_two(static_cast<std::size_t>(std::ceil(2.0 * X / dx)));
    const Grid1D gx = Grid1D::centered(0.0, X, n);
    const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * gx.dx());
    const Grid1D gp(-static_cast<double>(n / 2) * dp, dp, n);

    const double N = 1.0 / std::sqrt(2.0 + 2.0 / std::sqrt(std::cosh(zeta)));
    const double ax = std::pow(omega / (kPi * hbar), 0.25) * N;
    const double ap = std::pow(1.0 / (kPi * hbar * omega), 0.25) * N;
    std::vector<std::complex<double>> psi(n), psihat(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = gx[k], p = gp[k];
        const double q = omega * x * x / (2.0 * hbar);
        psi[k] = ax * (std::exp(-q) + std::exp(0.5 * zeta) * std::exp(-std::exp(2.0 * zeta) * q));
        const double r = p * p / (2.0 * hbar * omega);
        psihat[k] = ap * (std::exp(-r) + std::exp(-0.5 * zeta) * std::exp(-std::exp(-2.0 * zeta) * r));
    }
    return {normalize(SampledAmplitude(gx, std::move(psi))), normalize(SampledAmplitude(gp, std::move(psihat))),
            squeezed_variance_x(zeta, omega, hbar), squeezed_variance_p(zeta, omega, hbar)};
}

CauchyState cauchy_pltwp(double gamma, double m, double hbar, CauchyOptions opts) {
    require_positive(gamma, "gamma");
    require_positive(hbar, "hbar");
    if (!is_power_of_two(opts.n)) fail(ErrorCode::InvalidArgument, "Cauchy grid size must be a power of two");
    const Grid1D gx = Grid1D::centered(m, opts.half_width_factor * gamma, opts.n);
    std::vector<std::complex<double>> psi(opts.n);
    const double amp = std::sqrt(gamma / kPi);
    for (std::size_t k = 0; k < opts.n; ++k) {
        const double u = gx[k] - m;
        psi[k] = amp / std::sqrt(gamma * gamma + u * u);
    }

    const std::size_t n = opts.n;
    const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * gx.dx());
    const Grid1D gp(-static_cast<double>(n / 2) * dp, dp, n);
    const double pref = std::sqrt(2.0 * gamma / (kPi * kPi * hbar));
    std::vector<std::complex<double>> ph(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = gp[k];
        double k0;
        if (k == n / 2) {
            const double h = gamma * dp / (2.0 * hbar);
            k0 = 1.0 - std::log(0.5 * h) - std::numbers::egamma;
        } else {
            k0 = bessel_k0(gamma * std::abs(p) / hbar);
        }
        ph[k] = std::polar(pref * k0, -m * p / hbar);
    }
    return {normalize(SampledAmplitude(gx, std::move(psi))), SampledAmplitude(gp, std::move(ph))};
}

double cauchy_momentum_variance(double gamma, double hbar) { return hbar * hbar / (8.0 * gamma * gamma); }

SampledDensity synthetic_tail_density(const PowerLawTail& tail, double core_sigma) {
    require_positive(core_sigma, "core sigma");
    if (!(tail.alpha > 0.0 && tail.alpha < 2.0)) fail(ErrorCode::InvalidArgument, "alpha must lie in (0, 2)");
    require_positive(tail.c, "tail constant");
    const double ys = 3.0 * core_sigma;
    const double e = 1.0 + tail.alpha;
    const double b = e / (2.0 * ys * ys);
    const double A = tail.c * std::pow(ys, -e) * std::exp(b * ys * ys);
    if (!std::isfinite(A) || !(A > 0.0)) fail(ErrorCode::SpliceFailure, "power-law splice is not finite");
    // extend until the tail reaches 2^-32
    const double Y = std::clamp(std::pow(tail.c * std::pow(2.0, 32.0), 1.0 / e), 20.0 * ys, 1e7 * core_sigma);
    const std::size_t n = next_power_of_two(std::max<std::size_t>(1 << 17, static_cast<std::size_t>(8.0 * Y / core_sigma)));
    const Grid1D g = Grid1D::centered(0.0, Y, std::min<std::size_t>(n, std::size_t{1} << 20));
    std::vector<double> v(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double y = std::abs(g[k]);
        v[k] = y < ys ? A * std::exp(-b * y * y) : tail.c * std::pow(y, -e);
    }
    return normalize(SampledDensity(g, std::move(v)));
}

SampledDensity synthetic_tail_density(const StretchedTail& tail, double core_sigma) {
    require_positive(core_sigma, "core sigma");
    require_positive(tail.a, "stretch exponent a");
    require_positive(tail.beta, "tail beta");
    require_positive(tail.d, "tail constant");
    const double ys = 3.0 * core_sigma;
    const double ln2 = std::numbers::ln2;
    const double b = tail.beta * tail.a * std::pow(ys, tail.a - 2.0) * ln2 / 2.0;
    const double A = tail.d * std::exp2(-tail.beta * std::pow(ys, tail.a)) * std::exp(b * ys * ys);
    if (!std::isfinite(A) || !(A > 0.0) || !std::isfinite(b)) {
        fail(ErrorCode::SpliceFailure, "stretched splice is not finite");
    }
    // extend until the tail reaches about 2^-48
    const double level = std::max(48.0 + std::log2(tail.d), 8.0);
    const double Y = std::max(std::pow(level / tail.beta, 1.0 / tail.a), 4.0 * ys);
    const Grid1D g = Grid1D::centered(0.0, Y, std::size_t{1} << 16);
    std::vector<double> v(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double y = std::abs(g[k]);
        v[k] = y < ys ? A * std::exp(-b * y * y) : tail.d * std::exp2(-tail.beta * std::pow(y, tail.a));
    }
    for (double x : v) {
        if (!std::isfinite(x)) fail(ErrorCode::SpliceFailure, "stretched density is not finite");
    }
    return normalize(SampledDensity(g, std::move(v)));
}

SampledDensity uniform_density(double length, std::size_t n) {
    require_positive(length, "length");
    return SampledDensity(Grid1D::spanning(0.0, length, n), std::vector<double>(n, 1.0 / length));
}

SampledDensity gaussian_density(double sigma, double center, std::size_t n) {
    require_positive(sigma, "sigma");
    const Grid1D g = Grid1D::spanning(center - 12.0 * sigma, center + 12.0 * sigma, n);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double u = (g[k] - center) / sigma;
        v[k] = std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * kPi));
    }
    return SampledDensity(g, std::move(v));
}

SampledDensity laplace_density(double lambda, std::size_t n) {
    require_positive(lambda, "lambda");
    const Grid1D g = Grid1D::centered(0.0, 40.0 / lambda, n);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = 0.5 * lambda * std::exp(-lambda * std::abs(g[k]));
    return normalize(SampledDensity(g, std::move(v)));
}

SampledDensity exponential_density(double lambda, std::size_t n) {
    require_positive(lambda, "lambda");
    const Grid1D g = Grid1D::spanning(0.0, 40.0 / lambda, n + 1);
    std::vector<double> v(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) v[k] = lambda * std::exp(-lambda * g[k]);
    return normalize(SampledDensity(g, std::move(v)));
}

SampledDensity cauchy_density(double gamma, double m, CauchyOptions opts) {
    return density_from_amplitude(cauchy_pltwp(gamma, m, 1.0, opts).psi);
}

namespace {

// pad > 1 widens the window with zeros, refining the conjugate grid.
Grid1D mixture_grid(const std::vector<MixtureComponent>& parts, std::size_t n, double pad = 1.0) {
    if (parts.empty()) fail(ErrorCode::InvalidArgument, "mixture needs at least one component");
    double lo = parts[0].mean, hi = parts[0].mean, smin = parts[0].sigma;
    for (const auto& c : parts) {
        require_positive(c.sigma, "component sigma");
        require_positive(c.weight, "component weight");
        lo = std::min(lo, c.mean - 12.0 * c.sigma);
        hi = std::max(hi, c.mean + 12.0 * c.sigma);
        smin = std::min(smin, c.sigma);
    }
    const double half = 0.5 * pad * (hi - lo);
    const std::size_t need = static_cast<std::size_t>(std::ceil(2.0 * half / (smin / 16.0)));
    n = next_power_of_two(std::max(n, need));
    return Grid1D::centered(0.5 * (lo + hi), half, n);
}

std::vector<double> mixture_values(const Grid1D& g, const std::vector<MixtureComponent>& parts) {
    std::vector<double> v(g.size(), 0.0);
    for (const auto& c : parts) {
        const double a = c.weight / (c.sigma * std::sqrt(2.0 * kPi));
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double u = (g[k] - c.mean) / c.sigma;
            v[k] += a * std::exp(-0.5 * u * u);
        }
    }
    return v;
}

}  // namespace

SampledDensity gaussian_mixture_density(const std::vector<MixtureComponent>& parts, std::size_t n) {
    const Grid1D g = mixture_grid(parts, n);
    return normalize(SampledDensity(g, mixture_values(g, parts)));
}

SampledAmplitude gaussian_mixture_state(const std::vector<MixtureComponent>& parts, std::size_t n) {
    const Grid1D g = mixture_grid(parts, n, 4.0);
    const auto v = mixture_values(g, parts);
    std::vector<std::complex<double>> a(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) a[k] = std::sqrt(v[k]);
    return normalize(SampledAmplitude(g, std::move(a)));
}

}  // namespace repur

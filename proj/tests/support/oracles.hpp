#pragma once

// Independent reference values for the test suites. Nothing here calls into
// the library: special functions come from their integral representations
// and everything else from closed forms.

#include <cmath>
#include <functional>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2e = 1.44269504088896340736;

// Composite Simpson on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2 == 1) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int k = 1; k < panels; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
    return s * h / 3.0;
}

// K0(u) = int_0^inf exp(-u cosh t) dt, truncated where the integrand drops
// below e^-745.
inline double k0(double u) {
    const double t_max = std::acosh(std::max(745.0 / u, 1.0)) + 1.0;
    return simpson([u](double t) { return std::exp(-u * std::cosh(t)); }, 0.0, t_max, 20000);
}

inline double gaussian_pdf(double x, double sigma) {
    return std::exp(-0.5 * x * x / (sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
}

inline double gaussian_cdf(double x, double sigma) { return 0.5 * (1.0 + std::erf(x / (sigma * std::sqrt(2.0)))); }

// P(chi^2_1 <= z).
inline double chi2_1_cdf(double z) { return z <= 0.0 ? 0.0 : std::erf(std::sqrt(0.5 * z)); }

// Mass of the Gaussian information PDF on [x0, x1] bits. With i the
// information value, z = 2(i - a) / log2 e is chi^2 with one degree of
// freedom and a = log2(2 pi sigma^2) / 2.
inline double gaussian_info_mass(double x0, double x1, double sigma) {
    const double a = 0.5 * std::log2(2.0 * kPi * sigma * sigma);
    return chi2_1_cdf(2.0 * (x1 - a) / kLog2e) - chi2_1_cdf(2.0 * (x0 - a) / kLog2e);
}

// Closed-form information PDF of a Gaussian.
inline double gaussian_info_pdf(double x, double sigma) {
    const double z = 2.0 * x / kLog2e - std::log(2.0 * kPi * sigma * sigma);
    if (z <= 0.0) return 0.0;
    return (2.0 / kLog2e) * std::exp(-0.5 * z) / std::sqrt(2.0 * kPi * z);
}

// Printed variances of the vacuum + squeezed vacuum superposition.
inline double squeezed_norm2(double zeta) { return 1.0 / (2.0 + 2.0 / std::sqrt(std::cosh(zeta))); }

inline double squeezed_var_x(double zeta, double omega, double hbar) {
    const double sech = 1.0 / std::cosh(zeta);
    return squeezed_norm2(zeta) * hbar / omega *
           (0.5 * (1.0 + std::exp(-2.0 * zeta)) + std::sqrt(sech) * (1.0 - std::tanh(zeta)));
}

inline double squeezed_var_p(double zeta, double omega, double hbar) {
    const double sech = 1.0 / std::cosh(zeta);
    return squeezed_norm2(zeta) * hbar * omega *
           (0.5 * (1.0 + std::exp(2.0 * zeta)) + std::sqrt(sech) * (1.0 + std::tanh(zeta)));
}

// Unnormalized squeezed position density.
inline double squeezed_density_x(double x, double zeta, double omega, double hbar) {
    const double a = std::exp(-omega * x * x / (2.0 * hbar)) +
                     std::exp(zeta / 2.0) * std::exp(-omega * std::exp(2.0 * zeta) * x * x / (2.0 * hbar));
    return std::sqrt(omega / (kPi * hbar)) * a * a;
}

// Shannon entropy in bits of common densities.
inline double gaussian_entropy_bits(double sigma) { return 0.5 * std::log2(2.0 * kPi * std::exp(1.0) * sigma * sigma); }
inline double cauchy_entropy_bits(double gamma) { return std::log2(4.0 * kPi * gamma); }

// Renyi entropy in bits of the Cauchy law with scale gamma:
// int F^p = pi^(1/2 - p) gamma^(1-p) Gamma(p - 1/2) / Gamma(p), p > 1/2.
inline double cauchy_renyi_bits(double p, double gamma) {
    if (p == 1.0) return cauchy_entropy_bits(gamma);
    const double log_int = (0.5 - p) * std::log(kPi) + (1.0 - p) * std::log(gamma) + std::lgamma(p - 0.5) -
                           std::lgamma(p);
    return log_int / ((1.0 - p) * std::log(2.0));
}

// Shannon entropy in nats of the Cauchy momentum density (2/pi^2) K0(|p|)^2
// at gamma = hbar = 1, integrated in s = ln p.
inline double cauchy_momentum_shannon_nats() {
    const double h = simpson(
        [](double s) {
            const double p = std::exp(s);
            const double k = k0(p);
            const double rho = 2.0 / (kPi * kPi) * k * k;
            return rho > 0.0 ? -rho * std::log(rho) * p : 0.0;
        },
        -40.0, std::log(60.0), 4000);
    return 2.0 * h;
}

}  // namespace oracle

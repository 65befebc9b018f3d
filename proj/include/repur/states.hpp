#pragma once

#include <cstddef>
#include <vector>

#include "repur/grid.hpp"

namespace repur {

/// Modified Bessel function of the second kind, order zero. DomainError for u <= 0.
double bessel_k0(double u);

/// Real Gaussian amplitude whose density has variance sigma^2. Grid covers
/// +/-12 sigma with n = 2048 (a power of two).
SampledAmplitude gaussian_state(double sigma, double center = 0.0, std::size_t n = 2048);

struct SqueezedState {
    SampledAmplitude psi;
    /// Closed-form momentum amplitude on the conjugate grid of `psi`.
    SampledAmplitude psihat;
    double var_x;
    double var_p;
};

/// Vacuum plus squeezed vacuum, built from the closed-form quadrature
/// amplitudes. OutOfRange for |zeta| > 4.
SqueezedState squeezed_superposition(double zeta, double omega = 1.0, double hbar = 1.0);

/// Closed-form variance product from the state's printed variances.
double squeezed_variance_x(double zeta, double omega, double hbar);
double squeezed_variance_p(double zeta, double omega, double hbar);

struct CauchyOptions {
    double half_width_factor = 1e4;  ///< half-width in units of gamma
    std::size_t n = std::size_t{1} << 17;
};

struct CauchyState {
    SampledAmplitude psi;
    /// e^{-imp/hbar} sqrt(2 gamma / pi^2 hbar) K0(gamma |p| / hbar) on the
    /// conjugate grid; the p = 0 sample holds the cell average of K0.
    SampledAmplitude psihat_analytic;
};

/// Power-law-tail wave packet with Cauchy density (scale gamma, median m).
CauchyState cauchy_pltwp(double gamma, double m = 0.0, double hbar = 1.0, CauchyOptions opts = {});

/// Exact Cauchy momentum variance hbar^2 / (8 gamma^2).
double cauchy_momentum_variance(double gamma, double hbar);

struct PowerLawTail {
    double alpha;  ///< F ~ c |y|^-(1+alpha)
    double c;
};
struct StretchedTail {
    double a;  ///< F ~ d 2^(-beta |y|^a)
    double beta;
    double d;
};

/// Gaussian core spliced with a C1 join at 3 core_sigma to the given tails,
/// then normalized. SpliceFailure when the join cannot be made.
SampledDensity synthetic_tail_density(const PowerLawTail& tail, double core_sigma = 1.0);
SampledDensity synthetic_tail_density(const StretchedTail& tail, double core_sigma = 1.0);

SampledDensity uniform_density(double length, std::size_t n = 1025);
SampledDensity gaussian_density(double sigma, double center = 0.0, std::size_t n = 4097);
SampledDensity laplace_density(double lambda, std::size_t n = std::size_t{1} << 16);
SampledDensity exponential_density(double lambda, std::size_t n = std::size_t{1} << 16);
SampledDensity cauchy_density(double gamma, double m = 0.0, CauchyOptions opts = {});

struct MixtureComponent {
    double weight;
    double mean;
    double sigma;
};

/// Normalized sum of Gaussian densities on a grid covering every component
/// to +/-12 sigma.
SampledDensity gaussian_mixture_density(const std::vector<MixtureComponent>& parts, std::size_t n = 4096);
/// sqrt of the mixture density, on a power-of-two grid four times wider than
/// the support so that the momentum grid resolves interference fringes.
SampledAmplitude gaussian_mixture_state(const std::vector<MixtureComponent>& parts, std::size_t n = 4096);

}  // namespace repur

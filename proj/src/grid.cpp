#include "repur/grid.hpp"

#include <cmath>
#include <string>

#include "repur/error.hpp"

namespace repur {

Grid1D::Grid1D(double x0, double dx, std::size_t n) : x0_(x0), dx_(dx), n_(n) {
    if (!std::isfinite(x0) || !std::isfinite(dx) || !(dx > 0.0)) {
        fail(ErrorCode::InvalidArgument, "grid spacing must be finite and positive");
    }
    if (n < kMinPoints) {
        fail(ErrorCode::InvalidArgument,
             "grid needs at least " + std::to_string(kMinPoints) + " points, got " + std::to_string(n));
    }
}

Grid1D Grid1D::centered(double center, double half_width, std::size_t n) {
    if (!(half_width > 0.0)) fail(ErrorCode::InvalidArgument, "half width must be positive");
    const double dx = 2.0 * half_width / static_cast<double>(n);
    return Grid1D(center - static_cast<double>(n / 2) * dx, dx, n);
}

Grid1D Grid1D::spanning(double lo, double hi, std::size_t n) {
    if (!(hi > lo)) fail(ErrorCode::InvalidArgument, "grid bounds must satisfy lo < hi");
    if (n < 2) fail(ErrorCode::InvalidArgument, "grid needs at least two points");
    return Grid1D(lo, (hi - lo) / static_cast<double>(n - 1), n);
}

SampledDensity::SampledDensity(Grid1D grid, std::vector<double> values, int dim)
    : grid_(grid), values_(std::move(values)), dim_(dim) {
    if (values_.size() != grid_.size()) {
        fail(ErrorCode::InvalidArgument, "density has " + std::to_string(values_.size()) +
                                             " values for a grid of " + std::to_string(grid_.size()));
    }
    if (dim_ < 1) fail(ErrorCode::InvalidArgument, "dimension must be >= 1");
    for (double v : values_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            fail(ErrorCode::InvalidArgument, "density values must be finite and nonnegative");
        }
    }
}

SampledAmplitude::SampledAmplitude(Grid1D grid, std::vector<std::complex<double>> values, int dim)
    : grid_(grid), values_(std::move(values)), dim_(dim) {
    if (values_.size() != grid_.size()) {
        fail(ErrorCode::InvalidArgument, "amplitude has " + std::to_string(values_.size()) +
                                             " values for a grid of " + std::to_string(grid_.size()));
    }
    if (dim_ < 1) fail(ErrorCode::InvalidArgument, "dimension must be >= 1");
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            fail(ErrorCode::InvalidArgument, "amplitude values must be finite");
        }
    }
}

SampledAmplitude::SampledAmplitude(Grid1D grid, std::span<const double> re, std::span<const double> im,
                                   int dim)
    : SampledAmplitude(grid,
                       [&] {
                           if (re.size() != im.size()) {
                               fail(ErrorCode::InvalidArgument, "re and im arrays differ in length");
                           }
                           std::vector<std::complex<double>> v(re.size());
                           for (std::size_t k = 0; k < re.size(); ++k) v[k] = {re[k], im[k]};
                           return v;
                       }(),
                       dim) {}

std::vector<double> quadrature_weights(const Grid1D& grid) {
    const std::size_t n = grid.size();
    const double h = grid.dx();
    std::vector<double> w(n, h);
    if (n % 2 == 1) {
        for (std::size_t k = 1; k + 1 < n; ++k) w[k] = (k % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
        w.front() = w.back() = h / 3.0;
    } else {
        w.front() = w.back() = 0.5 * h;
    }
    return w;
}

double integrate(const Grid1D& grid, std::span<const double> values) {
    if (values.size() != grid.size()) fail(ErrorCode::InvalidArgument, "size mismatch in integrate");
    const std::size_t n = values.size();
    const double h = grid.dx();
    if (n % 2 == 1) {
        double odd = 0.0, even = 0.0;
        for (std::size_t k = 1; k + 1 < n; ++k) (k % 2 == 1 ? odd : even) += values[k];
        return h / 3.0 * (values[0] + values[n - 1] + 4.0 * odd + 2.0 * even);
    }
    double s = 0.5 * (values[0] + values[n - 1]);
    for (std::size_t k = 1; k + 1 < n; ++k) s += values[k];
    return h * s;
}

double integrate(const SampledDensity& d) { return integrate(d.grid(), d.values()); }

SampledDensity normalize(const SampledDensity& d) {
    const double mass = integrate(d);
    if (!(mass > 1e-300)) fail(ErrorCode::ZeroMass, "density has no mass to normalize");
    std::vector<double> v(d.values().begin(), d.values().end());
    for (double& x : v) x /= mass;
    return SampledDensity(d.grid(), std::move(v), d.dim());
}

SampledAmplitude normalize(const SampledAmplitude& a) {
    const double norm = lp_norm(a, 2.0);
    if (!(norm * norm > 1e-300)) fail(ErrorCode::ZeroMass, "amplitude has zero norm");
    std::vector<std::complex<double>> v(a.values().begin(), a.values().end());
    for (auto& x : v) x /= norm;
    return SampledAmplitude(a.grid(), std::move(v), a.dim());
}

double lp_norm(const SampledAmplitude& a, double p) {
    if (!(p > 0.0)) fail(ErrorCode::NonPositiveOrder, "Lp norm needs p > 0");
    std::vector<double> mag(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double m = std::abs(a[k]);
        mag[k] = p == 2.0 ? m * m : std::pow(m, p);
    }
    return std::pow(integrate(a.grid(), mag), 1.0 / p);
}

SampledDensity density_from_amplitude(const SampledAmplitude& a) {
    std::vector<double> v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) v[k] = std::norm(a[k]);
    return SampledDensity(a.grid(), std::move(v), a.dim());
}

SampledAmplitude amplitude_from_density(const SampledDensity& d) {
    std::vector<std::complex<double>> v(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) v[k] = std::sqrt(d[k]);
    return SampledAmplitude(d.grid(), std::move(v), d.dim());
}

GridMoments grid_moments(const SampledDensity& d) {
    const auto w = quadrature_weights(d.grid());
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        m0 += w[k] * d[k];
        m1 += w[k] * d[k] * d.grid()[k];
    }
    const double mean = m1 / m0;
    double var = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        const double u = d.grid()[k] - mean;
        var += w[k] * d[k] * u * u;
    }
    return {mean, var / m0};
}

}  // namespace repur

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace repur {

/// Uniform 1-D grid: coordinates x0 + k*dx for k in [0, n).
class Grid1D {
public:
    static constexpr std::size_t kMinPoints = 8;

    Grid1D(double x0, double dx, std::size_t n);

    /// Grid of n points with a sample exactly on `center`, spanning
    /// [center - half_width, center + half_width). Used for FFT grids.
    static Grid1D centered(double center, double half_width, std::size_t n);
    /// n points from `lo` to `hi` inclusive.
    static Grid1D spanning(double lo, double hi, std::size_t n);

    double x0() const noexcept { return x0_; }
    double dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return n_; }
    double operator[](std::size_t k) const noexcept { return x0_ + static_cast<double>(k) * dx_; }
    double front() const noexcept { return x0_; }
    double back() const noexcept { return (*this)[n_ - 1]; }

private:
    double x0_;
    double dx_;
    std::size_t n_;
};

/// Nonnegative function on a grid (a PDF once normalized). `dim` is the
/// analytic dimension D entering the entropy-power prefactors; the samples
/// themselves are always one-dimensional.
class SampledDensity {
public:
    SampledDensity(Grid1D grid, std::vector<double> values, int dim = 1);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const noexcept { return values_[k]; }

private:
    Grid1D grid_;
    std::vector<double> values_;
    int dim_;
};

class SampledAmplitude {
public:
    SampledAmplitude(Grid1D grid, std::vector<std::complex<double>> values, int dim = 1);
    SampledAmplitude(Grid1D grid, std::span<const double> re, std::span<const double> im, int dim = 1);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const std::complex<double>> values() const noexcept { return values_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::complex<double>& operator[](std::size_t k) const noexcept { return values_[k]; }

private:
    Grid1D grid_;
    std::vector<std::complex<double>> values_;
    int dim_;
};

/// Composite Simpson weights when n is odd, trapezoid weights when n is even.
std::vector<double> quadrature_weights(const Grid1D& grid);

double integrate(const Grid1D& grid, std::span<const double> values);
double integrate(const SampledDensity& d);

/// Rescales to unit mass. Throws ZeroMass when the mass is <= 1e-300.
SampledDensity normalize(const SampledDensity& d);
/// Rescales to unit L2 norm. Throws ZeroMass for a vanishing amplitude.
SampledAmplitude normalize(const SampledAmplitude& a);

/// (integral |a|^p dx)^(1/p). Throws NonPositiveOrder for p <= 0.
double lp_norm(const SampledAmplitude& a, double p);

/// |a|^2 on the same grid; not renormalized.
SampledDensity density_from_amplitude(const SampledAmplitude& a);

/// sqrt(F) with zero phase.
SampledAmplitude amplitude_from_density(const SampledDensity& d);

/// Mean and variance of a normalized density by quadrature on the grid
/// (no tail extrapolation).
struct GridMoments {
    double mean;
    double variance;
};
GridMoments grid_moments(const SampledDensity& d);

}  // namespace repur

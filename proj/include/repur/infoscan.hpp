#pragma once

#include <cstddef>
#include <vector>

#include "repur/grid.hpp"

namespace repur {

struct ScanOptions {
    std::size_t bins = 1024;
    double span_bits = 40.0;
};

/// Distribution of the information value i = -log2 F(Y) for Y ~ F.
/// Bin k covers [onset + k bw, onset + (k+1) bw); x_grid holds the centers.
/// Mass beyond the window is folded into the last bin.
struct InformationScan {
    Grid1D x_grid{0.0, 1.0, 8};
    double onset = 0.0;
    double bin_width = 0.0;
    std::vector<double> f;         ///< cumulative mass at each bin's upper edge
    std::vector<double> g;         ///< mass / bin width
    std::vector<double> mass;      ///< per-bin probability
    std::vector<double> centroid;  ///< mass-weighted mean information per bin
    double overflow_mass = 0.0;    ///< part of the last bin that lies past the window
    std::size_t dropped_samples = 0;  ///< zero-density samples (i = +inf)

    double total_mass() const;
    /// Number of bins up to and including the last one with mass.
    std::size_t populated_bins() const;
};

/// Probability-weighted histogram of i over the grid. Each half-cell around a
/// sample is cut into sub-pieces along a quadratic interpolant of -log2 F;
/// a piece carries the mass of the interpolated density and is spread
/// uniformly in i across its range. InvalidArgument for bins < 64.
InformationScan information_scan(const SampledDensity& F, ScanOptions opts = {});

/// -log2(max F), in bits.
double onset_point(const SampledDensity& F);

struct LaplaceCheck {
    double lhs;  ///< integral g(x) 2^((1-p)x) dx
    double rhs;  ///< integral F^p
    double relative_error() const;
};

/// InvalidArgument unless p lies in (0, 2] and the scan has >= 512 bins.
LaplaceCheck laplace_consistency(const SampledDensity& F, const InformationScan& scan, double p);
LaplaceCheck laplace_consistency(const SampledDensity& F, double p);

/// Compares decreasing rearrangements as functions of Lebesgue measure, in
/// sup norm.
bool equimeasurable(const SampledDensity& F1, const SampledDensity& F2, double tol);

/// Bin centers of local maxima of g after a width-3 moving average, at least
/// rel_threshold times the largest smoothed value.
std::vector<double> detect_peaks(const InformationScan& scan, double rel_threshold = 1e-3);

}  // namespace repur

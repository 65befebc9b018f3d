#pragma once

#include <cstddef>
#include <string_view>

#include "repur/infoscan.hpp"

namespace repur {

enum class TailModel { PowerLaw, Stretched };

std::string_view to_string(TailModel m) noexcept;

/// Tail parameters recovered from the information PDF g(x). Both tails are
/// assumed identical, since g only exposes their sum.
struct TailFit {
    TailModel model = TailModel::PowerLaw;
    // power law: F ~ C |y|^-(1+alpha)
    double alpha = 0.0;
    double c_sum = 0.0;   ///< C+^(1/(1+alpha)) + C-^(1/(1+alpha))
    double c_side = 0.0;  ///< C for one side
    // stretched: F ~ D 2^(-beta |y|^a)
    double a = 0.0;
    double beta = 0.0;
    double d_side = 0.0;
    double d_sum = 0.0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double residual = 0.0;  ///< RMS of log2 g residuals
    std::size_t points = 0;
    int iterations = 0;
    bool ambiguous = false;
};

/// Least squares on log2 g = s x + b over bins in [x_lo, x_hi] with g > 0
/// (overflow bin excluded); alpha = -s/(1+s). InsufficientTail below 10
/// points, DegenerateFit when s is outside (-2/3, 0).
TailFit fit_power_tail(const InformationScan& scan, double x_lo, double x_hi);

/// Levenberg-Marquardt on log2 g for
///   g = 2^-x / (a beta^(1/a)) * 2 (x + log2 D)^(1/a - 1).
/// NoConvergence after 200 iterations.
TailFit fit_stretched_tail(const InformationScan& scan, double x_lo, double x_hi);

struct ClassifyOptions {
    double upper_fraction = 0.3;
    double clearance_bits = 5.0;
    std::size_t min_bins = 30;
};

/// Fits both models on the upper part of the populated bins and keeps the
/// smaller residual; `ambiguous` is set when the residuals differ by less
/// than 10%. InsufficientTail when the window has too few bins.
TailFit classify_tail(const InformationScan& scan, ClassifyOptions opts = {});

}  // namespace repur

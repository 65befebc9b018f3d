#pragma once

#include <limits>

#include "repur/ext_real.hpp"
#include "repur/grid.hpp"

namespace repur {

/// Renyi order: finite p > 0 or infinity. The infinity index is the single
/// object written both N_inf and N_inf/2 in the literature.
class EntropyIndex {
public:
    static EntropyIndex finite(double p);
    static EntropyIndex infinity() noexcept { return EntropyIndex(std::numeric_limits<double>::infinity()); }
    /// +inf maps to infinity(), anything else to finite().
    static EntropyIndex from_value(double p);

    bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }
    bool is_shannon() const noexcept { return p_ == 1.0; }
    /// The order itself; +inf for the infinity index.
    double value() const noexcept { return p_; }

    friend bool operator==(const EntropyIndex&, const EntropyIndex&) = default;

private:
    explicit EntropyIndex(double p) : p_(p) {}
    double p_;
};

struct EntropyResult {
    ExtReal entropy_bits;
    ExtReal power;
    EntropyIndex index = EntropyIndex::infinity();
    bool diverged = false;
    /// Infinity index only: the maximum sits on an unresolved cusp or
    /// singularity, so max F is effectively unbounded and N_inf = 0.
    bool peak_unresolved = false;
    /// Smallest fitted power-law exponent beta of F ~ |x|^-beta over both
    /// tails; NaN when neither tail looks algebraic.
    double tail_exponent = std::numeric_limits<double>::quiet_NaN();
};

/// Algebraic tail F ~ c R^-beta for R >= r_edge, with R measured from the
/// density's maximum.
struct PowerTail {
    bool present = false;
    double beta = 0.0;
    double c = 0.0;
    double r_edge = 0.0;
    double f_edge = 0.0;  ///< F at the edge sample, c r_edge^-beta
};

struct DensityTails {
    PowerTail left;
    PowerTail right;
    double min_beta() const noexcept;
};

/// Fits ln F against ln|x - x_peak| over the outer 10% of bins on each side.
/// A side counts as algebraic only when F is positive and strictly
/// decreasing outward there.
DensityTails estimate_tails(const SampledDensity& F);

EntropyResult evaluate_entropy(const SampledDensity& F, EntropyIndex idx);

/// Entropy in bits.
ExtReal renyi_entropy(const SampledDensity& F, EntropyIndex idx);
ExtReal entropy_power(const SampledDensity& F, EntropyIndex idx);

/// N_1/2 = (1/8 pi)(integral sqrt F)^4, valid for dim 1.
ExtReal entropy_power_half(const SampledDensity& F);

/// p -> p/(p-1); 1 <-> infinity. OutOfRange for p < 1.
EntropyIndex holder_conjugate(EntropyIndex idx);

}  // namespace repur

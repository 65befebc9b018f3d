#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "repur/ext_real.hpp"
#include "repur/grid.hpp"
#include "repur/renyi.hpp"

namespace repur {

/// Index pair of one REPUR, t = -r/(2r+1). r = -1/2 pairs with t = inf and
/// r = inf with t = -1/2. Both members are stored as doubles with +inf.
struct ConjugatePair {
    double r;
    double t;
};

/// OutOfRange unless r lies in [-1/2, inf].
ConjugatePair conjugate_index(double r);

struct RepurRow {
    double r = 0.0;
    double t = 0.0;
    ExtReal power_x;  ///< N_{1+t}(|psi|^2)
    ExtReal power_p;  ///< N_{1+r}(|psi_hat|^2)
    ExtReal product;
    ExtReal gap;  ///< product - hbar^2/4
    bool saturated = false;
};

struct RepurTable {
    std::vector<RepurRow> rows;
    double hbar = 1.0;
    std::string state_label;
};

/// Row for index r given both position and momentum densities.
RepurRow repur_row(const SampledDensity& x_density, const SampledDensity& p_density, double r, double hbar);

/// Transforms psi, then evaluates the row.
RepurRow repur_product(const SampledAmplitude& psi, double r, double hbar);

/// 41 values of 1+r log-spaced over [0.5, 100] (the first is r = -1/2),
/// plus r = 0 and r = inf, sorted.
std::vector<double> default_r_grid();

struct SweepOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

RepurTable repur_sweep(const SampledDensity& x_density, const SampledDensity& p_density,
                       const std::vector<double>& r_grid, double hbar, SweepOptions opts = {});
RepurTable repur_sweep(const SampledAmplitude& psi, const std::vector<double>& r_grid, double hbar,
                       SweepOptions opts = {});

struct VurChain {
    ExtReal sigma2_x;
    ExtReal sigma2_p;
    ExtReal variance_product;
    double shannon_product = 0.0;
    double bound = 0.0;
    bool chain_ok = false;
};

/// Variances are reported as +inf when a tail decays no faster than |x|^-3.
VurChain vur_chain(const SampledAmplitude& psi, double hbar);
VurChain vur_chain(const SampledDensity& x_density, const SampledDensity& p_density, double hbar);

/// Variance of a normalized density, +inf for tails with beta <= 3.
ExtReal density_variance(const SampledDensity& F);

/// Runs body(i) for i in [0, count) across up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace repur

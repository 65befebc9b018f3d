#pragma once

#include <vector>

#include "repur/grid.hpp"
#include "repur/infoscan.hpp"

namespace repur {

enum class CumulantSource { Gldf, Scan };

/// Cumulants of the information value in bits^n; kappa[0] is kappa_1.
struct CumulantSet {
    std::vector<double> kappa;
    double delta = 0.0;  ///< index resolution; 0 for scan-derived sets
    int dim = 1;
    CumulantSource source = CumulantSource::Gldf;

    double operator()(int n) const { return kappa.at(static_cast<std::size_t>(n - 1)); }
    int order() const noexcept { return static_cast<int>(kappa.size()); }
};

/// One entry N_{1+k delta} of an entropy-power tower.
struct TowerEntry {
    int k;
    double power;
};

/// Grunwald-Letnikov extraction:
///   kappa_n = (nD/2)(log2 e)^n / delta^(n-1) sum_k (-1)^k C(n-1,k) ln N_{1+k delta}
///             + (D/2)(log2 e)^n [(n-1)! + [n=1] ln 2 pi].
/// InsufficientTower when some k in [0, n_max) is missing, NonFinitePower for
/// N <= 0 or non-finite, OutOfRange for delta outside [1e-3, 0.1].
CumulantSet cumulants_gldf(const std::vector<TowerEntry>& powers, double delta, int dim, int n_max);

/// N_{1+k delta}(F) for k = 0 .. count-1, evaluated in parallel.
std::vector<TowerEntry> entropy_power_tower(const SampledDensity& F, double delta, int count, unsigned threads = 0);

struct GldfOptions {
    double delta = 0.01;
    /// 2 kappa(delta/2) - kappa(delta), cancelling the O(delta) bias.
    bool richardson = false;
    unsigned threads = 0;
};

CumulantSet cumulants_gldf(const SampledDensity& F, int n_max, GldfOptions opts = {});

/// Moment route: central moments of the scan's bin centroids, converted to
/// cumulants. InvalidArgument when the scan mass is below 1 - 1e-4.
CumulantSet cumulants_from_scan(const InformationScan& scan, int n_max);

/// kappa_2 of the information value, via the scan.
double varentropy(const SampledDensity& F);

/// kappa_n of a Gaussian with standard deviation sigma:
/// n = 1: (1/2) log2 e + (1/2) log2(2 pi sigma^2); n >= 2: (1/2)(log2 e)^n (n-1)!.
double gaussian_reference_cumulants(double sigma, int n);

/// Generalized Laguerre L_k^(delta)(x) by the three-term recurrence, k <= 12.
double laguerre(int k, double delta, double x);

/// Shifted-gamma reference G(x|a, 1/2, log2 e) with Gram-Charlier corrections.
struct GramCharlierModel {
    double a = 0.0;
    double alpha = 0.5;
    double beta = 0.0;
    /// c_2 .. c_order; c_4 includes the (kappa_2 - gamma_2)^2 / 8 cross term.
    std::vector<double> corrections;
    int order = 2;
    /// True only when every correction vanishes, i.e. the reference itself is
    /// the answer. A set truncated after kappa_2 != gamma_2 is never exact.
    bool exact = false;
};

/// OrderUnsupported unless order is 2, 3 or 4.
GramCharlierModel gram_charlier_model(const CumulantSet& kappa, int order);

double shifted_gamma_pdf(const GramCharlierModel& m, double x);
/// Pointwise value of the truncated series, before clipping.
double gram_charlier_value(const GramCharlierModel& m, double x);

struct Reconstruction {
    GramCharlierModel model;
    Grid1D x_grid{0.0, 1.0, 8};     ///< bin centers
    std::vector<double> g_reference;      ///< bin-averaged reference
    std::vector<double> g_reconstructed;  ///< bin-averaged series, negatives clipped
    double clipped_mass = 0.0;
};

/// Bin averages over [x0 - dx/2, x0 + dx/2] per bin, by 8-point Gauss-Legendre
/// in s with x = a + s^2.
Reconstruction gram_charlier_reconstruct(const CumulantSet& kappa, int order, const Grid1D& bins);
/// Uses 1024 bins over [a, a + 40].
Reconstruction gram_charlier_reconstruct(const CumulantSet& kappa, int order);

}  // namespace repur

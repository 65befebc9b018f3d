#include "repur/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "repur/error.hpp"
#include "repur/renyi.hpp"
#include "repur/repur.hpp"

namespace repur {

namespace {

constexpr double kLog2e = std::numbers::log2e;

double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

CumulantSet cumulants_gldf(const std::vector<TowerEntry>& powers, double delta, int dim, int n_max) {
    if (n_max < 1) fail(ErrorCode::InvalidArgument, "n_max must be >= 1");
    if (dim < 1) fail(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (!(delta >= 1e-3 && delta <= 0.1)) fail(ErrorCode::OutOfRange, "delta must lie in [1e-3, 0.1]");
    std::vector<double> logN(static_cast<std::size_t>(n_max), std::numeric_limits<double>::quiet_NaN());
    for (const auto& e : powers) {
        if (e.k < 0 || e.k >= n_max) continue;
        if (!(e.power > 0.0) || !std::isfinite(e.power)) {
            fail(ErrorCode::NonFinitePower, "N_{1+" + std::to_string(e.k) + "delta} is not finite and positive");
        }
        logN[static_cast<std::size_t>(e.k)] = std::log(e.power);
    }
    for (int k = 0; k < n_max; ++k) {
        if (std::isnan(logN[static_cast<std::size_t>(k)])) {
            fail(ErrorCode::InsufficientTower, "tower is missing N_{1+" + std::to_string(k) + "delta}");
        }
    }
    CumulantSet out;
    out.delta = delta;
    out.dim = dim;
    out.source = CumulantSource::Gldf;
    const double half_d = 0.5 * dim;
    for (int n = 1; n <= n_max; ++n) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += ((k % 2) ? -1.0 : 1.0) * binomial(n - 1, k) * logN[static_cast<std::size_t>(k)];
        }
        const double ln = std::pow(kLog2e, n);
        double kappa = n * half_d * ln / std::pow(delta, n - 1) * s;
        kappa += half_d * ln * (factorial(n - 1) + (n == 1 ? std::log(2.0 * std::numbers::pi) : 0.0));
        out.kappa.push_back(kappa);
    }
    return out;
}

std::vector<TowerEntry> entropy_power_tower(const SampledDensity& F, double delta, int count, unsigned threads) {
    std::vector<TowerEntry> tower(static_cast<std::size_t>(std::max(count, 0)));
    parallel_for(tower.size(), threads, [&](std::size_t k) {
        const auto N = entropy_power(F, EntropyIndex::finite(1.0 + static_cast<double>(k) * delta));
        tower[k] = {static_cast<int>(k), N.value()};
    });
    return tower;
}

CumulantSet cumulants_gldf(const SampledDensity& F, int n_max, GldfOptions opts) {
    const auto run = [&](double d) {
        return cumulants_gldf(entropy_power_tower(F, d, n_max, opts.threads), d, F.dim(), n_max);
    };
    CumulantSet coarse = run(opts.delta);
    if (!opts.richardson) return coarse;
    CumulantSet fine = run(0.5 * opts.delta);
    for (std::size_t k = 0; k < coarse.kappa.size(); ++k) coarse.kappa[k] = 2.0 * fine.kappa[k] - coarse.kappa[k];
    return coarse;
}

CumulantSet cumulants_from_scan(const InformationScan& scan, int n_max) {
    if (n_max < 1) fail(ErrorCode::InvalidArgument, "n_max must be >= 1");
    const double M = scan.total_mass();
    if (!(M >= 1.0 - 1e-4)) {
        fail(ErrorCode::InvalidArgument, "scan mass " + std::to_string(M) + " is below 1 - 1e-4");
    }
    double mean = 0.0;
    for (std::size_t k = 0; k < scan.mass.size(); ++k) mean += scan.mass[k] * scan.centroid[k];
    mean /= M;
    // moments about the mean; cumulants of order >= 2 are shift invariant
    std::vector<double> mu(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::size_t k = 0; k < scan.mass.size(); ++k) {
        if (!(scan.mass[k] > 0.0)) continue;
        const double u = scan.centroid[k] - mean;
        double pw = 1.0;
        for (int n = 0; n <= n_max; ++n) {
            mu[static_cast<std::size_t>(n)] += scan.mass[k] * pw;
            pw *= u;
        }
    }
    for (double& m : mu) m /= M;
    std::vector<double> kappa(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        double s = mu[static_cast<std::size_t>(n)];
        for (int m = 1; m < n; ++m) {
            s -= binomial(n - 1, m - 1) * kappa[static_cast<std::size_t>(m)] * mu[static_cast<std::size_t>(n - m)];
        }
        kappa[static_cast<std::size_t>(n)] = s;
    }
    CumulantSet out;
    out.source = CumulantSource::Scan;
    out.kappa.assign(kappa.begin() + 1, kappa.end());
    out.kappa[0] = mean;
    return out;
}

double varentropy(const SampledDensity& F) { return cumulants_from_scan(information_scan(F), 2)(2); }

double gaussian_reference_cumulants(double sigma, int n) {
    if (!(sigma > 0.0)) fail(ErrorCode::InvalidArgument, "sigma must be positive");
    if (n < 1) fail(ErrorCode::InvalidArgument, "cumulant order must be >= 1");
    if (n == 1) return 0.5 * kLog2e + 0.5 * std::log2(2.0 * std::numbers::pi * sigma * sigma);
    return 0.5 * std::pow(kLog2e, n) * factorial(n - 1);
}

double laguerre(int k, double delta, double x) {
    if (k < 0 || k > 12) fail(ErrorCode::InvalidArgument, "Laguerre order must lie in [0, 12]");
    double prev = 1.0;
    if (k == 0) return prev;
    double cur = 1.0 + delta - x;
    for (int n = 1; n < k; ++n) {
        const double next = ((2.0 * n + 1.0 + delta - x) * cur - (n + delta) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

GramCharlierModel gram_charlier_model(const CumulantSet& kappa, int order) {
    if (order < 2 || order > 4) {
        fail(ErrorCode::OrderUnsupported, "Gram-Charlier order must be 2, 3 or 4, got " + std::to_string(order));
    }
    if (kappa.order() < order) {
        fail(ErrorCode::InvalidArgument, "need kappa_1 .. kappa_" + std::to_string(order));
    }
    GramCharlierModel m;
    m.beta = kLog2e;
    m.alpha = 0.5;
    m.order = order;
    m.a = kappa(1) - m.alpha * m.beta;
    const auto gamma = [&](int n) { return m.alpha * std::pow(m.beta, n) * factorial(n - 1); };
    const double d2 = kappa(2) - gamma(2);
    m.corrections.push_back(d2 / 2.0);
    if (order >= 3) m.corrections.push_back((kappa(3) - gamma(3)) / 6.0);
    if (order >= 4) m.corrections.push_back((kappa(4) - gamma(4)) / 24.0 + d2 * d2 / 8.0);
    m.exact = true;
    for (int n = 2; n <= order; ++n) {
        if (std::abs(kappa(n) - gamma(n)) > 1e-12 * gamma(n)) m.exact = false;
    }
    return m;
}

double shifted_gamma_pdf(const GramCharlierModel& m, double x) {
    const double u = x - m.a;
    if (!(u > 0.0)) return 0.0;
    return std::pow(u, m.alpha - 1.0) * std::exp(-u / m.beta) / (std::tgamma(m.alpha) * std::pow(m.beta, m.alpha));
}

double gram_charlier_value(const GramCharlierModel& m, double x) {
    const double G = shifted_gamma_pdf(m, x);
    if (G == 0.0) return 0.0;
    const double u = x - m.a;
    double series = 1.0;
    for (int k = 2; k <= m.order; ++k) {
        const double c = m.corrections[static_cast<std::size_t>(k - 2)];
        const double sign = (k % 2) ? -1.0 : 1.0;
        series += sign * c * factorial(k) * std::pow(u, -k) * laguerre(k, -0.5 - k, u / m.beta);
    }
    return G * series;
}

namespace {

constexpr double kGlNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066238535047,
                                  0.3626837833783620, 0.3626837833783620, 0.3137066238535047,
                                  0.2223810344533745, 0.1012285362903763};

// mean of h over [lo, hi] with x = a + s^2
template <class H>
double bin_average(const GramCharlierModel& m, double lo, double hi, H h) {
    const double s0 = std::sqrt(std::max(lo - m.a, 0.0));
    const double s1 = std::sqrt(std::max(hi - m.a, 0.0));
    if (!(s1 > s0)) return 0.0;
    const double c = 0.5 * (s0 + s1), r = 0.5 * (s1 - s0);
    double sum = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double s = c + r * kGlNodes[j];
        sum += kGlWeights[j] * h(m.a + s * s) * 2.0 * s;
    }
    return sum * r / (hi - lo);
}

}  // namespace

Reconstruction gram_charlier_reconstruct(const CumulantSet& kappa, int order, const Grid1D& bins) {
    Reconstruction out;
    out.model = gram_charlier_model(kappa, order);
    out.x_grid = bins;
    const double bw = bins.dx();
    out.g_reference.resize(bins.size());
    out.g_reconstructed.resize(bins.size());
    for (std::size_t k = 0; k < bins.size(); ++k) {
        const double lo = bins[k] - 0.5 * bw, hi = bins[k] + 0.5 * bw;
        out.g_reference[k] = bin_average(out.model, lo, hi, [&](double x) { return shifted_gamma_pdf(out.model, x); });
        double g = bin_average(out.model, lo, hi, [&](double x) { return gram_charlier_value(out.model, x); });
        if (!std::isfinite(g)) g = 0.0;
        if (g < 0.0) {
            out.clipped_mass += -g * bw;
            g = 0.0;
        }
        out.g_reconstructed[k] = g;
    }
    return out;
}

Reconstruction gram_charlier_reconstruct(const CumulantSet& kappa, int order) {
    const double a = kappa.order() >= 1 ? kappa(1) - 0.5 * kLog2e : 0.0;
    const double bw = 40.0 / 1024.0;
    return gram_charlier_reconstruct(kappa, order, Grid1D(a + 0.5 * bw, bw, 1024));
}

}  // namespace repur

#include "repur/repur.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "repur/error.hpp"
#include "repur/transform.hpp"

namespace repur {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EntropyIndex index_from_offset(double s) {
    // index 1 + s for s in [-1/2, inf]
    if (s == kInf) return EntropyIndex::infinity();
    return EntropyIndex::finite(1.0 + s);
}

}  // namespace

ConjugatePair conjugate_index(double r) {
    if (std::isnan(r) || r < -0.5) fail(ErrorCode::OutOfRange, "r must lie in [-1/2, inf]");
    if (r == -0.5) return {r, kInf};
    if (r == kInf) return {r, -0.5};
    const double t = -r / (2.0 * r + 1.0);
    return {r, t == 0.0 ? 0.0 : t};
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

RepurRow repur_row(const SampledDensity& x_density, const SampledDensity& p_density, double r, double hbar) {
    const ConjugatePair pair = conjugate_index(r);
    RepurRow row;
    row.r = pair.r;
    row.t = pair.t;
    row.power_x = evaluate_entropy(x_density, index_from_offset(pair.t)).power;
    row.power_p = evaluate_entropy(p_density, index_from_offset(pair.r)).power;
    row.product = row.power_x * row.power_p;
    const double bound = 0.25 * hbar * hbar;
    row.gap = row.product - bound;
    row.saturated = row.product.is_finite() && std::abs(row.product.value() - bound) <= 1e-3 * bound;
    return row;
}

RepurRow repur_product(const SampledAmplitude& psi, double r, double hbar) {
    const auto psihat = fourier_conjugate(psi, hbar);
    return repur_row(normalize(density_from_amplitude(psi)), normalize(density_from_amplitude(psihat)), r, hbar);
}

std::vector<double> default_r_grid() {
    std::vector<double> r;
    const double lo = std::log10(0.5), hi = std::log10(100.0);
    r.push_back(-0.5);
    for (int k = 1; k < 41; ++k) r.push_back(std::pow(10.0, lo + (hi - lo) * k / 40.0) - 1.0);
    r.push_back(0.0);
    r.push_back(kInf);
    std::sort(r.begin(), r.end());
    return r;
}

RepurTable repur_sweep(const SampledDensity& x_density, const SampledDensity& p_density,
                       const std::vector<double>& r_grid, double hbar, SweepOptions opts) {
    std::vector<double> rs = r_grid;
    for (double r : rs) conjugate_index(r);
    std::sort(rs.begin(), rs.end());
    RepurTable table;
    table.hbar = hbar;
    table.rows.resize(rs.size());
    parallel_for(rs.size(), opts.threads,
                 [&](std::size_t i) { table.rows[i] = repur_row(x_density, p_density, rs[i], hbar); });
    return table;
}

RepurTable repur_sweep(const SampledAmplitude& psi, const std::vector<double>& r_grid, double hbar,
                       SweepOptions opts) {
    const auto psihat = fourier_conjugate(psi, hbar);
    return repur_sweep(normalize(density_from_amplitude(psi)), normalize(density_from_amplitude(psihat)), r_grid,
                       hbar, opts);
}

ExtReal density_variance(const SampledDensity& F) {
    const DensityTails tails = estimate_tails(F);
    const double b = tails.min_beta();
    if (!std::isnan(b) && b <= 3.0) return ExtReal::pos_inf();
    return ExtReal::finite(grid_moments(F).variance);
}

VurChain vur_chain(const SampledDensity& x_density, const SampledDensity& p_density, double hbar) {
    VurChain c;
    c.sigma2_x = density_variance(x_density);
    c.sigma2_p = density_variance(p_density);
    c.variance_product = c.sigma2_x * c.sigma2_p;
    const auto nx = entropy_power(x_density, EntropyIndex::finite(1.0));
    const auto np = entropy_power(p_density, EntropyIndex::finite(1.0));
    c.shannon_product = (nx * np).value();
    c.bound = 0.25 * hbar * hbar;
    const double slack = 1.0 - 1e-4;
    const bool upper = c.variance_product.kind() == ExtReal::Kind::PosInf ||
                       (c.variance_product.is_finite() && c.variance_product.value() >= c.shannon_product * slack);
    c.chain_ok = upper && c.shannon_product >= c.bound * slack;
    return c;
}

VurChain vur_chain(const SampledAmplitude& psi, double hbar) {
    const auto psihat = fourier_conjugate(psi, hbar);
    return vur_chain(normalize(density_from_amplitude(psi)), normalize(density_from_amplitude(psihat)), hbar);
}

}  // namespace repur

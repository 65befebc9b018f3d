#include "repur/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "repur/error.hpp"

namespace repur {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) {
        fail(ErrorCode::InvalidArgument, "FFT length " + std::to_string(n) + " is not a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        std::vector<std::complex<double>> w(half);
        for (std::size_t k = 0; k < half; ++k) {
            w[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(len));
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + half] * w[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

namespace {

// out_j = dy/sqrt(2 pi hbar) * sum_k v_k exp(s i (y0 + k dy)(z0 + j dz)/hbar)
// with dz = 2 pi hbar/(n dy).
std::vector<std::complex<double>> conjugate(const SampledAmplitude& in, double hbar, double z0,
                                            double s) {
    const std::size_t n = in.size();
    const double y0 = in.grid().x0();
    const double dy = in.grid().dx();
    const double dz = 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * dy);
    std::vector<std::complex<double>> buf(in.values().begin(), in.values().end());
    for (std::size_t k = 0; k < n; ++k) {
        buf[k] *= std::polar(1.0, s * static_cast<double>(k) * dy * z0 / hbar);
    }
    fft(buf, s > 0);
    const double scale = dy / std::sqrt(2.0 * std::numbers::pi * hbar);
    for (std::size_t j = 0; j < n; ++j) {
        buf[j] *= scale * std::polar(1.0, s * (y0 * z0 + y0 * static_cast<double>(j) * dz) / hbar);
    }
    return buf;
}

void check_edges(const std::vector<std::complex<double>>& v) {
    const std::size_t n = v.size();
    const std::size_t edge = std::max<std::size_t>(1, n / 100);
    double total = 0.0, outer = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double m = std::norm(v[k]);
        total += m;
        if (k < edge || k >= n - edge) outer += m;
    }
    if (outer > 1e-8 * total) {
        fail(ErrorCode::GridTooCoarse, "conjugate grid edge holds " + std::to_string(outer / total) +
                                           " of the mass; refine dx");
    }
}

void check_hbar(double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) fail(ErrorCode::InvalidArgument, "hbar must be positive");
}

}  // namespace

SampledAmplitude fourier_conjugate(const SampledAmplitude& psi, double hbar, TransformOptions opts) {
    check_hbar(hbar);
    const std::size_t n = psi.size();
    const double dp = 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * psi.grid().dx());
    const double p0 = -static_cast<double>(n / 2) * dp;
    auto out = conjugate(psi, hbar, p0, -1.0);
    if (opts.edge_check) check_edges(out);
    return SampledAmplitude(Grid1D(p0, dp, n), std::move(out), psi.dim());
}

SampledAmplitude fourier_inverse(const SampledAmplitude& psihat, double hbar, std::optional<double> x0,
                                 TransformOptions opts) {
    check_hbar(hbar);
    const std::size_t n = psihat.size();
    const double dx = 2.0 * std::numbers::pi * hbar / (static_cast<double>(n) * psihat.grid().dx());
    const double origin = x0.value_or(-static_cast<double>(n / 2) * dx);
    auto out = conjugate(psihat, hbar, origin, 1.0);
    if (opts.edge_check) check_edges(out);
    return SampledAmplitude(Grid1D(origin, dx, n), std::move(out), psihat.dim());
}

SampledAmplitude beckner_rescale(const SampledAmplitude& psi, double hbar) {
    check_hbar(hbar);
    const double s = std::sqrt(2.0 * std::numbers::pi * hbar);
    const double amp = std::sqrt(s);
    std::vector<std::complex<double>> v(psi.values().begin(), psi.values().end());
    for (auto& z : v) z *= amp;
    return SampledAmplitude(Grid1D(psi.grid().x0() / s, psi.grid().dx() / s, psi.size()), std::move(v),
                            psi.dim());
}

SampledAmplitude beckner_unrescale(const SampledAmplitude& f, double hbar) {
    check_hbar(hbar);
    const double s = std::sqrt(2.0 * std::numbers::pi * hbar);
    const double amp = 1.0 / std::sqrt(s);
    std::vector<std::complex<double>> v(f.values().begin(), f.values().end());
    for (auto& z : v) z *= amp;
    return SampledAmplitude(Grid1D(f.grid().x0() * s, f.grid().dx() * s, f.size()), std::move(v), f.dim());
}

}  // namespace repur

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "repur/error.hpp"
#include "repur/grid.hpp"
#include "repur/renyi.hpp"
#include "repur/states.hpp"
#include "repur/transform.hpp"

using namespace repur;

namespace {

double l2_distance(const SampledAmplitude& a, const SampledAmplitude& b) {
    std::vector<double> d(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) d[k] = std::norm(a[k] - b[k]);
    return std::sqrt(integrate(a.grid(), d));
}

SampledAmplitude shifted(const SampledAmplitude& psi, double a) {
    // Same samples, grid moved by a.
    return SampledAmplitude(Grid1D(psi.grid().x0() + a, psi.grid().dx(), psi.size()),
                            std::vector<std::complex<double>>(psi.values().begin(), psi.values().end()));
}

std::size_t nearest(const Grid1D& g, double x) {
    return static_cast<std::size_t>(std::lround((x - g.x0()) / g.dx()));
}

}  // namespace

TEST_CASE("fft matches a direct DFT") {
    std::vector<std::complex<double>> v(16);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = {std::sin(0.3 * k) + 0.1 * k, std::cos(0.7 * k)};
    auto w = v;
    fft(w);
    for (std::size_t j = 0; j < v.size(); ++j) {
        std::complex<double> s = 0;
        for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * std::polar(1.0, -2.0 * oracle::kPi * j * k / 16.0);
        CHECK(std::abs(w[j] - s) <= 1e-12);
    }
    std::vector<std::complex<double>> bad(12);
    CHECK_THROWS_AS(fft(bad), Error);
    CHECK(next_power_of_two(1025) == 2048);
}

TEST_CASE("Gaussian Fourier pair") {
    for (double sigma : {0.5, 1.0, 3.0}) {
        const auto psi = gaussian_state(sigma);
        const auto psihat = fourier_conjugate(psi, 1.0);
        const auto m = grid_moments(density_from_amplitude(psihat));
        CHECK(m.mean == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(m.variance == doctest::Approx(1.0 / (4.0 * sigma * sigma)).epsilon(1e-8));
        CHECK(psihat.grid().dx() == doctest::Approx(2.0 * oracle::kPi / (psi.size() * psi.grid().dx())));
    }
}

TEST_CASE("Parseval and round trip") {
    const auto psi = gaussian_mixture_state({{0.6, -3.0, 1.0}, {0.4, 2.0, 0.7}});
    for (double hbar : {1.0, 0.25}) {
        const auto psihat = fourier_conjugate(psi, hbar);
        CHECK(std::abs(lp_norm(psihat, 2.0) - lp_norm(psi, 2.0)) <= 1e-9);
        const auto back = fourier_inverse(psihat, hbar, psi.grid().x0());
        CHECK(back.grid().x0() == doctest::Approx(psi.grid().x0()));
        CHECK(l2_distance(back, psi) <= 1e-9);
    }
}

TEST_CASE("plane-wave phase translates the momentum amplitude") {
    const auto psi = gaussian_state(1.0);
    const auto psihat = fourier_conjugate(psi, 1.0);
    const double dp = psihat.grid().dx();
    const int shift = 40;
    const double p0 = shift * dp;
    std::vector<std::complex<double>> boosted(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) boosted[k] = psi[k] * std::polar(1.0, p0 * psi.grid()[k]);
    const auto moved = fourier_conjugate(SampledAmplitude(psi.grid(), boosted), 1.0);
    for (std::size_t k = 200; k + 200 < psihat.size(); k += 7) {
        CHECK(std::abs(moved[k + shift]) == doctest::Approx(std::abs(psihat[k])).epsilon(1e-9));
    }
}

TEST_CASE("position shift leaves the momentum density unchanged") {
    const auto psi = gaussian_mixture_state({{0.5, -1.0, 0.8}, {0.5, 1.5, 0.6}});
    const auto a = density_from_amplitude(fourier_conjugate(psi, 1.0));
    for (int k : {1, 5}) {
        const auto b = density_from_amplitude(fourier_conjugate(shifted(psi, 3.0 * psi.grid().dx() * k), 1.0));
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a[j] - b[j]) <= 1e-12 * (1.0 + a[j]));
        for (double p : {0.5, 1.0, 2.0, HUGE_VAL}) {
            const auto idx = EntropyIndex::from_value(p);
            CHECK(entropy_power(b, idx).value() == doctest::Approx(entropy_power(a, idx).value()).epsilon(1e-12));
        }
    }
}

TEST_CASE("Cauchy amplitude against the K0 closed form") {
    const auto state = cauchy_pltwp(1.0, 0.0, 1.0);
    const auto psihat = fourier_conjugate(state.psi, 1.0);
    const auto& grid = psihat.grid();
    for (double p : {0.5, 1.0, 2.0}) {
        const std::size_t k = nearest(grid, p);
        const double pk = grid[k];
        const double want = std::sqrt(2.0 / (oracle::kPi * oracle::kPi)) * oracle::k0(std::abs(pk));
        CHECK(std::abs(std::abs(psihat[k]) - want) / want <= 1e-4);
        CHECK(std::abs(state.psihat_analytic[k]) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("Cauchy amplitude with nonzero median carries the phase") {
    const auto state = cauchy_pltwp(1.0, 2.0, 1.0);
    const auto psihat = fourier_conjugate(state.psi, 1.0);
    const std::size_t k = nearest(psihat.grid(), 1.0);
    const double p = psihat.grid()[k];
    const auto expected_phase = std::polar(1.0, -2.0 * p);
    const auto ratio = psihat[k] / std::abs(psihat[k]);
    CHECK(std::abs(ratio - expected_phase) <= 1e-3);
}

TEST_CASE("edge mass triggers GridTooCoarse") {
    // A spike far narrower than the grid spacing can resolve in momentum.
    const auto g = Grid1D::centered(0.0, 12.8, 256);
    std::vector<std::complex<double>> v(256);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::exp(-g[k] * g[k] / (2.0 * 0.01 * 0.01));
    const SampledAmplitude spike(g, v);
    try {
        fourier_conjugate(spike, 1.0);
        FAIL("expected GridTooCoarse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GridTooCoarse);
    }
    CHECK_NOTHROW(fourier_conjugate(spike, 1.0, {false}));
}

TEST_CASE("Beckner rescaling") {
    const auto psi = gaussian_state(1.3);
    SUBCASE("identity at hbar = 1/(2 pi)") {
        const auto f = beckner_rescale(psi, 1.0 / (2.0 * oracle::kPi));
        CHECK(f.grid().x0() == doctest::Approx(psi.grid().x0()).epsilon(1e-14));
        CHECK(f.grid().dx() == doctest::Approx(psi.grid().dx()).epsilon(1e-14));
        for (std::size_t k = 0; k < psi.size(); k += 31) CHECK(std::abs(f[k] - psi[k]) <= 1e-14);
    }
    SUBCASE("Gaussian width shrinks by sqrt(2 pi hbar)") {
        const auto f = beckner_rescale(psi, 1.0);
        CHECK(std::abs(lp_norm(f, 2.0) - 1.0) <= 1e-9);
        const double want_sigma = 1.3 / std::sqrt(2.0 * oracle::kPi);
        CHECK(std::sqrt(grid_moments(density_from_amplitude(f)).variance) == doctest::Approx(want_sigma).epsilon(1e-9));
    }
    SUBCASE("round trip") {
        for (double hbar : {1.0, 0.05, 7.0}) {
            const auto back = beckner_unrescale(beckner_rescale(psi, hbar), hbar);
            CHECK(back.grid().x0() == doctest::Approx(psi.grid().x0()).epsilon(1e-12));
            for (std::size_t k = 0; k < psi.size(); ++k) CHECK(std::abs(back[k] - psi[k]) <= 1e-12);
        }
    }
}

TEST_CASE("entropy shift under Beckner rescaling") {
    // I_p(|f|^2) = I_p(|psi_hat|^2) - (D/2) log2(2 pi hbar).
    for (double hbar : {1.0, 0.3}) {
        const SampledAmplitude states[] = {gaussian_state(1.0), cauchy_pltwp(1.0, 0.0, hbar).psi};
        for (const auto& psi : states) {
            const auto psihat = fourier_conjugate(psi, hbar);
            const auto f = beckner_rescale(psihat, hbar);
            const auto dhat = density_from_amplitude(psihat);
            const auto df = density_from_amplitude(f);
            for (double p : {0.75, 1.0, 1.5, 2.0}) {
                const auto idx = EntropyIndex::finite(p);
                const double lhs = renyi_entropy(df, idx).value();
                const double rhs = renyi_entropy(dhat, idx).value() - 0.5 * std::log2(2.0 * oracle::kPi * hbar);
                CHECK(std::abs(lhs - rhs) <= 1e-4);
            }
        }
    }
}

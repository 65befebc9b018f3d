#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "repur/error.hpp"
#include "repur/grid.hpp"
#include "repur/repur.hpp"
#include "repur/states.hpp"
#include "repur/tails.hpp"
#include "repur/transform.hpp"

using namespace repur;

namespace {

double rel(double a, double b) { return std::abs(a / b - 1.0); }

void check_code(ErrorCode want, auto&& fn) {
    try {
        fn();
        FAIL("expected ", to_string(want));
    } catch (const Error& e) {
        CHECK(e.code() == want);
    }
}

double max_value(const SampledDensity& F) { return *std::max_element(F.values().begin(), F.values().end()); }

}  // namespace

TEST_CASE("bessel_k0 against the integral representation") {
    for (double u : {1e-3, 0.01, 0.1, 0.5, 1.0, 1.99, 2.0, 2.01, 3.0, 5.0, 10.0, 30.0, 60.0}) {
        CHECK(rel(bessel_k0(u), oracle::k0(u)) <= 1e-9);
    }
    CHECK(bessel_k0(1.0) == doctest::Approx(0.421024438).epsilon(1e-9));
    CHECK(bessel_k0(0.1) == doctest::Approx(2.427069).epsilon(1e-6));
}

TEST_CASE("bessel_k0 asymptotics") {
    // e^u sqrt(2u/pi) K0(u) = 1 - 1/(8u) + 9/(2 (8u)^2) - 225/(6 (8u)^3) + ...
    const double u = 50.0;
    const double lead = bessel_k0(u) * std::exp(u) * std::sqrt(2.0 * u / oracle::kPi);
    const double z = 8.0 * u;
    const double series = 1.0 - 1.0 / z + 9.0 / (2.0 * z * z) - 225.0 / (6.0 * z * z * z);
    CHECK(std::abs(lead - series) <= 1e-6);
    CHECK(std::abs(lead - 1.0) <= 3e-3);
    check_code(ErrorCode::DomainError, [] { bessel_k0(0.0); });
    check_code(ErrorCode::DomainError, [] { bessel_k0(-1.0); });
}

TEST_CASE("Gaussian state") {
    const auto psi = gaussian_state(1.0);
    CHECK(psi.size() >= 2048);
    CHECK(psi.grid().back() >= 11.9);
    const auto m = grid_moments(density_from_amplitude(psi));
    CHECK(std::abs(m.variance - 1.0) <= 1e-8);
    CHECK(std::abs(m.mean) <= 1e-12);
    const auto p = grid_moments(density_from_amplitude(fourier_conjugate(psi, 1.0)));
    CHECK(std::abs(p.variance - 0.25) <= 1e-6);
    const auto shifted = grid_moments(density_from_amplitude(gaussian_state(0.5, 3.0)));
    CHECK(shifted.mean == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("squeezed superposition") {
    SUBCASE("closed-form variances") {
        for (double zeta : {-1.0, 0.0, 1.0, 2.0, 3.0}) {
            for (double omega : {1.0, 2.5}) {
                const auto s = squeezed_superposition(zeta, omega, 1.0);
                const double vx = oracle::squeezed_var_x(zeta, omega, 1.0);
                const double vp = oracle::squeezed_var_p(zeta, omega, 1.0);
                CHECK(s.var_x == doctest::Approx(vx).epsilon(1e-12));
                CHECK(s.var_p == doctest::Approx(vp).epsilon(1e-12));
                CHECK(rel(grid_moments(density_from_amplitude(s.psi)).variance, vx) <= 1e-3);
                const auto pd = density_from_amplitude(fourier_conjugate(s.psi, 1.0));
                CHECK(rel(grid_moments(pd).variance, vp) <= 1e-3);
                CHECK(rel(grid_moments(density_from_amplitude(s.psihat)).variance, vp) <= 1e-3);
            }
        }
    }
    SUBCASE("the N^2 normalization is exact") {
        for (double zeta : {0.5, 2.0}) {
            const auto s = squeezed_superposition(zeta, 1.0, 1.0);
            const double n2 = oracle::squeezed_norm2(zeta);
            const double mass = oracle::simpson(
                [&](double x) { return n2 * oracle::squeezed_density_x(x, zeta, 1.0, 1.0); }, -15.0, 15.0, 200000);
            CHECK(std::abs(mass - 1.0) <= 1e-8);
            for (std::size_t k = 0; k < s.psi.size(); k += 101) {
                const double want = n2 * oracle::squeezed_density_x(s.psi.grid()[k], zeta, 1.0, 1.0);
                CHECK(std::abs(std::norm(s.psi[k]) - want) <= 1e-8 * (1.0 + want));
            }
        }
    }
    SUBCASE("vacuum limit") {
        const auto s = squeezed_superposition(0.0);
        CHECK(rel(s.var_x * s.var_p, 0.25) <= 1e-12);
        for (const auto& row : repur_sweep(s.psi, {-0.5, -0.2, 0.0, 2.0, HUGE_VAL}, 1.0).rows) CHECK(row.saturated);
    }
    SUBCASE("peak grows with zeta") {
        const double h1 = max_value(density_from_amplitude(squeezed_superposition(1.0).psi));
        const double h2 = max_value(density_from_amplitude(squeezed_superposition(2.0).psi));
        const double h3 = max_value(density_from_amplitude(squeezed_superposition(3.0).psi));
        CHECK(h1 < h2);
        CHECK(h2 < h3);
    }
    SUBCASE("range") {
        check_code(ErrorCode::OutOfRange, [] { squeezed_superposition(4.5); });
        check_code(ErrorCode::OutOfRange, [] { squeezed_superposition(-4.01); });
        CHECK_NOTHROW(squeezed_superposition(4.0));
        check_code(ErrorCode::InvalidArgument, [] { squeezed_superposition(1.0, -1.0); });
    }
}

TEST_CASE("Cauchy packet") {
    const auto s = cauchy_pltwp(1.0);
    const auto F = density_from_amplitude(s.psi);
    // Mode 1/pi, lifted by the window normalization 1/(2 atan(1e4)/pi).
    CHECK(std::abs(max_value(F) - 1.0 / oracle::kPi) <= 1e-4);
    CHECK(max_value(F) == doctest::Approx(1.0 / (2.0 * std::atan(1e4))).epsilon(1e-8));
    CHECK(s.psi.grid().back() >= 1e4 * 0.99);

    SUBCASE("L1 norm of the momentum amplitude") {
        // integral |psi_hat| = (sqrt 2 / pi) * 2 * integral_0^inf K0 and
        // integral_0^inf K0 = integral_0^inf sech t dt.
        const double int_k0 = oracle::simpson([](double t) { return 1.0 / std::cosh(t); }, 0.0, 40.0, 40000);
        CHECK(int_k0 == doctest::Approx(oracle::kPi / 2.0).epsilon(1e-10));
        const double want = std::sqrt(2.0) / oracle::kPi * 2.0 * int_k0;
        CHECK(rel(lp_norm(fourier_conjugate(s.psi, 1.0), 1.0), want) <= 1e-3);
    }
    SUBCASE("FFT against the analytic amplitude") {
        const auto fft_hat = fourier_conjugate(s.psi, 1.0);
        const auto pd = density_from_amplitude(fft_hat);
        const double dp = pd.grid().dx();
        const double total = integrate(pd);
        double cum = 0.0, worst = 0.0;
        std::size_t compared = 0;
        for (std::size_t k = 0; k < pd.size(); ++k) {
            cum += pd[k] * dp;
            const double p = pd.grid()[k];
            // central 90% of the mass, away from the log singularity at p = 0
            if (cum < 0.05 * total || cum > 0.95 * total || std::abs(p) < 16.0 * dp) continue;
            worst = std::max(worst, rel(std::abs(fft_hat[k]), std::abs(s.psihat_analytic[k])));
            ++compared;
        }
        CHECK(compared > 100);
        CHECK(worst <= 1e-3);
    }
    SUBCASE("momentum variance") {
        for (double gamma : {0.5, 1.0, 2.0}) {
            CHECK(cauchy_momentum_variance(gamma, 1.0) == doctest::Approx(1.0 / (8.0 * gamma * gamma)));
            const auto pd = density_from_amplitude(fourier_conjugate(cauchy_pltwp(gamma).psi, 1.0));
            CHECK(rel(density_variance(pd).value(), 1.0 / (8.0 * gamma * gamma)) <= 2e-3);
        }
        CHECK(cauchy_momentum_variance(1.0, 0.5) == doctest::Approx(0.25 / 8.0));
    }
    SUBCASE("validation") {
        check_code(ErrorCode::InvalidArgument, [] { cauchy_pltwp(0.0); });
        check_code(ErrorCode::InvalidArgument, [] { cauchy_pltwp(1.0, 0.0, 1.0, {1e4, 1000}); });
    }
}

TEST_CASE("synthetic tail densities") {
    SUBCASE("power law with tiny core") {
        const auto F = synthetic_tail_density(PowerLawTail{1.0, 1.0 / oracle::kPi}, 0.05);
        CHECK(integrate(F) == doctest::Approx(1.0).epsilon(1e-12));
        const auto fit = fit_power_tail(information_scan(F), 10.0, 22.0);
        CHECK(std::abs(fit.alpha - 1.0) <= 0.05);
    }
    SUBCASE("stretched a = 1") {
        const auto F = synthetic_tail_density(StretchedTail{1.0, oracle::kLog2e, 0.5}, 1.0);
        const auto fit = fit_stretched_tail(information_scan(F), 10.0, 30.0);
        CHECK(std::abs(fit.a - 1.0) <= 0.1);
    }
    SUBCASE("stretched a = 2 reproduces the Gaussian") {
        const auto F = synthetic_tail_density(StretchedTail{2.0, 0.5 * oracle::kLog2e, 1.0 / std::sqrt(2.0 * oracle::kPi)},
                                              1.0);
        for (std::size_t k = 0; k < F.size(); k += 97) {
            const double want = oracle::gaussian_pdf(F.grid()[k], 1.0);
            CHECK(std::abs(F[k] - want) <= 1e-12 + 1e-9 * want);
        }
    }
    SUBCASE("C1 splice") {
        const auto F = synthetic_tail_density(PowerLawTail{1.5, 0.2}, 1.0);
        const double dx = F.grid().dx();
        const std::size_t k = static_cast<std::size_t>(std::lround((3.0 - F.grid().x0()) / dx));
        const double left = (F[k] - F[k - 1]) / dx;
        const double right = (F[k + 1] - F[k]) / dx;
        CHECK(std::abs(F[k + 1] - F[k - 1]) <= 4.0 * std::abs(right) * dx);
        CHECK(left == doctest::Approx(right).epsilon(0.01));
    }
    SUBCASE("failures") {
        check_code(ErrorCode::SpliceFailure, [] { synthetic_tail_density(StretchedTail{2.0, 1e4, 1.0}, 1.0); });
        check_code(ErrorCode::InvalidArgument, [] { synthetic_tail_density(PowerLawTail{2.5, 1.0}, 1.0); });
        check_code(ErrorCode::InvalidArgument, [] { synthetic_tail_density(StretchedTail{-1.0, 1.0, 1.0}, 1.0); });
    }
}

TEST_CASE("reference densities") {
    CHECK(integrate(uniform_density(3.0)) == doctest::Approx(1.0).epsilon(1e-12));
    const auto G = gaussian_density(2.0, 1.0);
    CHECK(grid_moments(G).variance == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(grid_moments(G).mean == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(grid_moments(laplace_density(2.0)).variance == doctest::Approx(2.0 / 4.0).epsilon(1e-6));
    CHECK(grid_moments(exponential_density(0.5)).mean == doctest::Approx(2.0).epsilon(1e-6));
    const auto M = gaussian_mixture_density({{1.0, -1.0, 0.5}, {3.0, 2.0, 1.0}});
    CHECK(grid_moments(M).mean == doctest::Approx(0.25 * -1.0 + 0.75 * 2.0).epsilon(1e-10));
    check_code(ErrorCode::InvalidArgument, [] { gaussian_mixture_density({}); });
    const auto psi = gaussian_mixture_state({{0.5, -2.0, 0.5}, {0.5, 2.0, 0.5}});
    CHECK(lp_norm(psi, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

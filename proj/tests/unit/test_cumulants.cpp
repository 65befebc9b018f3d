#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "repur/cumulants.hpp"
#include "repur/error.hpp"
#include "repur/infoscan.hpp"
#include "repur/renyi.hpp"
#include "repur/states.hpp"

using namespace repur;

namespace {

const double L2E = oracle::kLog2e;

// Shifted-gamma cumulants: kappa_1 = log2(2 pi e sigma^2)/2, kappa_n = (log2 e)^n (n-1)!/2.
double gaussian_kappa(double sigma, int n) {
    if (n == 1) return 0.5 * std::log2(2.0 * oracle::kPi * std::exp(1.0) * sigma * sigma);
    return 0.5 * std::pow(L2E, n) * std::tgamma(n);
}

void check_code(ErrorCode want, auto&& fn) {
    try {
        fn();
        FAIL("expected ", to_string(want));
    } catch (const Error& e) {
        CHECK(e.code() == want);
    }
}

double l1(const Reconstruction& r, const InformationScan& s) {
    double d = 0.0;
    for (std::size_t k = 0; k < s.g.size(); ++k) d += std::abs(r.g_reconstructed[k] - s.g[k]) * s.bin_width;
    return d;
}

}  // namespace

TEST_CASE("GLDF on a constant tower is exact") {
    for (double sigma : {0.3, 1.0, 5.0}) {
        std::vector<TowerEntry> tower;
        for (int k = 0; k < 4; ++k) tower.push_back({k, sigma * sigma});
        const auto c = cumulants_gldf(tower, 0.01, 1, 4);
        REQUIRE(c.order() == 4);
        // The 1/delta^(n-1) factor amplifies rounding in the alternating sum.
        for (int n = 1; n <= 4; ++n) CHECK(c(n) == doctest::Approx(gaussian_kappa(sigma, n)).epsilon(1e-8));
        CHECK(c.source == CumulantSource::Gldf);
    }
    std::vector<TowerEntry> tower;
    for (int k = 0; k < 3; ++k) tower.push_back({k, 2.0});
    CHECK(cumulants_gldf(tower, 0.02, 3, 1)(1) == doctest::Approx(1.5 * std::log2(2.0 * oracle::kPi * std::exp(1.0) * 2.0)));
}

TEST_CASE("GLDF tower validation") {
    const std::vector<TowerEntry> short_tower = {{0, 1.0}, {1, 1.0}};
    check_code(ErrorCode::InsufficientTower, [&] { cumulants_gldf(short_tower, 0.01, 1, 3); });
    check_code(ErrorCode::InsufficientTower, [&] { cumulants_gldf({{0, 1.0}, {2, 1.0}, {3, 1.0}}, 0.01, 1, 3); });
    check_code(ErrorCode::NonFinitePower, [&] { cumulants_gldf({{0, 1.0}, {1, 0.0}}, 0.01, 1, 2); });
    check_code(ErrorCode::NonFinitePower, [&] { cumulants_gldf({{0, HUGE_VAL}, {1, 1.0}}, 0.01, 1, 2); });
    check_code(ErrorCode::OutOfRange, [&] { cumulants_gldf(short_tower, 0.5, 1, 2); });
}

TEST_CASE("GLDF on sampled Gaussians") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        const auto F = gaussian_density(sigma);
        const auto c = cumulants_gldf(F, 3);
        CHECK(std::abs(c(1) - gaussian_kappa(sigma, 1)) <= 1e-3);
        CHECK(std::abs(c(2) - gaussian_kappa(sigma, 2)) <= 5e-3);
        const auto r = cumulants_gldf(F, 3, {0.01, true});
        CHECK(std::abs(r(3) - gaussian_kappa(sigma, 3)) <= 5e-2);
    }
    CHECK(gaussian_kappa(1.0, 1) == doctest::Approx(2.0471).epsilon(1e-4));
    CHECK(gaussian_kappa(1.0, 2) == doctest::Approx(1.0408).epsilon(1e-4));
}

TEST_CASE("Richardson removes the first-order bias") {
    // Laplace: i = log2(2/lambda) + lambda |y| log2 e, so kappa_2 = (log2 e)^2
    // and kappa_3 = 2 (log2 e)^3.
    const auto F = laplace_density(1.0);
    const double exact2 = L2E * L2E;
    const double coarse = cumulants_gldf(F, 2, {0.02})(2);
    const double fine = cumulants_gldf(F, 2, {0.01})(2);
    const double rich = cumulants_gldf(F, 2, {0.02, true})(2);
    CHECK((fine - exact2) / (coarse - exact2) == doctest::Approx(0.5).epsilon(0.2));
    CHECK(std::abs(rich - exact2) <= 0.2 * std::abs(fine - exact2));
}

TEST_CASE("kappa_1 is the Shannon entropy") {
    const SampledDensity densities[] = {gaussian_density(1.7), laplace_density(0.5),
                                        gaussian_mixture_density({{0.5, -2.0, 0.5}, {0.5, 2.0, 1.0}})};
    for (const auto& F : densities) {
        const double h = renyi_entropy(F, EntropyIndex::finite(1.0)).value();
        CHECK(std::abs(cumulants_gldf(F, 1)(1) - h) <= 1e-3);
        CHECK(std::abs(cumulants_from_scan(information_scan(F), 1)(1) - h) <= 1e-3);
    }
}

TEST_CASE("cumulants from the scan") {
    SUBCASE("Gaussian") {
        const auto s = cumulants_from_scan(information_scan(gaussian_density(1.0)), 3);
        CHECK(s.source == CumulantSource::Scan);
        CHECK(std::abs(s(1) - gaussian_kappa(1.0, 1)) <= 2e-3);
        CHECK(std::abs(s(2) - gaussian_kappa(1.0, 2)) <= 1e-2);
        const auto g = cumulants_gldf(gaussian_density(1.0), 3, {0.01, true});
        CHECK(std::abs(s(1) - g(1)) <= 5.0 * (2e-3 + 1e-3));
        CHECK(std::abs(s(2) - g(2)) <= 5.0 * (1e-2 + 5e-3));
        CHECK(std::abs(s(3) - g(3)) <= 5.0 * 5e-2);
    }
    SUBCASE("uniform") {
        const auto s = cumulants_from_scan(information_scan(uniform_density(4.0)), 3);
        CHECK(std::abs(s(1) - 2.0) <= 0.05);
        CHECK(std::abs(s(2)) <= 1e-6);
        CHECK(std::abs(s(3)) <= 1e-6);
    }
    SUBCASE("Cauchy") {
        const auto s = cumulants_from_scan(information_scan(cauchy_density(1.0)), 1);
        CHECK(std::abs(s(1) - oracle::cauchy_entropy_bits(1.0)) <= 5e-3);
    }
}

TEST_CASE("varentropy") {
    for (double sigma : {0.5, 2.0}) CHECK(std::abs(varentropy(gaussian_density(sigma)) - 0.5 * L2E * L2E) <= 1e-2);
    CHECK(std::abs(varentropy(uniform_density(3.0))) <= 1e-6);
    for (double lambda : {0.5, 3.0}) CHECK(std::abs(varentropy(exponential_density(lambda)) - L2E * L2E) <= 2e-2);
}

TEST_CASE("Gaussian reference cumulants") {
    CHECK(gaussian_reference_cumulants(1.0, 1) == doctest::Approx(2.0471).epsilon(1e-4));
    CHECK(gaussian_reference_cumulants(1.0, 2) == doctest::Approx(1.0408).epsilon(1e-4));
    CHECK(gaussian_reference_cumulants(2.0, 2) == gaussian_reference_cumulants(1.0, 2));
    for (int n = 1; n <= 6; ++n) {
        CHECK(gaussian_reference_cumulants(0.7, n) == doctest::Approx(gaussian_kappa(0.7, n)).epsilon(1e-13));
    }
}

TEST_CASE("laguerre") {
    CHECK(laguerre(0, -3.7, 12.0) == 1.0);
    CHECK(laguerre(1, 0.4, 2.0) == doctest::Approx(1.0 + 0.4 - 2.0));
    CHECK(laguerre(2, -1.5, 1.0) == doctest::Approx(-0.125));
    for (double a : {-3.5, -0.5, 2.0}) {
        for (double x : {0.1, 1.3, 4.0}) {
            const double want = -x * x * x / 6.0 + (a + 3.0) * x * x / 2.0 - (a + 2.0) * (a + 3.0) * x / 2.0 +
                                (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0;
            CHECK(laguerre(3, a, x) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(laguerre(13, 0.0, 1.0), Error);
}

TEST_CASE("Gram-Charlier with exact Gaussian cumulants is the reference") {
    CumulantSet exact;
    for (int n = 1; n <= 4; ++n) exact.kappa.push_back(gaussian_kappa(1.0, n));
    for (int order : {2, 3, 4}) {
        const auto r = gram_charlier_reconstruct(exact, order);
        CHECK(r.model.exact);
        CHECK(r.model.alpha == 0.5);
        CHECK(r.model.beta == doctest::Approx(L2E));
        CHECK(r.model.a == doctest::Approx(0.5 * std::log2(2.0 * oracle::kPi)));
        CHECK(r.clipped_mass == 0.0);
        for (std::size_t k = 0; k < r.g_reference.size(); ++k) CHECK(r.g_reconstructed[k] == r.g_reference[k]);
        // Bin averages of the shifted gamma against the chi-square masses.
        const double bw = r.x_grid.dx();
        for (std::size_t k = 0; k < 200; k += 13) {
            const double lo = r.x_grid[k] - 0.5 * bw;
            CHECK(r.g_reference[k] * bw == doctest::Approx(oracle::gaussian_info_mass(lo, lo + bw, 1.0)).epsilon(1e-6));
        }
    }
}

TEST_CASE("a truncated non-Gaussian set is never flagged exact") {
    CumulantSet c;
    c.kappa = {gaussian_kappa(1.0, 1), gaussian_kappa(1.0, 2) * 1.1, gaussian_kappa(1.0, 3)};
    CHECK_FALSE(gram_charlier_model(c, 3).exact);
    CHECK_FALSE(gram_charlier_model(c, 2).exact);
}

TEST_CASE("Gram-Charlier order validation") {
    CumulantSet c;
    for (int n = 1; n <= 5; ++n) c.kappa.push_back(gaussian_kappa(1.0, n));
    check_code(ErrorCode::OrderUnsupported, [&] { gram_charlier_model(c, 1); });
    check_code(ErrorCode::OrderUnsupported, [&] { gram_charlier_model(c, 5); });
    CumulantSet two;
    two.kappa = {2.0, 1.0};
    CHECK_THROWS_AS(gram_charlier_model(two, 3), Error);
}

TEST_CASE("GLDF cumulants reconstruct the Gaussian scan") {
    const auto F = gaussian_density(1.0);
    const auto scan = information_scan(F);
    const auto kappa = cumulants_gldf(F, 2);
    const auto r = gram_charlier_reconstruct(kappa, 2, scan.x_grid);
    CHECK(l1(r, scan) <= 0.05);
}

// Every correction term carries (x - a)^-k L_k(...) against a reference that
// only vanishes like (x - a)^-1/2, so any nonzero correction is singular at
// the onset. For the mixture the series diverges there and the comparison
// below does not hold; kept as a record of that behaviour.
TEST_CASE("mixture reconstruction improves with order" * doctest::may_fail()) {
    const auto F = gaussian_mixture_density({{0.95, 0.0, 1.0}, {0.05, 3.0, 1.0}});
    const auto scan = information_scan(F);
    const auto kappa = cumulants_gldf(F, 3, {0.01, true});
    const double e2 = l1(gram_charlier_reconstruct(kappa, 2, scan.x_grid), scan);
    const double e3 = l1(gram_charlier_reconstruct(kappa, 3, scan.x_grid), scan);
    CHECK(e3 < e2);
}

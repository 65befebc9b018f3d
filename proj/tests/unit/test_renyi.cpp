#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "repur/error.hpp"
#include "repur/grid.hpp"
#include "repur/renyi.hpp"
#include "repur/states.hpp"
#include "repur/transform.hpp"

using namespace repur;

namespace {

EntropyIndex idx(double p) { return EntropyIndex::from_value(p); }

SampledDensity scaled(const SampledDensity& F, double c) {
    std::vector<double> v(F.values().begin(), F.values().end());
    for (double& x : v) x /= c;
    return SampledDensity(Grid1D(F.grid().x0() * c, F.grid().dx() * c, F.size()), std::move(v));
}

// Symmetric decreasing rearrangement on the same grid: the largest value goes
// to the middle and the rest alternate outward.
SampledDensity symmetric_rearrangement(const SampledDensity& F) {
    std::vector<double> sorted(F.values().begin(), F.values().end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<double> out(F.size(), 0.0);
    const std::size_t mid = F.size() / 2;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const std::size_t step = (k + 1) / 2;
        const std::size_t pos = (k % 2 == 1) ? mid + step : mid - step;
        if (pos < out.size()) out[pos] = sorted[k];
    }
    return SampledDensity(F.grid(), std::move(out));
}

}  // namespace

TEST_CASE("EntropyIndex") {
    CHECK(idx(1.0).is_shannon());
    CHECK(idx(HUGE_VAL).is_infinite());
    CHECK(EntropyIndex::infinity() == idx(HUGE_VAL));
    for (double bad : {0.0, -1.0, std::nan("")}) {
        try {
            EntropyIndex::finite(bad);
            FAIL("expected NonPositiveOrder");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPositiveOrder);
        }
    }
}

TEST_CASE("Gaussian entropies") {
    const auto F = gaussian_density(1.0);
    CHECK(std::abs(renyi_entropy(F, idx(1.0)).value() - oracle::gaussian_entropy_bits(1.0)) <= 1e-5);
    CHECK(std::abs(renyi_entropy(F, idx(2.0)).value() - 0.5 * std::log2(4.0 * oracle::kPi)) <= 1e-5);
    CHECK(std::abs(renyi_entropy(F, idx(HUGE_VAL)).value() - 0.5 * std::log2(2.0 * oracle::kPi)) <= 1e-9);
}

TEST_CASE("Gaussian entropy power is the variance at every index") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        const auto F = gaussian_density(sigma);
        for (double p : {0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 5.0, 20.0, 49.0, 60.0, 200.0, HUGE_VAL}) {
            const auto N = entropy_power(F, idx(p));
            REQUIRE(N.is_finite());
            CHECK(std::abs(N.value() / (sigma * sigma) - 1.0) <= 1e-5);
        }
    }
}

TEST_CASE("Cauchy entropies") {
    // The packet is normalized on its window [-L, L], so the reference is the
    // truncated Cauchy law.
    const double L = 1e4;
    const auto F = cauchy_density(1.0);
    const double max_f = 1.0 / (2.0 * std::atan(L));
    CHECK(std::abs(renyi_entropy(F, idx(HUGE_VAL)).value() + std::log2(max_f)) <= 1e-9);
    CHECK(std::abs(entropy_power(F, idx(HUGE_VAL)).value() - 1.0 / (2.0 * oracle::kPi * max_f * max_f)) <= 1e-8);
    CHECK(std::abs(entropy_power(F, idx(HUGE_VAL)).value() - oracle::kPi / 2.0) <= 5e-4);

    const auto half = evaluate_entropy(F, idx(0.5));
    CHECK(half.diverged);
    CHECK(half.power.kind() == ExtReal::Kind::PosInf);
    CHECK(half.entropy_bits.kind() == ExtReal::Kind::PosInf);
    CHECK(half.tail_exponent == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(entropy_power_half(F).kind() == ExtReal::Kind::PosInf);

    // Convergent for every p > 1/2.
    CHECK_FALSE(evaluate_entropy(F, idx(0.6)).diverged);
    CHECK(evaluate_entropy(F, idx(0.75)).power.is_finite());
    // Tails beyond the window are extrapolated, so the full law is the reference.
    for (double p : {0.75, 1.0, 2.0, 5.0}) {
        const double tol = p < 1.0 ? 3e-3 : 3e-4;
        CHECK(std::abs(renyi_entropy(F, idx(p)).value() - oracle::cauchy_renyi_bits(p, 1.0)) <= tol);
    }
}

TEST_CASE("N_1/2 shortcut agrees with the generic path") {
    const SampledDensity densities[] = {gaussian_density(1.3), laplace_density(2.0),
                                        gaussian_mixture_density({{0.3, -2.0, 0.5}, {0.7, 1.0, 1.0}})};
    for (const auto& F : densities) {
        const double generic = entropy_power(F, idx(0.5)).value();
        CHECK(entropy_power_half(F).value() == doctest::Approx(generic).epsilon(1e-9));
    }
}

TEST_CASE("unresolved peak gives a zero infinity power") {
    // The momentum density of the Cauchy packet has a logarithmic singularity at p = 0.
    const auto state = cauchy_pltwp(1.0, 0.0, 1.0);
    const auto pdens = density_from_amplitude(fourier_conjugate(state.psi, 1.0));
    const auto r = evaluate_entropy(pdens, idx(HUGE_VAL));
    CHECK(r.peak_unresolved);
    CHECK(r.power.value() == 0.0);
    CHECK(r.entropy_bits.kind() == ExtReal::Kind::NegInf);
    CHECK_FALSE(evaluate_entropy(gaussian_density(1.0), idx(HUGE_VAL)).peak_unresolved);
    CHECK_FALSE(evaluate_entropy(laplace_density(1.0), idx(HUGE_VAL)).peak_unresolved);
}

TEST_CASE("holder_conjugate") {
    CHECK(holder_conjugate(idx(2.0)).value() == doctest::Approx(2.0));
    CHECK(holder_conjugate(idx(1.0)).is_infinite());
    CHECK(holder_conjugate(idx(4.0)).value() == doctest::Approx(4.0 / 3.0));
    CHECK(holder_conjugate(idx(HUGE_VAL)).value() == 1.0);
    CHECK(holder_conjugate(holder_conjugate(idx(3.0))).value() == doctest::Approx(3.0));
    try {
        holder_conjugate(idx(0.5));
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
}

TEST_CASE("entropy is non-increasing in p") {
    const SampledDensity densities[] = {gaussian_density(1.0), laplace_density(1.0), uniform_density(3.0),
                                        gaussian_mixture_density({{0.2, -4.0, 0.5}, {0.8, 2.0, 1.5}}),
                                        normalize(density_from_amplitude(squeezed_superposition(2.0).psi))};
    const double grid[] = {0.5, 0.6, 0.75, 0.9, 1.0, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0, HUGE_VAL};
    for (const auto& F : densities) {
        double prev = HUGE_VAL;
        for (double p : grid) {
            const double h = renyi_entropy(F, idx(p)).value();
            CHECK(h <= prev + 1e-9);
            prev = h;
        }
    }
}

TEST_CASE("entropy power scales as c^2") {
    const auto F = gaussian_mixture_density({{0.4, -1.0, 0.6}, {0.6, 2.0, 1.0}});
    for (double c : {0.1, 3.0}) {
        const auto G = scaled(F, c);
        for (double p : {0.5, 1.0, 2.0, 7.0, HUGE_VAL}) {
            CHECK(entropy_power(G, idx(p)).value() ==
                  doctest::Approx(c * c * entropy_power(F, idx(p)).value()).epsilon(1e-6));
        }
    }
}

TEST_CASE("translation and rearrangement invariance") {
    const auto F = gaussian_mixture_density({{0.5, -3.0, 0.7}, {0.5, 3.0, 1.2}});
    const SampledDensity moved(Grid1D(F.grid().x0() + 17.0, F.grid().dx(), F.size()),
                               std::vector<double>(F.values().begin(), F.values().end()));
    const auto R = symmetric_rearrangement(F);
    for (double p : {0.5, 1.0, 2.0, HUGE_VAL}) {
        const double base = entropy_power(F, idx(p)).value();
        CHECK(entropy_power(moved, idx(p)).value() == doctest::Approx(base).epsilon(1e-12));
        CHECK(entropy_power(R, idx(p)).value() == doctest::Approx(base).epsilon(1e-6));
    }
}

TEST_CASE("continuity at the Shannon point and for large p") {
    const SampledDensity densities[] = {gaussian_density(1.0), laplace_density(1.0),
                                        gaussian_mixture_density({{0.3, -2.0, 0.5}, {0.7, 1.0, 1.0}})};
    for (const auto& F : densities) {
        const double h1 = renyi_entropy(F, idx(1.0)).value();
        CHECK(std::abs(renyi_entropy(F, idx(1.0 + 1e-4)).value() - h1) <= 1e-3);
        CHECK(std::abs(renyi_entropy(F, idx(1.0 - 1e-4)).value() - h1) <= 1e-3);
        const double below = entropy_power(F, idx(49.9)).value();
        const double mid = entropy_power(F, idx(50.0)).value();
        const double above = entropy_power(F, idx(50.1)).value();
        CHECK(std::abs(below - 2.0 * mid + above) <= 2e-6 * mid);
    }
}

TEST_CASE("steep edge tails stay finite") {
    // Equal peak heights w/sigma make this a rearrangement of a Gaussian with
    // sigma = 0.6 + 0.9, so N_p = 2.25 at every index.
    const auto F = gaussian_mixture_density({{0.4, -5.0, 0.6}, {0.6, 5.0, 0.9}});
    for (double p : {0.5, 0.8, 1.0, 2.0, 10.0, HUGE_VAL}) {
        const auto r = evaluate_entropy(F, idx(p));
        CHECK_FALSE(r.diverged);
        REQUIRE(r.power.is_finite());
        CHECK(r.power.value() == doctest::Approx(2.25).epsilon(1e-4));
    }
}

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "repur/grid.hpp"

namespace repur {

/// In-place radix-2 FFT. `inverse` flips the exponent sign; no 1/n scaling.
/// Throws InvalidArgument unless the length is a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse = false);

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

struct TransformOptions {
    /// Reject results with more than 1e-8 of the mass in the outer 1% of bins
    /// per side (GridTooCoarse).
    bool edge_check = true;
};

/// psi_hat(p) = (2 pi hbar)^(-1/2) * integral exp(-i p x / hbar) psi(x) dx on
/// the conjugate grid dp = 2 pi hbar / (n dx), p0 = -(n/2) dp.
SampledAmplitude fourier_conjugate(const SampledAmplitude& psi, double hbar,
                                   TransformOptions opts = {});

/// Inverse of fourier_conjugate. The output grid starts at `x0` when given,
/// otherwise it is centered like the forward output.
SampledAmplitude fourier_inverse(const SampledAmplitude& psihat, double hbar,
                                 std::optional<double> x0 = std::nullopt,
                                 TransformOptions opts = {});

/// f(x) = (2 pi hbar)^(1/4) psi(sqrt(2 pi hbar) x): the grid shrinks by
/// sqrt(2 pi hbar) and the norm is preserved.
SampledAmplitude beckner_rescale(const SampledAmplitude& psi, double hbar);
SampledAmplitude beckner_unrescale(const SampledAmplitude& f, double hbar);

}  // namespace repur

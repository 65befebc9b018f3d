#include "repur/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "repur/error.hpp"

namespace repur {

namespace {

constexpr double kLog2e = std::numbers::log2e;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t argmax(std::span<const double> v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

// dir = -1 walks to the left edge, +1 to the right edge.
PowerTail fit_side(const SampledDensity& F, std::size_t peak, int dir) {
    PowerTail t;
    const std::size_t n = F.size();
    const std::size_t w = std::max<std::size_t>(4, n / 10);
    const std::size_t lo = dir < 0 ? 0 : n - w;
    const std::size_t hi = dir < 0 ? w : n;  // exclusive
    if (peak >= lo && peak < hi) return t;
    for (std::size_t k = lo; k < hi; ++k) {
        if (!(F[k] > 0.0)) return t;
        if (k > lo) {
            const bool decreasing = dir < 0 ? F[k - 1] < F[k] : F[k] < F[k - 1];
            if (!decreasing) return t;
        }
    }
    const double xp = F.grid()[peak];
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        const double u = std::log(std::abs(F.grid()[k] - xp));
        const double y = std::log(F[k]);
        sx += u;
        sy += y;
        sxx += u * u;
        sxy += u * y;
    }
    const double m = static_cast<double>(w);
    const double den = m * sxx - sx * sx;
    if (!(den > 0.0)) return t;
    const double beta = -(m * sxy - sx * sy) / den;
    if (!(beta > 0.0) || !std::isfinite(beta)) return t;
    const std::size_t edge = dir < 0 ? 0 : n - 1;
    t.present = true;
    t.beta = beta;
    t.r_edge = std::abs(F.grid()[edge] - xp);
    t.f_edge = F[edge];
    t.c = F[edge] * std::pow(t.r_edge, beta);
    return t;
}

bool diverges(const PowerTail& t, double p) { return t.present && p * t.beta <= 1.0 + 1e-6; }

// ln of integral F^p beyond the edge, scaled by M^-p; -inf when absent.
double log_tail_power(const PowerTail& t, double p, double M) {
    if (!t.present) return -std::numeric_limits<double>::infinity();
    return p * std::log(t.f_edge / M) + std::log(t.r_edge) - std::log(p * t.beta - 1.0);
}

// -integral F ln F beyond the edge.
double tail_shannon(const PowerTail& t) {
    if (!t.present) return 0.0;
    // c R^(1-b) = f_edge R, and ln c = ln f_edge + b ln R; steep tails overflow c itself.
    const double b = t.beta, R = t.r_edge, fr = t.f_edge * R;
    const double mass = fr / (b - 1.0);
    const double log_moment = fr * (std::log(R) / (b - 1.0) + 1.0 / ((b - 1.0) * (b - 1.0)));
    return b * log_moment - (std::log(t.f_edge) + b * std::log(R)) * mass;
}

bool peak_unresolved(std::span<const double> F, std::size_t k) {
    if (k < 2 || k + 2 >= F.size()) return false;
    const double f0 = F[k];
    const double drop = 1.0 - (F[k - 1] + F[k + 1]) / (2.0 * f0);
    const double d1 = F[k - 1] + F[k + 1] - 2.0 * f0;
    const double d2 = (F[k - 2] + F[k + 2] - 2.0 * f0) / 4.0;
    if (!(d1 < 0.0)) return false;
    return drop > 0.1 && d2 / d1 < 0.75;
}

EntropyResult make_result(EntropyIndex idx, double entropy_nats, int dim) {
    EntropyResult r;
    r.index = idx;
    r.entropy_bits = ExtReal::finite(entropy_nats * kLog2e);
    const double p = idx.value();
    double log_pref;
    if (idx.is_infinite()) {
        log_pref = 0.0;
    } else if (idx.is_shannon()) {
        log_pref = -1.0;
    } else {
        log_pref = -std::log(p) / (p - 1.0);
    }
    r.power = ExtReal::finite(std::exp(log_pref + 2.0 / dim * entropy_nats) / kTwoPi);
    return r;
}

}  // namespace

EntropyIndex EntropyIndex::finite(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        fail(ErrorCode::NonPositiveOrder, "entropy index must be a finite p > 0");
    }
    return EntropyIndex(p);
}

EntropyIndex EntropyIndex::from_value(double p) {
    if (p == std::numeric_limits<double>::infinity()) return infinity();
    return finite(p);
}

double DensityTails::min_beta() const noexcept {
    double b = std::numeric_limits<double>::quiet_NaN();
    for (const auto* t : {&left, &right}) {
        if (t->present && !(t->beta >= b)) b = t->beta;
    }
    return b;
}

DensityTails estimate_tails(const SampledDensity& F) {
    const std::size_t peak = argmax(F.values());
    return {fit_side(F, peak, -1), fit_side(F, peak, +1)};
}

EntropyResult evaluate_entropy(const SampledDensity& F, EntropyIndex idx) {
    const auto v = F.values();
    const std::size_t peak = argmax(v);
    const double M = v[peak];
    if (!(M > 0.0)) fail(ErrorCode::ZeroMass, "density is identically zero");

    if (idx.is_infinite()) {
        if (peak_unresolved(v, peak)) {
            EntropyResult r;
            r.index = idx;
            r.entropy_bits = ExtReal::neg_inf();
            r.power = ExtReal::finite(0.0);
            r.peak_unresolved = true;
            return r;
        }
        return make_result(idx, -std::log(M), F.dim());
    }

    const DensityTails tails = estimate_tails(F);
    const double p = idx.value();
    if (diverges(tails.left, p) || diverges(tails.right, p)) {
        EntropyResult r;
        r.index = idx;
        r.entropy_bits = ExtReal::pos_inf();
        r.power = ExtReal::pos_inf();
        r.diverged = true;
        r.tail_exponent = tails.min_beta();
        return r;
    }

    const auto w = quadrature_weights(F.grid());
    double entropy_nats;
    if (idx.is_shannon()) {
        double h = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] > 0.0) h -= w[k] * v[k] * std::log(v[k]);
        }
        entropy_nats = h + tail_shannon(tails.left) + tail_shannon(tails.right);
    } else {
        // integral F^p = M^p * integral (F/M)^p
        double s = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] > 0.0) s += w[k] * std::pow(v[k] / M, p);
        }
        s += std::exp(log_tail_power(tails.left, p, M)) + std::exp(log_tail_power(tails.right, p, M));
        entropy_nats = (p * std::log(M) + std::log(s)) / (1.0 - p);
    }
    EntropyResult r = make_result(idx, entropy_nats, F.dim());
    r.tail_exponent = tails.min_beta();
    return r;
}

ExtReal renyi_entropy(const SampledDensity& F, EntropyIndex idx) { return evaluate_entropy(F, idx).entropy_bits; }

ExtReal entropy_power(const SampledDensity& F, EntropyIndex idx) { return evaluate_entropy(F, idx).power; }

ExtReal entropy_power_half(const SampledDensity& F) {
    if (F.dim() != 1) fail(ErrorCode::InvalidArgument, "the N_1/2 shortcut is for dim 1");
    const DensityTails tails = estimate_tails(F);
    if (diverges(tails.left, 0.5) || diverges(tails.right, 0.5)) return ExtReal::pos_inf();
    const auto v = F.values();
    const double M = *std::max_element(v.begin(), v.end());
    const auto w = quadrature_weights(F.grid());
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += w[k] * std::sqrt(v[k]);
    s += std::sqrt(M) * (std::exp(log_tail_power(tails.left, 0.5, M)) +
                         std::exp(log_tail_power(tails.right, 0.5, M)));
    return ExtReal::finite(std::pow(s, 4) / (4.0 * kTwoPi));
}

EntropyIndex holder_conjugate(EntropyIndex idx) {
    if (idx.is_infinite()) return EntropyIndex::finite(1.0);
    const double p = idx.value();
    if (p < 1.0) fail(ErrorCode::OutOfRange, "Holder conjugate needs p >= 1, got " + std::to_string(p));
    if (p == 1.0) return EntropyIndex::infinity();
    return EntropyIndex::finite(p / (p - 1.0));
}

}  // namespace repur

#include "repur/tails.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "repur/error.hpp"

namespace repur {

std::string_view to_string(TailModel m) noexcept {
    return m == TailModel::PowerLaw ? "power_law" : "stretched";
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct Samples {
    std::vector<double> x;
    std::vector<double> y;  // log2 g
};

Samples window_samples(const InformationScan& scan, double x_lo, double x_hi) {
    if (!(x_hi > x_lo)) fail(ErrorCode::InvalidArgument, "tail window must satisfy x_lo < x_hi");
    Samples s;
    for (std::size_t k = 0; k + 1 < scan.g.size(); ++k) {
        const double x = scan.x_grid[k];
        if (x < x_lo || x > x_hi || !(scan.g[k] > 0.0)) continue;
        s.x.push_back(x);
        s.y.push_back(std::log2(scan.g[k]));
    }
    if (s.x.size() < 10) {
        fail(ErrorCode::InsufficientTail, "tail window [" + std::to_string(x_lo) + ", " + std::to_string(x_hi) +
                                              "] has " + std::to_string(s.x.size()) + " populated bins");
    }
    return s;
}

// Gaussian elimination with partial pivoting on a 3x3 system.
std::optional<std::array<double, 3>> solve3(std::array<std::array<double, 3>, 3> A, std::array<double, 3> b) {
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r) {
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        }
        if (!(std::abs(A[piv][c]) > 0.0)) return std::nullopt;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (int r = c + 1; r < 3; ++r) {
            const double f = A[r][c] / A[c][c];
            for (int j = c; j < 3; ++j) A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = b[r];
        for (int j = r + 1; j < 3; ++j) s -= A[r][j] * x[j];
        x[r] = s / A[r][r];
    }
    return x;
}

struct StretchedModel {
    double lo;  // smallest x in the window

    // theta = (ln a, ln beta, eta), log2 D = -lo + e^eta
    double value(const std::array<double, 3>& th, double x) const {
        const double a = std::exp(th[0]);
        const double lb = th[1] / kLn2;  // log2 beta
        const double ell = -lo + std::exp(th[2]);
        return -x - std::log2(a) - lb / a + 1.0 + (1.0 / a - 1.0) * std::log2(x + ell);
    }

    std::array<double, 3> gradient(const std::array<double, 3>& th, double x) const {
        const double a = std::exp(th[0]);
        const double lb = th[1] / kLn2;
        const double e = std::exp(th[2]);
        const double u = x - lo + e;
        const double l2u = std::log2(u);
        return {a * (-1.0 / (a * kLn2) + lb / (a * a) - l2u / (a * a)), -1.0 / (a * kLn2),
                e * (1.0 / a - 1.0) / (u * kLn2)};
    }

    double cost(const std::array<double, 3>& th, const Samples& s) const {
        double c = 0.0;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double r = value(th, s.x[i]) - s.y[i];
            c += r * r;
        }
        return c;
    }
};

}  // namespace

TailFit fit_power_tail(const InformationScan& scan, double x_lo, double x_hi) {
    const Samples s = window_samples(scan, x_lo, x_hi);
    const double n = static_cast<double>(s.x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        sx += s.x[i];
        sy += s.y[i];
        sxx += s.x[i] * s.x[i];
        sxy += s.x[i] * s.y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    if (!(slope > -2.0 / 3.0 && slope < 0.0)) {
        fail(ErrorCode::DegenerateFit, "power-law slope " + std::to_string(slope) + " is outside (-2/3, 0)");
    }
    TailFit f;
    f.model = TailModel::PowerLaw;
    f.alpha = -slope / (1.0 + slope);
    f.c_sum = std::exp2(icpt) * (1.0 + f.alpha) / kLn2;
    f.c_side = std::pow(0.5 * f.c_sum, 1.0 + f.alpha);
    double ss = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double r = slope * s.x[i] + icpt - s.y[i];
        ss += r * r;
    }
    f.residual = std::sqrt(ss / n);
    f.x_lo = x_lo;
    f.x_hi = x_hi;
    f.points = s.x.size();
    return f;
}

TailFit fit_stretched_tail(const InformationScan& scan, double x_lo, double x_hi) {
    const Samples s = window_samples(scan, x_lo, x_hi);
    const StretchedModel model{s.x.front()};

    // start: log2 D = -onset, then a and beta from the regression of
    // log2 g + x - 1 on log2(x + log2 D)
    double ell0 = -scan.onset;
    if (!(s.x.front() + ell0 > 0.0)) ell0 = -s.x.front() + 1.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double u = std::log2(s.x[i] + ell0);
        const double y = s.y[i] + s.x[i] - 1.0;
        sx += u;
        sy += y;
        sxx += u * u;
        sxy += u * y;
    }
    const double m = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double b = (sy - m * sx) / n;
    double a0 = 1.0 / (1.0 + m);
    if (!(a0 > 0.05 && a0 < 20.0)) a0 = 1.0;
    const double lb0 = -a0 * (b + std::log2(a0));
    std::array<double, 3> th{std::log(a0), lb0 * kLn2, std::log(s.x.front() + ell0)};

    double cost = model.cost(th, s);
    double lambda = 1e-3;
    int it = 0;
    bool converged = false;
    for (; it < 200; ++it) {
        std::array<std::array<double, 3>, 3> JtJ{};
        std::array<double, 3> Jtr{};
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const auto gr = model.gradient(th, s.x[i]);
            const double r = model.value(th, s.x[i]) - s.y[i];
            for (int p = 0; p < 3; ++p) {
                Jtr[p] -= gr[p] * r;
                for (int q = 0; q < 3; ++q) JtJ[p][q] += gr[p] * gr[q];
            }
        }
        bool stepped = false;
        for (int tries = 0; tries < 30 && !stepped; ++tries) {
            auto A = JtJ;
            const double scale = JtJ[0][0] + JtJ[1][1] + JtJ[2][2];
            for (int p = 0; p < 3; ++p) A[p][p] += lambda * (A[p][p] + 1e-9 * scale);
            const auto d = solve3(A, Jtr);
            if (!d) {
                lambda *= 10.0;
                continue;
            }
            std::array<double, 3> trial{th[0] + (*d)[0], th[1] + (*d)[1], th[2] + (*d)[2]};
            const double c = model.cost(trial, s);
            if (std::isfinite(c) && c <= cost) {
                const double drop = cost - c;
                th = trial;
                stepped = true;
                lambda = std::max(lambda * 0.3, 1e-12);
                if (drop <= 1e-12 * cost + 1e-300 ||
                    std::abs((*d)[0]) + std::abs((*d)[1]) + std::abs((*d)[2]) < 1e-12) {
                    converged = true;
                }
                cost = c;
            } else {
                lambda *= 10.0;
            }
        }
        if (!stepped) converged = true;  // no descent direction left: at a minimum
        if (converged) break;
    }
    if (!converged) fail(ErrorCode::NoConvergence, "stretched tail fit did not converge in 200 iterations");

    TailFit f;
    f.model = TailModel::Stretched;
    f.a = std::exp(th[0]);
    f.beta = std::exp(th[1]);
    f.d_side = std::exp2(-model.lo + std::exp(th[2]));
    f.d_sum = 2.0 * f.d_side;
    f.residual = std::sqrt(cost / n);
    f.x_lo = x_lo;
    f.x_hi = x_hi;
    f.points = s.x.size();
    f.iterations = it + 1;
    return f;
}

TailFit classify_tail(const InformationScan& scan, ClassifyOptions opts) {
    const std::size_t nb = scan.g.size();
    const std::size_t populated = std::min(scan.populated_bins(), nb - 1);
    const std::size_t end = populated > 2 ? populated - 2 : 0;
    std::size_t lo = static_cast<std::size_t>(std::floor((1.0 - opts.upper_fraction) * static_cast<double>(end)));
    while (lo < end && scan.x_grid[lo] < scan.onset + opts.clearance_bits) ++lo;
    if (end < lo + opts.min_bins) {
        fail(ErrorCode::InsufficientTail, "only " + std::to_string(end > lo ? end - lo : 0) +
                                              " tail bins beyond the clearance; need " +
                                              std::to_string(opts.min_bins));
    }
    const double x_lo = scan.x_grid[lo];
    const double x_hi = scan.x_grid[end - 1];

    std::optional<TailFit> power, stretched;
    std::string why;
    try {
        power = fit_power_tail(scan, x_lo, x_hi);
    } catch (const Error& e) {
        why = e.what();
    }
    try {
        stretched = fit_stretched_tail(scan, x_lo, x_hi);
    } catch (const Error& e) {
        why += why.empty() ? e.what() : std::string("; ") + e.what();
    }
    if (!power && !stretched) fail(ErrorCode::DegenerateFit, "no tail model fits: " + why);
    if (!power) return *stretched;
    if (!stretched) return *power;
    TailFit best = power->residual <= stretched->residual ? *power : *stretched;
    const double hi = std::max(power->residual, stretched->residual);
    const double low = std::min(power->residual, stretched->residual);
    best.ambiguous = hi - low < 0.1 * hi;
    return best;
}

}  // namespace repur

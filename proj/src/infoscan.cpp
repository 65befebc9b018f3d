#include "repur/infoscan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "repur/error.hpp"

namespace repur {

double InformationScan::total_mass() const {
    double s = 0.0;
    for (double m : mass) s += m;
    return s;
}

std::size_t InformationScan::populated_bins() const {
    std::size_t last = 0;
    for (std::size_t k = 0; k < mass.size(); ++k) {
        if (mass[k] > 0.0) last = k + 1;
    }
    return last;
}

double onset_point(const SampledDensity& F) {
    const double M = *std::max_element(F.values().begin(), F.values().end());
    if (!(M > 0.0)) fail(ErrorCode::ZeroMass, "density is identically zero");
    return -std::log2(M);
}

namespace {

class Binner {
public:
    Binner(InformationScan& s, double onset, double bw, std::size_t bins)
        : s_(s), onset_(onset), bw_(bw), bins_(bins), moment_(bins, 0.0) {}

    void point(double x, double m) {
        const std::size_t k = index(x);
        s_.mass[k] += m;
        moment_[k] += m * x;
        if (k + 1 == bins_ && x >= onset_ + bw_ * static_cast<double>(bins_)) s_.overflow_mass += m;
    }

    // mass m spread uniformly over [a, b]
    void segment(double a, double b, double m) {
        if (a > b) std::swap(a, b);
        if (!(b - a > 1e-12 * bw_)) {
            point(0.5 * (a + b), m);
            return;
        }
        const double density = m / (b - a);
        double lo = a;
        while (lo < b) {
            const std::size_t k = index(lo);
            double hi = k + 1 == bins_ ? b : std::min(b, onset_ + bw_ * static_cast<double>(k + 1));
            if (!(hi > lo)) hi = std::min(b, std::nextafter(lo, b));
            const double part = density * (hi - lo);
            s_.mass[k] += part;
            moment_[k] += part * 0.5 * (lo + hi);
            if (k + 1 == bins_) {
                const double edge = onset_ + bw_ * static_cast<double>(bins_);
                if (hi > edge) s_.overflow_mass += density * (hi - std::max(lo, edge));
            }
            lo = hi;
        }
    }

    void finish() {
        for (std::size_t k = 0; k < bins_; ++k) {
            s_.centroid[k] = s_.mass[k] > 0.0 ? moment_[k] / s_.mass[k] : s_.x_grid[k];
        }
    }

private:
    std::size_t index(double x) const {
        const double u = std::floor((x - onset_) / bw_);
        if (!(u > 0.0)) return 0;
        return std::min(bins_ - 1, static_cast<std::size_t>(std::min(u, 1e15)));
    }

    InformationScan& s_;
    double onset_, bw_;
    std::size_t bins_;
    std::vector<double> moment_;
};

}  // namespace

InformationScan information_scan(const SampledDensity& F, ScanOptions opts) {
    if (opts.bins < 64) fail(ErrorCode::InvalidArgument, "information scan needs at least 64 bins");
    if (!(opts.span_bits > 0.0)) fail(ErrorCode::InvalidArgument, "scan span must be positive");
    const double onset = onset_point(F);
    const std::size_t nb = opts.bins;
    const double bw = opts.span_bits / static_cast<double>(nb);

    InformationScan s;
    s.x_grid = Grid1D(onset + 0.5 * bw, bw, nb);
    s.onset = onset;
    s.bin_width = bw;
    s.mass.assign(nb, 0.0);
    s.centroid.assign(nb, 0.0);
    Binner bin(s, onset, bw, nb);

    const auto v = F.values();
    const std::size_t n = v.size();
    const double dx = F.grid().dx();
    std::vector<double> info(n);
    for (std::size_t k = 0; k < n; ++k) {
        info[k] = v[k] > 0.0 ? -std::log2(v[k]) : std::numeric_limits<double>::infinity();
        if (!(v[k] > 0.0)) ++s.dropped_samples;
    }
    constexpr int kPieces = 4;  // sub-pieces per half-cell
    for (std::size_t k = 0; k < n; ++k) {
        if (!(v[k] > 0.0)) continue;
        for (const std::size_t j : {k - 1, k + 1}) {
            if (j >= n) continue;  // wraps for k = 0
            if (std::isinf(info[j])) {
                bin.point(info[k], 0.5 * dx * v[k]);
                continue;
            }
            // i(t) toward neighbour j, t in [0, 1/2] cells: quadratic through
            // the opposite neighbour when it exists, linear otherwise
            const std::size_t o = 2 * k - j;
            const double lin = info[j] - info[k];
            double b = lin, c = 0.0;
            if (o < n && std::isfinite(info[o])) {
                b = 0.5 * (info[j] - info[o]);
                c = 0.5 * (info[j] - 2.0 * info[k] + info[o]);
            }
            const auto at = [&](double t) { return info[k] + t * (b + c * t); };
            double ia = info[k];
            for (int q = 0; q < kPieces; ++q) {
                const double ib = at(0.5 * (q + 1) / kPieces);
                const double len = 0.5 * dx / kPieces;
                const double di = ib - ia;
                const double m = std::abs(di) > 1e-9
                                     ? len * (std::exp2(-ia) - std::exp2(-ib)) / (std::numbers::ln2 * di)
                                     : len * std::exp2(-0.5 * (ia + ib));
                bin.segment(ia, ib, m);
                ia = ib;
            }
        }
    }
    bin.finish();

    s.f.resize(nb);
    s.g.resize(nb);
    double cum = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
        cum += s.mass[k];
        s.f[k] = cum;
        s.g[k] = s.mass[k] / bw;
    }
    return s;
}

double LaplaceCheck::relative_error() const { return std::abs(lhs - rhs) / std::abs(rhs); }

LaplaceCheck laplace_consistency(const SampledDensity& F, const InformationScan& scan, double p) {
    if (!(p > 0.0 && p <= 2.0)) fail(ErrorCode::InvalidArgument, "Laplace check needs p in (0, 2]");
    if (scan.mass.size() < 512) fail(ErrorCode::InvalidArgument, "Laplace check needs a scan with >= 512 bins");
    double lhs = 0.0;
    for (std::size_t k = 0; k < scan.mass.size(); ++k) {
        if (scan.mass[k] > 0.0) lhs += scan.mass[k] * std::exp2((1.0 - p) * scan.centroid[k]);
    }
    std::vector<double> fp(F.size());
    for (std::size_t k = 0; k < F.size(); ++k) fp[k] = std::pow(F[k], p);
    return {lhs, integrate(F.grid(), fp)};
}

LaplaceCheck laplace_consistency(const SampledDensity& F, double p) {
    return laplace_consistency(F, information_scan(F), p);
}

bool equimeasurable(const SampledDensity& F1, const SampledDensity& F2, double tol) {
    std::vector<double> a(F1.values().begin(), F1.values().end());
    std::vector<double> b(F2.values().begin(), F2.values().end());
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const double da = F1.grid().dx(), db = F2.grid().dx();
    // level function at measure s
    auto level = [](const std::vector<double>& v, double d, double s) {
        const auto k = static_cast<std::size_t>(s / d);
        return k < v.size() ? v[k] : 0.0;
    };
    double err = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        err = std::max(err, std::abs(a[k] - level(b, db, (static_cast<double>(k) + 0.5) * da)));
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        err = std::max(err, std::abs(b[k] - level(a, da, (static_cast<double>(k) + 0.5) * db)));
    }
    return err <= tol;
}

std::vector<double> detect_peaks(const InformationScan& scan, double rel_threshold) {
    const auto& g = scan.g;
    const std::size_t n = g.size();
    std::vector<double> sm(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double l = k > 0 ? g[k - 1] : g[k];
        const double r = k + 1 < n ? g[k + 1] : g[k];
        sm[k] = (l + g[k] + r) / 3.0;
    }
    const double top = *std::max_element(sm.begin(), sm.end());
    std::vector<double> peaks;
    // the overflow bin is not a real feature
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double left = k > 0 ? sm[k - 1] : 0.0;
        if (sm[k] > left && sm[k] >= sm[k + 1] && sm[k] >= rel_threshold * top) {
            std::size_t best = k;
            for (std::size_t j = k > 0 ? k - 1 : 0; j <= k + 1; ++j) {
                if (g[j] > g[best]) best = j;
            }
            if (peaks.empty() || scan.x_grid[best] != peaks.back()) peaks.push_back(scan.x_grid[best]);
        }
    }
    return peaks;
}

}  // namespace repur

#include "repur/ext_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace repur {

ExtReal ExtReal::finite(double v) {
    if (std::isnan(v)) return indeterminate();
    if (std::isinf(v)) return v > 0 ? pos_inf() : neg_inf();
    return ExtReal(Kind::Finite, v);
}

double ExtReal::value() const noexcept {
    switch (kind_) {
        case Kind::Finite: return value_;
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        case Kind::Indeterminate: break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

namespace {

int sign_of(const ExtReal& x) {
    switch (x.kind()) {
        case ExtReal::Kind::PosInf: return 1;
        case ExtReal::Kind::NegInf: return -1;
        default: return x.value() > 0 ? 1 : (x.value() < 0 ? -1 : 0);
    }
}

}  // namespace

ExtReal operator*(ExtReal a, ExtReal b) {
    using K = ExtReal::Kind;
    if (a.kind_ == K::Indeterminate || b.kind_ == K::Indeterminate) return ExtReal::indeterminate();
    if (a.is_finite() && b.is_finite()) return ExtReal::finite(a.value_ * b.value_);
    const int s = sign_of(a) * sign_of(b);
    if (s == 0) return ExtReal::indeterminate();  // 0 * inf
    return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

ExtReal operator-(ExtReal a, double b) {
    if (!a.is_finite()) return a;
    return ExtReal::finite(a.value_ - b);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "INDETERMINATE";
    if (std::isinf(v)) return v > 0 ? "INF" : "-INF";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_ext(const ExtReal& v) {
    switch (v.kind()) {
        case ExtReal::Kind::Finite: return format_number(v.value());
        case ExtReal::Kind::PosInf: return "INF";
        case ExtReal::Kind::NegInf: return "-INF";
        case ExtReal::Kind::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

}  // namespace repur

#pragma once

#include <string>

namespace repur {

/// Real number extended with +inf, -inf and an explicit "indeterminate"
/// marker for products such as 0 * inf whose value depends on how the
/// divergence was regularized.
class ExtReal {
public:
    enum class Kind { Finite, PosInf, NegInf, Indeterminate };

    constexpr ExtReal() = default;

    static ExtReal finite(double v);
    static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf, 0.0); }
    static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf, 0.0); }
    static constexpr ExtReal indeterminate() { return ExtReal(Kind::Indeterminate, 0.0); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_indeterminate() const noexcept { return kind_ == Kind::Indeterminate; }

    /// Finite value, +/-HUGE_VAL for infinities, NaN for indeterminate.
    double value() const noexcept;

    friend ExtReal operator*(ExtReal a, ExtReal b);
    friend ExtReal operator-(ExtReal a, double b);
    friend bool operator==(const ExtReal&, const ExtReal&) = default;

private:
    constexpr ExtReal(Kind k, double v) : kind_(k), value_(v) {}

    Kind kind_ = Kind::Finite;
    double value_ = 0.0;
};

/// "%.12g" for finite values, INF / -INF / INDETERMINATE otherwise.
std::string format_number(double v);
std::string format_ext(const ExtReal& v);

}  // namespace repur

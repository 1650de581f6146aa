#include "qrdw/dyadic.hpp"

namespace qrdw {

DyadicValue DyadicValue::from_integer(std::int64_t n) { return from_ratio_pow2(n, 0); }

DyadicValue DyadicValue::from_ratio_pow2(std::int64_t numerator, int denominator_exp) {
    if (numerator == 0) {
        return {};
    }
    int e = -denominator_exp;
    while (numerator % 2 == 0) {
        numerator /= 2;
        ++e;
    }
    return DyadicValue(numerator, e);
}

std::string DyadicValue::to_string() const {
    if (mantissa_ == 0) {
        return "0";
    }
    if (exponent_ >= 0) {
        const std::int64_t abs_m = mantissa_ < 0 ? -mantissa_ : mantissa_;
        if (exponent_ <= 62 && abs_m <= (std::int64_t{1} << (62 - exponent_))) {
            return std::to_string(mantissa_ * (std::int64_t{1} << exponent_));
        }
        return std::to_string(mantissa_) + "*2^" + std::to_string(exponent_);
    }
    if (exponent_ >= -62) {
        return std::to_string(mantissa_) + "/" + std::to_string(std::int64_t{1} << -exponent_);
    }
    return std::to_string(mantissa_) + "/2^" + std::to_string(-exponent_);
}

} // namespace qrdw

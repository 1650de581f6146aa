#pragma once

#include <cstdint>
#include <string>

namespace qrdw {

// Exact number m * 2^e with m odd, or zero (m = 0, e = 0). Equality is exact;
// the invariant values 0, 2^(r-2) and the r=1 value 1/2 all live here without
// rounding.
class DyadicValue {
  public:
    constexpr DyadicValue() = default;

    static DyadicValue zero() { return {}; }
    static DyadicValue from_integer(std::int64_t n);
    // numerator / 2^denominator_exp, canonicalized
    static DyadicValue from_ratio_pow2(std::int64_t numerator, int denominator_exp);
    static DyadicValue pow2(int e) { return DyadicValue(1, e); }

    std::int64_t mantissa() const { return mantissa_; }
    int exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_ == 0; }

    bool operator==(const DyadicValue&) const = default;

    // "0", "4", "1/2", "3/8"; "m*2^e" or "m/2^e" outside 64-bit render range
    std::string to_string() const;

  private:
    constexpr DyadicValue(std::int64_t m, int e) : mantissa_(m), exponent_(e) {}

    std::int64_t mantissa_ = 0;
    int exponent_ = 0;
};

} // namespace qrdw

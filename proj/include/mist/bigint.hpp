#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mist {

// Exact non-negative integer of unbounded width. Every counting path in the
// toolkit stays in this type: the quantities involved grow like 2^(n/2), and
// no floating point is allowed anywhere near them.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    static BigUint pow2(unsigned exponent);
    static BigUint from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    std::uint64_t to_u64() const;  // throws std::overflow_error when > 64 bits
    std::string to_decimal() const;

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
    BigUint& operator*=(const BigUint& rhs);

    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

  private:
    // Base 2^32 limbs, least significant first, no trailing zeros.
    // Zero is the empty vector.
    std::vector<std::uint32_t> limbs_;
};

using Count = BigUint;

}  // namespace mist

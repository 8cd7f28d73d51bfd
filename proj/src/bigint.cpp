#include "mist/bigint.hpp"

#include <stdexcept>

namespace mist {

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value));
        value >>= 32;
    }
}

BigUint BigUint::pow2(unsigned exponent) {
    BigUint out;
    out.limbs_.assign(exponent / 32 + 1, 0);
    out.limbs_.back() = 1u << (exponent % 32);
    return out;
}

BigUint BigUint::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("BigUint::from_decimal: empty string");
    }
    BigUint out;
    const BigUint ten(10);
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("BigUint::from_decimal: non-digit character");
        }
        out *= ten;
        out += BigUint(static_cast<std::uint64_t>(c - '0'));
    }
    return out;
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) {
        throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    }
    std::uint64_t out = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        out = (out << 32) | limbs_[i];
    }
    return out;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) {
        return "0";
    }
    constexpr std::uint32_t kChunk = 1000000000u;  // 10^9 per division round
    std::vector<std::uint32_t> work(limbs_);
    std::vector<std::uint32_t> groups;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        groups.push_back(static_cast<std::uint32_t>(rem));
        while (!work.empty() && work.back() == 0) {
            work.pop_back();
        }
    }
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) {
        limbs_.resize(rhs.limbs_.size(), 0);
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (carry == 0 && i >= rhs.limbs_.size()) {
            break;
        }
        std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) {
        throw std::invalid_argument("BigUint subtraction would go negative");
    }
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                           (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.limbs_.empty() || rhs.limbs_.empty()) {
        return out;
    }
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        const std::uint64_t a = lhs.limbs_[i];
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!out.limbs_.empty() && out.limbs_.back() == 0) {
        out.limbs_.pop_back();
    }
    return out;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
        return limbs_.size() <=> rhs.limbs_.size();
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) {
            return limbs_[i] <=> rhs.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace mist

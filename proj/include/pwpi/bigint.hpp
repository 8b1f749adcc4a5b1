/**
 * @file bigint.hpp
 * @brief Minimal unsigned big integer, just enough for exact group orders.
 *
 * Group orders multiply factors that individually fit in 64 bits but whose
 * product does not. Only the operations needed for that are provided:
 * construction from uint64, multiplication by a uint64 factor, powers of a
 * small base, decimal rendering, and comparison against a uint64 budget.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pwpi {

class BigUint {
  public:
    BigUint() : limbs_{0} {}

    explicit BigUint(std::uint64_t value) {
        if (value == 0) {
            limbs_.push_back(0);
            return;
        }
        while (value > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
            value /= kBase;
        }
    }

    /// In-place multiplication by a 64-bit factor.
    BigUint& operator*=(std::uint64_t factor) {
        if (factor == 0) {
            limbs_.assign(1, 0);
            return *this;
        }
        // Split the factor so every partial product fits in unsigned 128-free
        // arithmetic: limb < 1e9 and half-factor < 2^32.
        std::uint64_t lo = factor % kBase;
        std::uint64_t hi = factor / kBase;
        std::vector<std::uint32_t> out(limbs_.size() + 3, 0);
        auto add_at = [&out](std::size_t pos, std::uint64_t value) {
            while (value > 0) {
                if (pos >= out.size()) out.push_back(0);
                std::uint64_t sum = out[pos] + value % kBase;
                out[pos] = static_cast<std::uint32_t>(sum % kBase);
                value = value / kBase + sum / kBase;
                ++pos;
            }
        };
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t limb = limbs_[i];
            if (limb == 0) continue;
            add_at(i, limb * lo);
            if (hi != 0) add_at(i + 1, limb * hi);
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        limbs_ = std::move(out);
        return *this;
    }

    bool operator==(const BigUint& other) const = default;

    bool fits_u64() const {
        if (limbs_.size() < 3) return true;
        if (limbs_.size() > 3) return false;
        // 2^64-1 = 18'446744073'709551615 in base-1e9 limbs
        if (limbs_[2] != 18) return limbs_[2] < 18;
        if (limbs_[1] != 446744073) return limbs_[1] < 446744073;
        return limbs_[0] <= 709551615;
    }

    std::uint64_t as_u64() const {
        std::uint64_t value = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) value = value * kBase + limbs_[i];
        return value;
    }

    bool exceeds(std::uint64_t bound) const {
        if (!fits_u64()) return true;
        return as_u64() > bound;
    }

    std::string to_string() const {
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

  private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;  // little-endian base-1e9
};

inline BigUint big_pow(std::uint64_t base, std::uint64_t exponent) {
    BigUint result(1);
    for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// q^e without overflow; nullopt once the value leaves uint64 range.
inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

}  // namespace pwpi

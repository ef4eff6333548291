/*
   Copyright 2026 The tangle authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TANGLE_BIGNAT_HPP
#define TANGLE_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tangle/core.hpp"

namespace tangle {

/// Arbitrary-size natural number. Only the handful of operations the
/// exponent arithmetic needs: decimal parsing, bit access, reduction modulo
/// a word, small subtraction and comparison.
class BigNat {
   public:
    BigNat() = default;

    static BigNat from_u64(std::uint64_t v) {
        BigNat n;
        while (v) {
            n.limbs_.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
        return n;
    }

    static BigNat from_decimal(const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        BigNat n;
        for (char ch : s) {
            if (ch < '0' || ch > '9')
                throw ParseError(std::string("invalid digit '") + ch + "' in integer literal");
            n.mul_add_small(10, static_cast<std::uint32_t>(ch - '0'));
        }
        return n;
    }

    bool is_zero() const { return limbs_.empty(); }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = 0;
        while (top) {
            top >>= 1;
            ++b;
        }
        return 32 * (limbs_.size() - 1) + b;
    }

    bool bit(std::size_t i) const {
        const std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1U;
    }

    std::uint64_t mod_u64(std::uint64_t m) const {
        unsigned __int128 r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) r = ((r << 32) | limbs_[i]) % m;
        return static_cast<std::uint64_t>(r);
    }

    /// -1, 0 or 1 against a word-sized value.
    int compare_u64(std::uint64_t v) const {
        if (limbs_.size() > 2) return 1;
        std::uint64_t self = to_u64_unchecked();
        if (self < v) return -1;
        return self > v ? 1 : 0;
    }

    /// Requires *this >= v.
    BigNat minus_u64(std::uint64_t v) const {
        BigNat r = *this;
        std::uint64_t borrow = v;
        for (std::size_t i = 0; i < r.limbs_.size() && borrow; ++i) {
            std::uint64_t cur = r.limbs_[i];
            std::uint64_t take = borrow & 0xffffffffULL;
            if (cur >= take) {
                r.limbs_[i] = static_cast<std::uint32_t>(cur - take);
                borrow >>= 32;
            } else {
                r.limbs_[i] = static_cast<std::uint32_t>(cur + 0x100000000ULL - take);
                borrow = (borrow >> 32) + 1;
            }
        }
        if (borrow) throw LengthMismatchError("BigNat subtraction underflow");
        while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
        return r;
    }

    /// Requires compare_u64 to have shown the value fits.
    std::uint64_t to_u64() const {
        if (limbs_.size() > 2) throw LengthMismatchError("BigNat does not fit in 64 bits");
        return to_u64_unchecked();
    }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

   private:
    void mul_add_small(std::uint32_t mul, std::uint32_t addend) {
        std::uint64_t carry = addend;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::uint64_t to_u64_unchecked() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace tangle

#endif  // TANGLE_BIGNAT_HPP

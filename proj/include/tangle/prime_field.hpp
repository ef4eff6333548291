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

#ifndef TANGLE_PRIME_FIELD_HPP
#define TANGLE_PRIME_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/ntt.hpp"

namespace tangle {

/// Deterministic Miller-Rabin for n < 2^64 (the 12 smallest prime witnesses
/// are known to be sufficient in this range).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = modarith::pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1 && witness; ++i) {
            x = modarith::mul_mod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

/**
 * The prime field F_p for an odd prime p < 2^63. Elements are canonical
 * residues stored as std::uint64_t. The descriptor is immutable and freely
 * copyable; all operations are const.
 */
class PrimeField {
   public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ULL << 63))
            throw NotPrimeError("modulus too large: primes up to 63 bits are supported");
        if (p == 2 || !is_prime_u64(p))
            throw NotPrimeError("modulus " + std::to_string(p) + " is not an odd prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return modarith::add_mod(a, b, p_); }
    Elem sub(Elem a, Elem b) const { return modarith::sub_mod(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return modarith::mul_mod(a, b, p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero in F_p");
        return modarith::inv_mod(a, p_);
    }
    Elem pow(Elem a, std::uint64_t e) const { return modarith::pow_mod(a, e, p_); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::uint64_t characteristic() const { return p_; }
    std::size_t degree_over_prime() const { return 1; }

    Elem from_residue(std::uint64_t r) const { return r % p_; }
    Elem from_int(std::int64_t s) const {
        std::int64_t m = s % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(m);
    }

    std::vector<Elem> poly_mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
        return ntt::multiply_mod_prime(a, b, p_);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

   private:
    std::uint64_t p_;
};

static_assert(Field<PrimeField>);

}  // namespace tangle

#endif  // TANGLE_PRIME_FIELD_HPP

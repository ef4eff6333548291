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

/**
 * @file ntt.hpp
 * @brief Number-theoretic transforms and dense coefficient multiplication
 *        modulo an arbitrary word-sized prime.
 *
 * Two strategies are provided behind a single entry point:
 *   - if p-1 has enough 2-adic valuation, a transform directly over F_p;
 *   - otherwise, transforms over three fixed NTT-friendly primes whose
 *     product exceeds any coefficient of the integer product, followed by
 *     Garner recombination and reduction mod p.
 *
 * Small products fall back to schoolbook, which is faster below the
 * transform break-even point.
 */

#ifndef TANGLE_NTT_HPP
#define TANGLE_NTT_HPP

#include <cstdint>
#include <vector>

namespace tangle::modarith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 p) {
    u64 s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul_mod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

inline u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Inverse of a mod p for prime p, a != 0 (extended Euclid).
inline u64 inv_mod(u64 a, u64 p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<u64>(t);
}

}  // namespace tangle::modarith

namespace tangle::ntt {

using modarith::u128;
using modarith::u64;

/// An NTT-friendly prime q = c * 2^k + 1 together with a primitive root.
struct TransformPrime {
    u64 q;
    u64 root;       // primitive root of F_q
    int two_adicity;
};

/// Fixed primes for the three-prime strategy. Their product (186 bits)
/// dominates n * (p-1)^2 for any p < 2^63 and transform length up to 2^56.
inline constexpr TransformPrime kCrtPrimes[3] = {
    {4179340454199820289ULL, 3, 57},   // 29 * 2^57 + 1
    {1945555039024054273ULL, 5, 56},   // 27 * 2^56 + 1
    {6269010681299730433ULL, 5, 56},   // 87 * 2^56 + 1
};

inline int ceil_log2(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

/// In-place radix-2 transform of length |a| = 2^k modulo q, where w is a
/// primitive 2^k-th root of unity. Decimation in time with a bit-reversal
/// pass up front.
inline void transform(std::vector<u64>& a, u64 w, u64 q) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const u64 wl = modarith::pow_mod(w, n / len, q);
        for (std::size_t i = 0; i < n; i += len) {
            u64 wj = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                u64 u = a[i + j];
                u64 v = modarith::mul_mod(a[i + j + len / 2], wj, q);
                a[i + j] = modarith::add_mod(u, v, q);
                a[i + j + len / 2] = modarith::sub_mod(u, v, q);
                wj = modarith::mul_mod(wj, wl, q);
            }
        }
    }
}

/// Cyclic convolution of a and b (already reduced mod q) at length 2^k >=
/// |a|+|b|-1, modulo the NTT prime q with 2^k-th root derived from `root`.
inline std::vector<u64> convolve_mod_ntt_prime(std::vector<u64> a, std::vector<u64> b,
                                               u64 q, u64 root, int two_adicity) {
    const std::size_t rlen = a.size() + b.size() - 1;
    const int k = ceil_log2(rlen);
    const std::size_t n = std::size_t{1} << k;
    (void)two_adicity;  // callers guarantee k <= two_adicity
    a.resize(n, 0);
    b.resize(n, 0);
    const u64 w = modarith::pow_mod(root, (q - 1) >> k, q);
    transform(a, w, q);
    transform(b, w, q);
    for (std::size_t i = 0; i < n; ++i) a[i] = modarith::mul_mod(a[i], b[i], q);
    const u64 winv = modarith::inv_mod(w, q);
    transform(a, winv, q);
    const u64 ninv = modarith::inv_mod(n % q, q);
    for (std::size_t i = 0; i < n; ++i) a[i] = modarith::mul_mod(a[i], ninv, q);
    a.resize(rlen);
    return a;
}

inline std::vector<u64> multiply_schoolbook(const std::vector<u64>& a,
                                            const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = modarith::add_mod(out[i + j], modarith::mul_mod(a[i], b[j], p), p);
        }
    }
    return out;
}

/// Finds an element of order exactly 2^k in F_p (requires 2^k | p-1).
/// No factorization of p-1 is needed: w = a^((p-1)/2^k) has order 2^k
/// iff w^(2^(k-1)) = -1.
inline u64 root_of_unity(u64 p, int k) {
    for (u64 a = 2;; ++a) {
        u64 w = modarith::pow_mod(a, (p - 1) >> k, p);
        if (w == 0) continue;
        u64 t = w;
        for (int i = 0; i < k - 1; ++i) t = modarith::mul_mod(t, t, p);
        if (t == p - 1) return w;
    }
}

inline int two_adic_valuation(u64 m) {
    int v = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++v;
    }
    return v;
}

constexpr std::size_t kSchoolbookThreshold = 32;

/// Product of two coefficient sequences over F_p (entries in [0, p)),
/// p an odd prime below 2^63. Subquadratic above the schoolbook threshold.
inline std::vector<u64> multiply_mod_prime(const std::vector<u64>& a,
                                           const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < kSchoolbookThreshold || b.size() < kSchoolbookThreshold)
        return multiply_schoolbook(a, b, p);

    const std::size_t rlen = a.size() + b.size() - 1;
    const int k = ceil_log2(rlen);

    if (p > 2 && two_adic_valuation(p - 1) >= k) {
        // direct transform over F_p itself
        const u64 w = root_of_unity(p, k);
        std::vector<u64> fa = a, fb = b;
        const std::size_t n = std::size_t{1} << k;
        fa.resize(n, 0);
        fb.resize(n, 0);
        transform(fa, w, p);
        transform(fb, w, p);
        for (std::size_t i = 0; i < n; ++i) fa[i] = modarith::mul_mod(fa[i], fb[i], p);
        transform(fa, modarith::inv_mod(w, p), p);
        const u64 ninv = modarith::inv_mod(n % p, p);
        for (std::size_t i = 0; i < n; ++i) fa[i] = modarith::mul_mod(fa[i], ninv, p);
        fa.resize(rlen);
        return fa;
    }

    // three-prime CRT: integer product coefficients, recombined mod p
    const auto& P = kCrtPrimes;
    std::vector<u64> res[3];
    for (int t = 0; t < 3; ++t) {
        std::vector<u64> ra(a.size()), rb(b.size());
        for (std::size_t i = 0; i < a.size(); ++i) ra[i] = a[i] % P[t].q;
        for (std::size_t i = 0; i < b.size(); ++i) rb[i] = b[i] % P[t].q;
        res[t] = convolve_mod_ntt_prime(std::move(ra), std::move(rb), P[t].q,
                                        P[t].root, P[t].two_adicity);
    }

    const u64 q0 = P[0].q, q1 = P[1].q, q2 = P[2].q;
    const u64 inv_q0_mod_q1 = modarith::inv_mod(q0 % q1, q1);
    const u64 q0q1_mod_q2 = modarith::mul_mod(q0 % q2, q1 % q2, q2);
    const u64 inv_q0q1_mod_q2 = modarith::inv_mod(q0q1_mod_q2, q2);
    const u64 q0_mod_p = q0 % p;
    const u64 q0q1_mod_p = modarith::mul_mod(q0 % p, q1 % p, p);

    std::vector<u64> out(rlen);
    for (std::size_t i = 0; i < rlen; ++i) {
        const u64 x0 = res[0][i], x1 = res[1][i], x2 = res[2][i];
        // Garner: value = x0 + q0*t1 + q0*q1*t2
        const u64 t1 = modarith::mul_mod(modarith::sub_mod(x1 % q1, x0 % q1, q1),
                                         inv_q0_mod_q1, q1);
        u64 s = modarith::add_mod(x0 % q2, modarith::mul_mod(q0 % q2, t1, q2), q2);
        const u64 t2 = modarith::mul_mod(modarith::sub_mod(x2, s, q2), inv_q0q1_mod_q2, q2);
        u64 v = x0 % p;
        v = modarith::add_mod(v, modarith::mul_mod(q0_mod_p, t1 % p, p), p);
        v = modarith::add_mod(v, modarith::mul_mod(q0q1_mod_p, t2 % p, p), p);
        out[i] = v;
    }
    return out;
}

}  // namespace tangle::ntt

#endif  // TANGLE_NTT_HPP

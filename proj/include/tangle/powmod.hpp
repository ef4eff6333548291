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
 * @file powmod.hpp
 * @brief x^D mod P for huge exponents D, exploiting repeated factors of P.
 *
 * Modulo T^mu with T irreducible the power is obtained by tangling the jet
 * (xi + alpha)^D, whose coefficients are one binomial row against powers of
 * alpha in K. For general P the squarefree decomposition splits the work and
 * the Chinese Remainder Theorem reassembles it; squarefree factors that are
 * not irreducible fall back to plain repeated squaring.
 */

#ifndef TANGLE_POWMOD_HPP
#define TANGLE_POWMOD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tangle/bignat.hpp"
#include "tangle/core.hpp"
#include "tangle/uni_tangle.hpp"

namespace tangle {

/// a^e in the extension field, e arbitrary precision.
template <Field B>
typename ExtensionField<B>::Elem ext_pow(const ExtensionField<B>& k,
                                         const typename ExtensionField<B>::Elem& a,
                                         const BigNat& e) {
    auto r = k.one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = k.mul(r, r);
        if (e.bit(i)) r = k.mul(r, a);
    }
    return r;
}

/// Plain square-and-multiply for x^D modulo a monic polynomial.
template <Field B>
Poly<B> pow_x_mod_binary(const B& base, const BigNat& d, const Poly<B>& m) {
    Poly<B> r = rem(base, poly_one(base), m);
    for (std::size_t i = d.bit_length(); i-- > 0;) {
        r = rem(base, mul(base, r, r), m);
        if (d.bit(i)) r = rem(base, shift_up(base, r, 1), m);
    }
    return r;
}

/// x^D mod T^mu through tangling of (xi + alpha)^D. The jet coefficient of
/// xi^i is binom(D, i) alpha^(D-i); the binomial row follows its recurrence
/// with D reduced into the prime field, and the alpha powers descend from
/// one big powering.
template <Field B>
Poly<B> pow_x_mod_power(const PowerModulus<B>& m, const BigNat& d) {
    const auto& base = m.base();
    if (d.compare_u64(m.n()) < 0)
        return poly_monomial(base, base.one(), static_cast<std::size_t>(d.to_u64()));

    const std::uint64_t p = base.characteristic();
    const std::size_t mu = m.mu();
    const auto& k = m.ext();

    std::vector<std::uint64_t> binom(mu);
    binom[0] = 1;
    const std::uint64_t dbar = d.mod_u64(p);
    for (std::size_t i = 0; i + 1 < mu; ++i) {
        // binom(D,i+1) = binom(D,i) * (D-i) / (i+1)
        const std::uint64_t num = modarith::sub_mod(dbar, i % p, p);
        const std::uint64_t div =
            modarith::mul_mod(m.factorial(i), m.inv_factorial(i + 1), p);
        binom[i + 1] = modarith::mul_mod(modarith::mul_mod(binom[i], num, p), div, p);
    }

    const auto alpha = k.generator();
    auto cur = ext_pow(k, alpha, d.minus_u64(mu - 1));  // alpha^(D-mu+1)
    typename PowerModulus<B>::Jet jet(mu, k.zero());
    for (std::size_t i = mu; i-- > 0;) {
        jet[i] = m.scale_elem(cur, binom[i]);
        if (i > 0) cur = k.mul(cur, alpha);
    }
    return tangle(m, jet);
}

/// x^D mod P for monic-normalizable P: squarefree-decompose, run the
/// tangling path modulo each irreducible power, recombine by CRT.
template <Field B>
Poly<B> pow_x_mod(const B& base, const Poly<B>& p, const BigNat& d) {
    if (p.deg() < 1)
        throw DivisionByZeroPolyError("pow_x_mod: modulus must be nonconstant");
    if (base.characteristic() <= static_cast<std::uint64_t>(p.deg()))
        throw CharacteristicTooSmallError(
            "pow_x_mod needs characteristic > deg P (squarefree decomposition)");
    Poly<B> pm = monic(base, p);
    if (d.compare_u64(static_cast<std::uint64_t>(pm.deg())) < 0)
        return poly_monomial(base, base.one(), static_cast<std::size_t>(d.to_u64()));

    auto parts = squarefree_decomposition(base, pm);
    std::vector<std::pair<Poly<B>, Poly<B>>> residues;
    residues.reserve(parts.size());
    for (const auto& part : parts) {
        if (is_irreducible(base, part.factor)) {
            PowerModulus<B> mod(base, part.factor, part.multiplicity, /*validate=*/false);
            residues.emplace_back(pow_x_mod_power(mod, d), mod.power(part.multiplicity));
        } else {
            // reducible squarefree factor: K would not be a field, use the
            // generic binary powering for this component
            Poly<B> me = poly_one(base);
            for (std::size_t i = 0; i < part.multiplicity; ++i)
                me = mul(base, me, part.factor);
            residues.emplace_back(pow_x_mod_binary(base, d, me), std::move(me));
        }
    }
    if (residues.size() == 1) return residues[0].first;
    return crt_combine(base, residues);
}

}  // namespace tangle

#endif  // TANGLE_POWMOD_HPP

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
 * @file ext_field.hpp
 * @brief Extension fields B[y]/<T(y)> over any coefficient field B, and the
 *        two-level towers built from them.
 *
 * Elements are fixed-length coefficient vectors (length deg T, ascending
 * powers of the generator). Dense polynomial multiplication over an
 * extension packs through Kronecker substitution into the base field, so a
 * tower bottoms out in a single prime-field product.
 */

#ifndef TANGLE_EXT_FIELD_HPP
#define TANGLE_EXT_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/poly.hpp"
#include "tangle/prime_field.hpp"

namespace tangle {

/// True iff T is irreducible over the (finite) field `base`. Scans for
/// irreducible factors of degree j <= deg(T)/2 through gcd(x^(q^j) - x, T),
/// where q = |base|; q-th powers are taken as iterated p-th powers so q is
/// never materialized.
template <Field B>
bool is_irreducible(const B& base, const Poly<B>& t) {
    const std::ptrdiff_t m = t.deg();
    if (m < 1) return false;
    if (m == 1) return true;
    const std::uint64_t p = base.characteristic();
    const std::size_t e = base.degree_over_prime();
    Poly<B> x = poly_monomial(base, base.one(), 1);
    Poly<B> u = rem(base, x, t);
    for (std::ptrdiff_t j = 1; j <= m / 2; ++j) {
        for (std::size_t i = 0; i < e; ++i) u = pow_mod_poly(base, u, p, t);
        if (gcd(base, sub(base, u, x), t).deg() != 0) return false;
    }
    return true;
}

template <Field B>
bool is_separable(const B& base, const Poly<B>& t) {
    return gcd(base, t, derivative(base, t)).deg() == 0;
}

/**
 * The field K = B[y]/<T(y)> for monic irreducible separable T. Elements are
 * coefficient vectors of length deg T over B. The descriptor is immutable;
 * construction verifies the hypotheses on T unless `validate` is false (used
 * internally when the caller has already checked them).
 */
template <Field B>
class ExtensionField {
   public:
    using Base = B;
    using BaseElem = typename B::Elem;
    using Elem = std::vector<BaseElem>;

    ExtensionField(B base, Poly<B> modulus, std::string generator_name = "a",
                   bool validate = true)
        : base_(std::move(base)), t_(std::move(modulus)), name_(std::move(generator_name)) {
        if (t_.deg() < 1 || !is_monic(base_, t_))
            throw NotIrreducibleError("extension modulus must be monic of degree >= 1");
        if (validate) {
            if (!is_separable(base_, t_))
                throw NotSeparableError("extension modulus is not separable: gcd(T, T') != 1");
            if (!is_irreducible(base_, t_))
                throw NotIrreducibleError("extension modulus is reducible; quotient is not a field");
        }
        d_ = static_cast<std::size_t>(t_.deg());
    }

    const B& base() const { return base_; }
    const Poly<B>& modulus() const { return t_; }
    const std::string& generator_name() const { return name_; }
    std::size_t degree() const { return d_; }

    Elem zero() const { return Elem(d_, base_.zero()); }
    Elem one() const {
        Elem r(d_, base_.zero());
        r[0] = base_.one();
        return r;
    }

    /// The residue class of y.
    Elem generator() const {
        if (d_ == 1) {
            Elem r(1, base_.neg(t_.c[0]));
            return r;
        }
        Elem r(d_, base_.zero());
        r[1] = base_.one();
        return r;
    }

    Elem embed(const BaseElem& a) const {
        Elem r(d_, base_.zero());
        r[0] = a;
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(d_, base_.zero());
        for (std::size_t i = 0; i < d_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(d_, base_.zero());
        for (std::size_t i = 0; i < d_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(d_, base_.zero());
        for (std::size_t i = 0; i < d_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        auto conv = base_.poly_mul(a, b);
        reduce_coeffs(conv);
        return conv;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw DivisionByZeroError("inverse of zero in extension field");
        auto e = xgcd(base_, to_poly(a), t_);
        // T irreducible and a nonzero force a unit gcd
        if (e.g.deg() != 0)
            throw NotInvertibleError("element shares a factor with the field modulus");
        Poly<B> s = scale(base_, e.s, base_.inv(e.g.c[0]));
        return from_poly(rem(base_, s, t_));
    }

    bool is_zero(const Elem& a) const {
        for (const auto& x : a)
            if (!base_.is_zero(x)) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (std::size_t i = 0; i < d_; ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }

    std::uint64_t characteristic() const { return base_.characteristic(); }
    std::size_t degree_over_prime() const { return d_ * base_.degree_over_prime(); }

    Elem from_residue(std::uint64_t r) const { return embed(base_.from_residue(r)); }
    Elem from_int(std::int64_t s) const { return embed(base_.from_int(s)); }

    Elem from_poly(const Poly<B>& a) const {
        auto c = a.c;
        reduce_coeffs(c);
        return c;
    }
    Poly<B> to_poly(const Elem& a) const { return normalized(base_, Elem(a)); }

    /// Dense product of coefficient sequences over K by Kronecker packing
    /// into B at stride 2d-1, one base-field product, then per-coefficient
    /// reduction modulo T.
    std::vector<Elem> poly_mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
        if (a.empty() || b.empty()) return {};
        const std::size_t stride = 2 * d_ - 1;
        std::vector<BaseElem> pa(a.size() * stride, base_.zero());
        std::vector<BaseElem> pb(b.size() * stride, base_.zero());
        for (std::size_t j = 0; j < a.size(); ++j)
            std::copy(a[j].begin(), a[j].end(),
                      pa.begin() + static_cast<std::ptrdiff_t>(j * stride));
        for (std::size_t j = 0; j < b.size(); ++j)
            std::copy(b[j].begin(), b[j].end(),
                      pb.begin() + static_cast<std::ptrdiff_t>(j * stride));
        auto conv = base_.poly_mul(pa, pb);
        conv.resize((a.size() + b.size() - 1) * stride, base_.zero());
        std::vector<Elem> out(a.size() + b.size() - 1);
        for (std::size_t j = 0; j < out.size(); ++j) {
            std::vector<BaseElem> row(
                conv.begin() + static_cast<std::ptrdiff_t>(j * stride),
                conv.begin() + static_cast<std::ptrdiff_t>(j * stride + stride));
            reduce_coeffs(row);
            out[j] = std::move(row);
        }
        return out;
    }

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.base_ == b.base_ && a.t_ == b.t_;
    }

   private:
    /// In-place reduction of a raw coefficient vector modulo the monic T,
    /// then padding to length d.
    void reduce_coeffs(std::vector<BaseElem>& r) const {
        for (std::size_t i = r.size(); i-- > d_;) {
            const BaseElem c = r[i];
            if (!base_.is_zero(c)) {
                for (std::size_t j = 0; j < d_; ++j)
                    r[i - d_ + j] = base_.sub(r[i - d_ + j], base_.mul(c, t_.c[j]));
            }
        }
        r.resize(d_, base_.zero());
    }

    B base_;
    Poly<B> t_;
    std::string name_;
    std::size_t d_ = 0;
};

using ExtField = ExtensionField<PrimeField>;
using TowerField = ExtensionField<ExtField>;

static_assert(Field<ExtField>);
static_assert(Field<TowerField>);

/// Flattens a tower element to its length d1*d2 prime-field coefficient
/// vector, inner generator fastest: index j*d1 + i holds the coefficient of
/// a1^i a2^j.
inline std::vector<std::uint64_t> tower_flatten(const TowerField& k,
                                                const TowerField::Elem& a) {
    const std::size_t d1 = k.base().degree(), d2 = k.degree();
    if (a.size() != d2) throw LengthMismatchError("tower_flatten: element has wrong length");
    std::vector<std::uint64_t> out(d1 * d2, 0);
    for (std::size_t j = 0; j < d2; ++j) {
        if (a[j].size() != d1)
            throw LengthMismatchError("tower_flatten: inner component has wrong length");
        for (std::size_t i = 0; i < d1; ++i) out[j * d1 + i] = a[j][i];
    }
    return out;
}

inline TowerField::Elem tower_unflatten(const TowerField& k,
                                        const std::vector<std::uint64_t>& v) {
    const std::size_t d1 = k.base().degree(), d2 = k.degree();
    if (v.size() != d1 * d2)
        throw LengthMismatchError("tower_unflatten: expected d1*d2 coefficients");
    TowerField::Elem a(d2, std::vector<std::uint64_t>(d1, 0));
    for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t i = 0; i < d1; ++i) a[j][i] = v[j * d1 + i];
    return a;
}

}  // namespace tangle

#endif  // TANGLE_EXT_FIELD_HPP

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
 * @file uni_tangle.hpp
 * @brief The untangling isomorphism B[x]/<T^mu> -> K[xi]/<xi^mu> for monic
 *        separable irreducible T (K = B[y]/<T>), its transpose, and the
 *        duality-based inverse (tangling).
 *
 * untangle(F) is the order-mu jet of F at the generator of K: coefficient i
 * equals F^(i)(alpha)/i!. Its transpose acts on linear forms represented by
 * value vectors; tangling composes the transpose with a transposed product
 * against a dual generator and one structured (Hankel) solve.
 *
 * A PowerModulus captures (T, mu) together with the cached powers T^e and
 * reversed-inverse series the divide-and-conquer recursions keep reducing
 * by. Instances are immutable after construction and safe to share.
 */

#ifndef TANGLE_UNI_TANGLE_HPP
#define TANGLE_UNI_TANGLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/ext_field.hpp"
#include "tangle/poly.hpp"

namespace tangle {

/// A linear form on K[xi]/<xi^mu> viewed as a B-algebra, stored by its
/// values on the monomial basis alpha^i xi^j. Column j (fixed xi power) is
/// contiguous: v[j*d + i] = l(alpha^i xi^j).
template <Field B>
struct DualGrid {
    std::size_t d = 0;
    std::size_t mu = 0;
    std::vector<typename B::Elem> v;

    typename B::Elem& at(std::size_t i, std::size_t j) { return v[j * d + i]; }
    const typename B::Elem& at(std::size_t i, std::size_t j) const { return v[j * d + i]; }

    friend bool operator==(const DualGrid& a, const DualGrid& b) {
        return a.d == b.d && a.mu == b.mu && a.v == b.v;
    }
};

template <Field B>
class PowerModulus {
   public:
    using Ext = ExtensionField<B>;
    using KElem = typename Ext::Elem;
    using BElem = typename B::Elem;
    using Jet = std::vector<KElem>;            // coefficients of xi^0..xi^(mu-1)
    using DualValues = std::vector<BElem>;     // [L(x^i) | i < d*mu]

    PowerModulus(B base, Poly<B> t, std::size_t mu, bool validate = true)
        : base_(std::move(base)),
          mu_(mu),
          k_(base_, t, "a", validate),
          t_(std::move(t)) {
        if (mu_ < 1) throw LengthMismatchError("multiplicity must be at least 1");
        if (base_.characteristic() < mu_)
            throw CharacteristicTooSmallError(
                "H1 violated: characteristic must be at least the multiplicity mu");
        d_ = static_cast<std::size_t>(t_.deg());
        n_ = d_ * mu_;

        const std::uint64_t p = base_.characteristic();
        fact_.resize(mu_);
        inv_fact_.resize(mu_);
        fact_[0] = 1;
        for (std::size_t i = 1; i < mu_; ++i)
            fact_[i] = modarith::mul_mod(fact_[i - 1], i % p, p);
        inv_fact_[mu_ - 1] = modarith::inv_mod(fact_[mu_ - 1], p);
        for (std::size_t i = mu_ - 1; i >= 1; --i)
            inv_fact_[i - 1] = modarith::mul_mod(inv_fact_[i], i % p, p);

        // Exponents the recursions reduce by: the halving closure of mu
        // plus the doubling chain used by Newton lifting.
        std::set<std::size_t> expo;
        collect_halving(mu_, expo);
        for (std::size_t e = 1; e < mu_; e = std::min(2 * e, mu_)) collect_halving(e, expo);
        expo.insert(1);
        expo.insert(mu_);
        const std::size_t prec = std::max(n_, 2 * d_ - 1) + 1;
        for (std::size_t e : expo) {
            const Poly<B>& pw = power_of(e);
            rev_inv_[e] = inv_mod_xn(base_, reverse(base_, pw, d_ * e), prec);
        }
    }

    const B& base() const { return base_; }
    const Ext& ext() const { return k_; }
    const Poly<B>& modulus() const { return t_; }
    std::size_t mu() const { return mu_; }
    std::size_t d() const { return d_; }
    std::size_t n() const { return n_; }

    const Poly<B>& power(std::size_t e) const { return powers_.at(e); }

    /// F mod T^e using the cached reversed-inverse series.
    Poly<B> reduce(const Poly<B>& f, std::size_t e) const {
        const Poly<B>& pw = powers_.at(e);
        if (f.deg() < pw.deg()) return f;
        return divmod_preinv(base_, f, pw, rev_inv_.at(e)).rem;
    }

    std::uint64_t factorial(std::size_t i) const { return fact_[i]; }
    std::uint64_t inv_factorial(std::size_t i) const { return inv_fact_[i]; }

    KElem scale_elem(const KElem& a, std::uint64_t residue) const {
        const BElem s = base_.from_residue(residue);
        KElem r(a.size(), base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.mul(a[i], s);
        return r;
    }

    const Poly<B>& rev_inverse(std::size_t e) const { return rev_inv_.at(e); }

   private:
    static void collect_halving(std::size_t e, std::set<std::size_t>& s) {
        if (!s.insert(e).second || e <= 1) return;
        collect_halving(e / 2, s);
        collect_halving(e - e / 2, s);
    }

    const Poly<B>& power_of(std::size_t e) {
        auto it = powers_.find(e);
        if (it != powers_.end()) return it->second;
        Poly<B> value;
        if (e == 1)
            value = t_;
        else {
            const Poly<B>& lo = power_of(e / 2);
            const Poly<B>& hi = power_of(e - e / 2);
            value = mul(base_, lo, hi);
        }
        return powers_.emplace(e, std::move(value)).first->second;
    }

    B base_;
    std::size_t mu_;
    Ext k_;
    Poly<B> t_;
    std::size_t d_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> fact_, inv_fact_;
    std::map<std::size_t, Poly<B>> powers_;
    std::map<std::size_t, Poly<B>> rev_inv_;
};

namespace detail {

/// [F(alpha), F'(alpha), ..., F^(mu-1)(alpha)] without the factorial
/// divisions; divide-and-conquer on mu.
template <Field B>
void untangle_rec(const PowerModulus<B>& m, const Poly<B>& f, std::size_t mu,
                  typename PowerModulus<B>::Jet& out) {
    if (mu == 1) {
        out.push_back(m.ext().from_poly(f));
        return;
    }
    const std::size_t lam = mu / 2;
    untangle_rec(m, m.reduce(f, lam), lam, out);
    untangle_rec(m, m.reduce(derivative(m.base(), f, lam), mu - lam), mu - lam, out);
}

/// Transpose of untangle_rec: all steps reversed. cols points at the first
/// of mu contiguous length-d columns.
template <Field B>
std::vector<typename B::Elem> untangle_transposed_rec(
    const PowerModulus<B>& m, const typename B::Elem* cols, std::size_t mu) {
    const std::size_t d = m.d();
    if (mu == 1) return std::vector<typename B::Elem>(cols, cols + d);
    const std::size_t lam = mu / 2;
    auto v0 = untangle_transposed_rec(m, cols, lam);
    auto u0 = recurrence_extend_preinv(m.base(), v0, m.power(lam), m.rev_inverse(lam),
                                       d * mu);
    auto v1 = untangle_transposed_rec(m, cols + lam * d, mu - lam);
    auto w1 = recurrence_extend_preinv(m.base(), v1, m.power(mu - lam),
                                       m.rev_inverse(mu - lam), d * mu - lam);
    auto u1 = diff_transposed(m.base(), w1, lam);
    for (std::size_t i = 0; i < u0.size(); ++i) u0[i] = m.base().add(u0[i], u1[i]);
    return u0;
}

}  // namespace detail

/// The isomorphism image of F: the first mu Taylor coefficients of F at the
/// generator of K. Requires deg F < d*mu.
template <Field B>
typename PowerModulus<B>::Jet untangle(const PowerModulus<B>& m, const Poly<B>& f) {
    if (f.deg() >= static_cast<std::ptrdiff_t>(m.n()))
        throw LengthMismatchError("untangle: input degree must be below d*mu");
    typename PowerModulus<B>::Jet out;
    out.reserve(m.mu());
    detail::untangle_rec(m, f, m.mu(), out);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = m.scale_elem(out[i], m.inv_factorial(i));
    return out;
}

/// Transpose of untangle: takes a linear form on K[xi]/<xi^mu> (as a value
/// grid) to the linear form l o untangle on the power basis of B[x]/<T^mu>.
template <Field B>
typename PowerModulus<B>::DualValues untangle_transposed(const PowerModulus<B>& m,
                                                         const DualGrid<B>& l) {
    if (l.d != m.d() || l.mu != m.mu() || l.v.size() != m.n())
        throw LengthMismatchError("untangle_transposed: grid shape must be d x mu");
    std::vector<typename B::Elem> scaled = l.v;
    for (std::size_t j = 0; j < m.mu(); ++j) {
        const auto s = m.base().from_residue(m.inv_factorial(j));
        for (std::size_t i = 0; i < m.d(); ++i)
            scaled[j * m.d() + i] = m.base().mul(scaled[j * m.d() + i], s);
    }
    return detail::untangle_transposed_rec(m, scaled.data(), m.mu());
}

/// 1/F mod T^mu: one inversion in K lifted by Newton iteration along the
/// doubling chain of powers of T.
template <Field B>
Poly<B> inv_mod_power(const PowerModulus<B>& m, const Poly<B>& f) {
    const auto& base = m.base();
    Poly<B> f1 = m.reduce(f, 1);
    if (f1.is_zero())
        throw NotInvertibleError("inv_mod_power: input shares a factor with T");
    Poly<B> g = m.ext().to_poly(m.ext().inv(m.ext().from_poly(f1)));
    std::size_t e = 1;
    const Poly<B> two = poly_constant(base, base.from_residue(2));
    while (e < m.mu()) {
        e = std::min(2 * e, m.mu());
        Poly<B> fe = m.reduce(f, e);
        Poly<B> corr = sub(base, two, m.reduce(mul(base, fe, g), e));
        g = m.reduce(mul(base, g, corr), e);
    }
    return g;
}

/// Solves F * L = L' in the dual of B[x]/<T^mu>, for L a generator. The
/// value vectors are turned into polynomial coefficients by the upper
/// triangular Hankel operator built from T^mu, reducing the problem to one
/// inversion modulo T^mu.
template <Field B>
Poly<B> hankel_solve(const PowerModulus<B>& m, const typename PowerModulus<B>::DualValues& l,
                     const typename PowerModulus<B>::DualValues& lp) {
    const auto& base = m.base();
    const std::size_t n = m.n();
    if (l.size() != n || lp.size() != n)
        throw LengthMismatchError("hankel_solve: value vectors must have length d*mu");
    const Poly<B>& tmu = m.power(m.mu());
    std::vector<typename B::Elem> w(2 * n - 1, base.zero());
    for (std::size_t k = 0; k + 1 <= n; ++k) w[k] = coeff(base, tmu, k + 1);

    auto zeta = [&](const typename PowerModulus<B>::DualValues& vals) {
        Poly<B> vp = normalized(base, vals);
        return normalized(base, mul_transposed(base, w, vp, n));
    };
    Poly<B> lambda = zeta(l);
    if (lambda.is_zero()) throw NotAGeneratorError("hankel_solve: L does not generate the dual");
    Poly<B> lambda_p = zeta(lp);
    Poly<B> lambda_inv;
    try {
        lambda_inv = inv_mod_power(m, lambda);
    } catch (const NotInvertibleError&) {
        throw NotAGeneratorError("hankel_solve: L does not generate the dual");
    }
    return m.reduce(mul(base, lambda_p, lambda_inv), m.mu());
}

/// The canonical dual generator: 1 on alpha^(d-1) xi^(mu-1), 0 elsewhere.
template <Field B>
DualGrid<B> dual_generator(const PowerModulus<B>& m) {
    DualGrid<B> l{m.d(), m.mu(), std::vector<typename B::Elem>(m.n(), m.base().zero())};
    l.at(m.d() - 1, m.mu() - 1) = m.base().one();
    return l;
}

/// Transposed product G.l : H -> l(G H) on K[xi]/<xi^mu> as a B-algebra.
/// Columns are first extended along the recurrence with characteristic
/// polynomial T (values on alpha powers up to 2d-2), then one transposed
/// multiplication against the Kronecker packing of G yields the grid.
template <Field B>
DualGrid<B> transposed_product(const PowerModulus<B>& m,
                               const typename PowerModulus<B>::Jet& g, const DualGrid<B>& l) {
    const auto& base = m.base();
    const std::size_t d = m.d(), mu = m.mu();
    if (g.size() != mu || l.d != d || l.mu != mu)
        throw LengthMismatchError("transposed_product: shape mismatch");
    const std::size_t stride = 2 * d - 1;
    const std::size_t n_out = (mu - 1) * stride + d;
    std::vector<typename B::Elem> w(2 * (mu - 1) * stride + 2 * d - 1, base.zero());
    for (std::size_t j = 0; j < mu; ++j) {
        std::vector<typename B::Elem> col(l.v.begin() + static_cast<std::ptrdiff_t>(j * d),
                                          l.v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
        auto ext = recurrence_extend_preinv(base, col, m.modulus(), m.rev_inverse(1), stride);
        for (std::size_t i = 0; i < stride; ++i) w[j * stride + i] = ext[i];
    }
    std::vector<typename B::Elem> packed(mu * stride, base.zero());
    for (std::size_t b = 0; b < mu; ++b)
        for (std::size_t a = 0; a < d; ++a) packed[b * stride + a] = g[b][a];
    Poly<B> gp = normalized(base, std::move(packed));
    auto out = mul_transposed(base, w, gp, n_out);
    DualGrid<B> r{d, mu, std::vector<typename B::Elem>(m.n(), base.zero())};
    for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t i = 0; i < d; ++i) r.at(i, j) = out[j * stride + i];
    return r;
}

/// Truncated product in K[xi]/<xi^mu>.
template <Field B>
typename PowerModulus<B>::Jet jet_mul(const PowerModulus<B>& m,
                                      const typename PowerModulus<B>::Jet& a,
                                      const typename PowerModulus<B>::Jet& b) {
    auto conv = m.ext().poly_mul(a, b);
    conv.resize(m.mu(), m.ext().zero());
    return conv;
}

/// The inverse isomorphism: finds F with untangle(F) = G, through the
/// transposed untangling of a dual generator and a Hankel solve.
template <Field B>
Poly<B> tangle(const PowerModulus<B>& m, const typename PowerModulus<B>::Jet& g) {
    if (g.size() != m.mu()) throw LengthMismatchError("tangle: jet must have length mu");
    DualGrid<B> l = dual_generator(m);
    DualGrid<B> lp = transposed_product(m, g, l);
    auto lv = untangle_transposed(m, l);
    auto lpv = untangle_transposed(m, lp);
    try {
        return hankel_solve(m, lv, lpv);
    } catch (const NotAGeneratorError&) {
        // the canonical generator always generates; reaching this is a bug
        throw std::logic_error("tangle: dual generator failed to generate");
    }
}

}  // namespace tangle

#endif  // TANGLE_UNI_TANGLE_HPP

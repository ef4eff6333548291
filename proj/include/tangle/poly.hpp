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
 * @file poly.hpp
 * @brief Dense univariate polynomials over a coefficient field, with the
 *        transposed operations (transposed multiplication, transposed
 *        remainder a.k.a. linear-recurrence extension, transposed
 *        differentiation) next to the classical ones.
 *
 * A polynomial is its ascending coefficient sequence with no trailing zeros;
 * the zero polynomial is the empty sequence and deg() reports -1 for it
 * (standing in for degree -infinity). All functions are pure and take the
 * field descriptor as their first argument.
 */

#ifndef TANGLE_POLY_HPP
#define TANGLE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/ntt.hpp"

namespace tangle {

template <Field F>
struct Poly {
    using Elem = typename F::Elem;
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) {}

    std::ptrdiff_t deg() const { return static_cast<std::ptrdiff_t>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

namespace detail {

/// Batch inverses of 1..maxv modulo p; entries divisible by p stay 0.
/// One field inversion total.
inline std::vector<std::uint64_t> inverse_table(std::uint64_t p, std::size_t maxv) {
    std::vector<std::uint64_t> inv(maxv + 1, 0);
    if (maxv == 0) return inv;
    std::vector<std::uint64_t> pref;
    pref.reserve(maxv + 1);
    std::uint64_t acc = 1;
    pref.push_back(acc);
    for (std::size_t i = 1; i <= maxv; ++i) {
        std::uint64_t r = i % p;
        if (r != 0) acc = modarith::mul_mod(acc, r, p);
        pref.push_back(acc);
    }
    std::uint64_t ia = modarith::inv_mod(acc, p);
    for (std::size_t i = maxv; i >= 1; --i) {
        std::uint64_t r = i % p;
        if (r != 0) {
            inv[i] = modarith::mul_mod(ia, pref[i - 1], p);
            ia = modarith::mul_mod(ia, r, p);
        }
    }
    return inv;
}

/// Residues c_j = (j+1)(j+2)...(j+lambda) mod p for j = 0..count-1, by a
/// sliding window over the factor multiset. Factors divisible by p are
/// tracked by a zero counter so the window stays correct in any
/// characteristic. Linear time after one batch inversion.
inline std::vector<std::uint64_t> falling_factorial_row(std::uint64_t p, std::size_t lambda,
                                                        std::size_t count) {
    std::vector<std::uint64_t> out(count, 1);
    if (lambda == 0 || count == 0) return out;
    const std::size_t maxv = count - 1 + lambda;
    const auto inv = inverse_table(p, maxv);
    std::uint64_t prod = 1;
    std::size_t zeros = 0;
    for (std::size_t k = 1; k <= lambda; ++k) {
        std::uint64_t r = k % p;
        if (r == 0)
            ++zeros;
        else
            prod = modarith::mul_mod(prod, r, p);
    }
    out[0] = zeros ? 0 : prod;
    for (std::size_t j = 1; j < count; ++j) {
        // window (j..j+lambda-1) -> (j+1..j+lambda): drop j, take j+lambda
        std::uint64_t drop = j % p, take = (j + lambda) % p;
        if (drop == 0)
            --zeros;
        else
            prod = modarith::mul_mod(prod, inv[j], p);
        if (take == 0)
            ++zeros;
        else
            prod = modarith::mul_mod(prod, take, p);
        out[j] = zeros ? 0 : prod;
    }
    return out;
}

}  // namespace detail

template <Field F>
Poly<F> normalized(const F& f, std::vector<typename F::Elem> c) {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
    return Poly<F>(std::move(c));
}

template <Field F>
Poly<F> poly_zero(const F&) {
    return Poly<F>{};
}

template <Field F>
Poly<F> poly_constant(const F& f, typename F::Elem a) {
    if (f.is_zero(a)) return Poly<F>{};
    return Poly<F>({std::move(a)});
}

template <Field F>
Poly<F> poly_one(const F& f) {
    return poly_constant(f, f.one());
}

/// c * x^k
template <Field F>
Poly<F> poly_monomial(const F& f, typename F::Elem a, std::size_t k) {
    if (f.is_zero(a)) return Poly<F>{};
    std::vector<typename F::Elem> c(k + 1, f.zero());
    c[k] = std::move(a);
    return Poly<F>(std::move(c));
}

template <Field F>
typename F::Elem coeff(const F& f, const Poly<F>& a, std::size_t i) {
    return i < a.c.size() ? a.c[i] : f.zero();
}

template <Field F>
typename F::Elem leading_coeff(const F& f, const Poly<F>& a) {
    return a.is_zero() ? f.zero() : a.c.back();
}

template <Field F>
bool is_monic(const F& f, const Poly<F>& a) {
    return !a.is_zero() && f.eq(a.c.back(), f.one());
}

template <Field F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elem> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
    return normalized(f, std::move(c));
}

template <Field F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elem> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.sub(c[i], b.c[i]);
    return normalized(f, std::move(c));
}

template <Field F>
Poly<F> neg(const F& f, const Poly<F>& a) {
    auto c = a.c;
    for (auto& x : c) x = f.neg(x);
    return Poly<F>(std::move(c));
}

template <Field F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Elem& s) {
    std::vector<typename F::Elem> c(a.c.size(), f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = f.mul(a.c[i], s);
    return normalized(f, std::move(c));
}

template <Field F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>{};
    return normalized(f, f.poly_mul(a.c, b.c));
}

/// a * b mod x^n
template <Field F>
Poly<F> mul_trunc(const F& f, const Poly<F>& a, const Poly<F>& b, std::size_t n) {
    if (a.is_zero() || b.is_zero() || n == 0) return Poly<F>{};
    // truncating the inputs first keeps the product size at ~2n
    std::vector<typename F::Elem> ta(a.c.begin(), a.c.begin() + std::min(a.c.size(), n));
    std::vector<typename F::Elem> tb(b.c.begin(), b.c.begin() + std::min(b.c.size(), n));
    auto prod = f.poly_mul(ta, tb);
    if (prod.size() > n) prod.resize(n);
    return normalized(f, std::move(prod));
}

/// P mod x^n
template <Field F>
Poly<F> trunc(const F& f, const Poly<F>& a, std::size_t n) {
    if (a.c.size() <= n) return a;
    return normalized(f, std::vector<typename F::Elem>(a.c.begin(), a.c.begin() + n));
}

/// P * x^k
template <Field F>
Poly<F> shift_up(const F& f, const Poly<F>& a, std::size_t k) {
    if (a.is_zero()) return a;
    std::vector<typename F::Elem> c(a.c.size() + k, f.zero());
    std::copy(a.c.begin(), a.c.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly<F>(std::move(c));
}

/// P div x^k (drops the low k coefficients)
template <Field F>
Poly<F> shift_down(const F&, const Poly<F>& a, std::size_t k) {
    if (a.c.size() <= k) return Poly<F>{};
    return Poly<F>(std::vector<typename F::Elem>(a.c.begin() + static_cast<std::ptrdiff_t>(k),
                                                 a.c.end()));
}

template <Field F>
typename F::Elem eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
    typename F::Elem r = f.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) r = f.add(f.mul(r, x), a.c[i]);
    return r;
}

/// Reversal with respect to an explicit degree bound: rev_n(P) has
/// coefficient i equal to coeff(P, n - i).
template <Field F>
Poly<F> reverse(const F& f, const Poly<F>& a, std::size_t n) {
    std::vector<typename F::Elem> c(n + 1, f.zero());
    for (std::size_t i = 0; i <= n; ++i) c[i] = coeff(f, a, n - i);
    return normalized(f, std::move(c));
}

/// k-th formal derivative. Coefficient products of consecutive integers are
/// formed mod char(F), which is exact in any characteristic.
template <Field F>
Poly<F> derivative(const F& f, const Poly<F>& a, std::size_t k = 1) {
    if (k == 0) return a;
    if (a.c.size() <= k) return Poly<F>{};
    const std::size_t out_len = a.c.size() - k;
    const auto row = detail::falling_factorial_row(f.characteristic(), k, out_len);
    std::vector<typename F::Elem> c(out_len, f.zero());
    for (std::size_t j = 0; j < out_len; ++j)
        c[j] = f.mul(a.c[j + k], f.from_residue(row[j]));
    return normalized(f, std::move(c));
}

/// Power series inverse: G with A*G = 1 mod x^n, by Newton iteration.
template <Field F>
Poly<F> inv_mod_xn(const F& f, const Poly<F>& a, std::size_t n) {
    if (a.is_zero() || f.is_zero(a.c[0]))
        throw NotInvertibleError("power series inverse requires a unit constant term");
    if (n == 0) return Poly<F>{};
    Poly<F> g = poly_constant(f, f.inv(a.c[0]));
    std::size_t prec = 1;
    while (prec < n) {
        prec = std::min(prec * 2, n);
        Poly<F> e = mul_trunc(f, trunc(f, a, prec), g, prec);
        Poly<F> two_minus_e = sub(f, poly_constant(f, f.from_residue(2)), e);
        g = mul_trunc(f, g, two_minus_e, prec);
    }
    return g;
}

template <Field F>
struct DivModResult {
    Poly<F> quot;
    Poly<F> rem;
};

namespace detail {

template <Field F>
DivModResult<F> divmod_schoolbook(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elem> r = a.c;
    const std::size_t db = b.c.size() - 1;
    const auto ilc = f.inv(b.c.back());
    std::vector<typename F::Elem> q(a.c.size() - db, f.zero());
    for (std::size_t qi = q.size(); qi-- > 0;) {
        auto t = f.mul(r[qi + db], ilc);
        q[qi] = t;
        if (!f.is_zero(t)) {
            for (std::size_t j = 0; j <= db; ++j)
                r[qi + j] = f.sub(r[qi + j], f.mul(t, b.c[j]));
        }
    }
    r.resize(db);
    return {normalized(f, std::move(q)), normalized(f, std::move(r))};
}

}  // namespace detail

/// Division with remainder against a *monic* divisor whose reversed power
/// series inverse is already known to at least quot-length precision.
template <Field F>
DivModResult<F> divmod_preinv(const F& f, const Poly<F>& a, const Poly<F>& b,
                              const Poly<F>& rev_b_inv) {
    if (a.deg() < b.deg()) return {Poly<F>{}, a};
    const std::size_t da = static_cast<std::size_t>(a.deg());
    const std::size_t db = static_cast<std::size_t>(b.deg());
    const std::size_t qlen = da - db + 1;
    Poly<F> qrev = mul_trunc(f, reverse(f, a, da), rev_b_inv, qlen);
    Poly<F> q = reverse(f, qrev, qlen - 1);
    Poly<F> r = sub(f, trunc(f, a, db), mul_trunc(f, q, b, db));
    return {std::move(q), std::move(r)};
}

/// F = Q*B + R with deg R < deg B. Schoolbook below the multiplication
/// threshold, Newton inversion of the reversed divisor above it.
template <Field F>
DivModResult<F> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZeroPolyError("polynomial division by zero");
    if (a.deg() < b.deg()) return {Poly<F>{}, a};
    const std::size_t db = static_cast<std::size_t>(b.deg());
    const std::size_t qlen = static_cast<std::size_t>(a.deg()) - db + 1;
    if (std::min(qlen, db) <= ntt::kSchoolbookThreshold)
        return detail::divmod_schoolbook(f, a, b);
    if (is_monic(f, b)) {
        auto inv_rev = inv_mod_xn(f, reverse(f, b, db), qlen);
        return divmod_preinv(f, a, b, inv_rev);
    }
    const auto ilc = f.inv(b.c.back());
    Poly<F> bm = scale(f, b, ilc);
    auto inv_rev = inv_mod_xn(f, reverse(f, bm, db), qlen);
    auto [q, r] = divmod_preinv(f, a, bm, inv_rev);
    return {scale(f, q, ilc), std::move(r)};
}

template <Field F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return divmod(f, a, b).rem;
}

template <Field F>
Poly<F> quo(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return divmod(f, a, b).quot;
}

template <Field F>
Poly<F> monic(const F& f, const Poly<F>& a) {
    if (a.is_zero() || is_monic(f, a)) return a;
    return scale(f, a, f.inv(a.c.back()));
}

/// Monic gcd by the Euclidean scheme.
template <Field F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

template <Field F>
struct XgcdResult {
    Poly<F> g;  // monic gcd
    Poly<F> s;
    Poly<F> t;  // s*a + t*b = g
};

template <Field F>
XgcdResult<F> xgcd(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = poly_one(f), s1 = poly_zero(f);
    Poly<F> t0 = poly_zero(f), t1 = poly_one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(f, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = sub(f, s0, mul(f, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = sub(f, t0, mul(f, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto ilc = f.inv(r0.c.back());
    return {scale(f, r0, ilc), scale(f, s0, ilc), scale(f, t0, ilc)};
}

/// Binary powering modulo a monic polynomial.
template <Field F>
Poly<F> pow_mod_poly(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
    Poly<F> r = rem(f, poly_one(f), m);
    base = rem(f, base, m);
    while (e) {
        if (e & 1) r = rem(f, mul(f, r, base), m);
        base = rem(f, mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

/// P(x + a), by the convolution method: quasi-linear, valid when the
/// characteristic exceeds deg P so that the needed factorials are units.
template <Field F>
Poly<F> taylor_shift(const F& f, const Poly<F>& a, const typename F::Elem& s) {
    if (a.deg() <= 0) return a;
    const std::size_t t = static_cast<std::size_t>(a.deg());
    const std::uint64_t p = f.characteristic();
    if (p <= t)
        throw CharacteristicTooSmallError(
            "taylor_shift needs characteristic > degree of the input");
    std::vector<std::uint64_t> fact(t + 1), inv_fact(t + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i <= t; ++i) fact[i] = modarith::mul_mod(fact[i - 1], i % p, p);
    inv_fact[t] = modarith::inv_mod(fact[t], p);
    for (std::size_t i = t; i >= 1; --i)
        inv_fact[i - 1] = modarith::mul_mod(inv_fact[i], i % p, p);

    // u = rev(coeff_i * i!),  w_j = s^j / j!,  result_k = (u*w)_{t-k} / k!
    std::vector<typename F::Elem> u(t + 1, f.zero()), w(t + 1, f.zero());
    for (std::size_t i = 0; i <= t; ++i)
        u[t - i] = f.mul(coeff(f, a, i), f.from_residue(fact[i]));
    typename F::Elem spow = f.one();
    for (std::size_t j = 0; j <= t; ++j) {
        w[j] = f.mul(spow, f.from_residue(inv_fact[j]));
        spow = f.mul(spow, s);
    }
    auto conv = f.poly_mul(u, w);
    std::vector<typename F::Elem> out(t + 1, f.zero());
    for (std::size_t k = 0; k <= t; ++k)
        out[k] = f.mul(conv[t - k], f.from_residue(inv_fact[k]));
    return normalized(f, std::move(out));
}

/// Bivariate product via Kronecker substitution. Inputs are given as rows:
/// rows[j] is the x1-polynomial multiplying x2^j, with all x1-degrees below
/// the stated bound. The product rows come back exactly (no truncation).
template <Field F>
std::vector<Poly<F>> kronecker_mul(const F& f, const std::vector<Poly<F>>& a,
                                   std::size_t x1_bound_a, const std::vector<Poly<F>>& b,
                                   std::size_t x1_bound_b) {
    if (x1_bound_a == 0 || x1_bound_b == 0)
        throw LengthMismatchError("kronecker_mul: x1-degree bounds must be positive");
    for (const auto& r : a)
        if (r.c.size() > x1_bound_a)
            throw LengthMismatchError("kronecker_mul: row exceeds stated x1 bound");
    for (const auto& r : b)
        if (r.c.size() > x1_bound_b)
            throw LengthMismatchError("kronecker_mul: row exceeds stated x1 bound");
    if (a.empty() || b.empty()) return {};
    const std::size_t stride = x1_bound_a + x1_bound_b - 1;
    std::vector<typename F::Elem> pa(a.size() * stride, f.zero());
    std::vector<typename F::Elem> pb(b.size() * stride, f.zero());
    for (std::size_t j = 0; j < a.size(); ++j)
        std::copy(a[j].c.begin(), a[j].c.end(),
                  pa.begin() + static_cast<std::ptrdiff_t>(j * stride));
    for (std::size_t j = 0; j < b.size(); ++j)
        std::copy(b[j].c.begin(), b[j].c.end(),
                  pb.begin() + static_cast<std::ptrdiff_t>(j * stride));
    auto prod = f.poly_mul(pa, pb);
    prod.resize((a.size() + b.size() - 1) * stride, f.zero());
    std::vector<Poly<F>> rows(a.size() + b.size() - 1);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        std::vector<typename F::Elem> rc(
            prod.begin() + static_cast<std::ptrdiff_t>(j * stride),
            prod.begin() + static_cast<std::ptrdiff_t>(j * stride + stride));
        rows[j] = normalized(f, std::move(rc));
    }
    while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
    return rows;
}

/// Transposed multiplication: out_i = sum_j b_j * w_{i+j} for i < n, the
/// transpose of G |-> B*G restricted to deg G < n.
template <Field F>
std::vector<typename F::Elem> mul_transposed(const F& f,
                                             const std::vector<typename F::Elem>& w,
                                             const Poly<F>& b, std::size_t n) {
    if (b.is_zero()) {
        if (w.size() < n) throw LengthMismatchError("mul_transposed: w too short");
        return std::vector<typename F::Elem>(n, f.zero());
    }
    const std::size_t db = static_cast<std::size_t>(b.deg());
    if (w.size() < n + db) throw LengthMismatchError("mul_transposed: w too short");
    std::vector<typename F::Elem> revb(b.c.rbegin(), b.c.rend());
    std::vector<typename F::Elem> ws(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n + db));
    auto conv = f.poly_mul(revb, ws);
    std::vector<typename F::Elem> out(n, f.zero());
    for (std::size_t i = 0; i < n; ++i) out[i] = conv[i + db];
    return out;
}

/// Transposed differentiation: prepends lambda zeros and multiplies entry
/// u_j by (j+1)...(j+lambda).
template <Field F>
std::vector<typename F::Elem> diff_transposed(const F& f,
                                              const std::vector<typename F::Elem>& u,
                                              std::size_t lambda) {
    std::vector<typename F::Elem> v(u.size() + lambda, f.zero());
    const auto row = detail::falling_factorial_row(f.characteristic(), lambda, u.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        v[j + lambda] = f.mul(u[j], f.from_residue(row[j]));
    return v;
}

/// Transposed remainder: extends the length-k vector u to the first t terms
/// of the linear recurrence with characteristic polynomial S (monic, degree
/// k). Runs in O(M(t)) through the generating-series identity
/// sum v_i x^i = N(x) / rev(S)(x) with N = (u * rev(S)) mod x^k.
template <Field F>
std::vector<typename F::Elem> recurrence_extend_preinv(const F& f,
                                                       const std::vector<typename F::Elem>& u,
                                                       const Poly<F>& s,
                                                       const Poly<F>& rev_s_inv,
                                                       std::size_t t) {
    const std::size_t k = s.is_zero() ? 0 : static_cast<std::size_t>(s.deg());
    if (u.size() != k) throw LengthMismatchError("recurrence_extend: |u| must equal deg S");
    if (t < k) throw LengthMismatchError("recurrence_extend: target length below deg S");
    if (t == k) return u;
    if (k == 0) return std::vector<typename F::Elem>(t, f.zero());
    Poly<F> upoly = normalized(f, u);
    Poly<F> revs = reverse(f, s, k);
    Poly<F> n = mul_trunc(f, upoly, revs, k);
    Poly<F> v = mul_trunc(f, n, rev_s_inv, t);
    std::vector<typename F::Elem> out(t, f.zero());
    for (std::size_t i = 0; i < v.c.size(); ++i) out[i] = v.c[i];
    return out;
}

template <Field F>
std::vector<typename F::Elem> recurrence_extend(const F& f,
                                                const std::vector<typename F::Elem>& u,
                                                const Poly<F>& s, std::size_t t) {
    if (!is_monic(f, s)) throw LengthMismatchError("recurrence_extend: S must be monic");
    const std::size_t k = static_cast<std::size_t>(s.deg());
    if (u.size() != k) throw LengthMismatchError("recurrence_extend: |u| must equal deg S");
    if (t <= k || k == 0) {
        if (t < k) throw LengthMismatchError("recurrence_extend: target length below deg S");
        if (t == k) return u;
        return std::vector<typename F::Elem>(t, f.zero());
    }
    Poly<F> rev_inv = inv_mod_xn(f, reverse(f, s, k), t);
    return recurrence_extend_preinv(f, u, s, rev_inv, t);
}

template <Field F>
struct SquarefreePart {
    Poly<F> factor;         // squarefree, monic
    std::size_t multiplicity;
};

/// Yun's algorithm. P = lc(P) * prod factor_i ^ multiplicity_i with the
/// factors squarefree, monic and pairwise coprime. Degree-0 parts are
/// dropped. Requires characteristic > deg P.
template <Field F>
std::vector<SquarefreePart<F>> squarefree_decomposition(const F& f, const Poly<F>& a) {
    std::vector<SquarefreePart<F>> parts;
    if (a.deg() <= 0) {
        if (a.is_zero()) throw DivisionByZeroPolyError("squarefree decomposition of zero");
        return parts;
    }
    if (f.characteristic() <= static_cast<std::uint64_t>(a.deg()))
        throw CharacteristicTooSmallError(
            "squarefree decomposition needs characteristic > deg P");
    Poly<F> p = monic(f, a);
    Poly<F> dp = derivative(f, p);
    Poly<F> g = gcd(f, p, dp);
    Poly<F> b = quo(f, p, g);
    Poly<F> c = quo(f, dp, g);
    Poly<F> d = sub(f, c, derivative(f, b));
    std::size_t i = 1;
    while (b.deg() > 0) {
        Poly<F> s = gcd(f, b, d);
        if (s.deg() > 0) parts.push_back({s, i});
        b = quo(f, b, s);
        c = quo(f, d, s);
        d = sub(f, c, derivative(f, b));
        ++i;
    }
    return parts;
}

/// Chinese remaindering of residue/modulus pairs with pairwise coprime
/// moduli; the result R satisfies R = R_i mod M_i and deg R < sum deg M_i.
template <Field F>
Poly<F> crt_combine(const F& f,
                    const std::vector<std::pair<Poly<F>, Poly<F>>>& residues) {
    if (residues.empty()) throw LengthMismatchError("crt_combine: empty input");
    for (const auto& [r, m] : residues) {
        if (m.deg() < 1) throw DivisionByZeroPolyError("crt_combine: modulus must be nonconstant");
        if (r.deg() >= m.deg())
            throw LengthMismatchError("crt_combine: residue not reduced");
    }
    Poly<F> r = residues[0].first;
    Poly<F> m = residues[0].second;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const Poly<F>& ri = residues[i].first;
        const Poly<F>& mi = residues[i].second;
        auto e = xgcd(f, m, mi);
        if (e.g.deg() != 0)
            throw ModuliNotCoprimeError("crt_combine: moduli share a common factor");
        // e.s * m = 1 mod mi
        Poly<F> diff = rem(f, sub(f, ri, r), mi);
        Poly<F> s = rem(f, mul(f, diff, e.s), mi);
        r = add(f, r, mul(f, m, s));
        m = mul(f, m, mi);
    }
    return r;
}

}  // namespace tangle

#endif  // TANGLE_POLY_HPP

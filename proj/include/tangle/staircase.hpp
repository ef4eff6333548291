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
 * @file staircase.hpp
 * @brief Zero-dimensional monomial ideals in two variables, their quotient
 *        elements in dense row storage, and multiplication / inversion
 *        modulo the ideal in softly linear time.
 *
 * The multiplication first sparsifies the staircase so only O(log delta)
 * generators remain (at most doubling the quotient degree), computes one
 * Kronecker product per rectangle of consecutive sparse generators, and
 * reads every standard monomial off the lowest rectangle covering it.
 * Inversion runs a Newton iteration that halves the x1-height per step.
 */

#ifndef TANGLE_STAIRCASE_HPP
#define TANGLE_STAIRCASE_HPP

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/poly.hpp"

namespace tangle {

struct StairGen {
    std::size_t mu;
    std::size_t nu;
    friend bool operator==(const StairGen&, const StairGen&) = default;
};

/**
 * Minimal generators (mu_i, nu_i) of a zero-dimensional monomial ideal
 * < x1^mu_i x2^nu_i >, with mu strictly decreasing, nu strictly increasing,
 * nu_1 = 0 and mu_t = 0. The unit ideal is the single generator (0,0).
 */
class Staircase {
   public:
    explicit Staircase(std::vector<StairGen> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw std::invalid_argument("staircase needs at least one generator");
        if (gens_.front().nu != 0 || gens_.back().mu != 0)
            throw std::invalid_argument("staircase requires nu_1 = 0 and mu_t = 0");
        for (std::size_t i = 1; i < gens_.size(); ++i) {
            if (gens_[i].mu >= gens_[i - 1].mu || gens_[i].nu <= gens_[i - 1].nu)
                throw std::invalid_argument(
                    "staircase generators must have strictly decreasing mu and increasing nu");
        }
        degree_ = 0;
        for (std::size_t i = 0; i + 1 < gens_.size(); ++i)
            degree_ += gens_[i].mu * (gens_[i + 1].nu - gens_[i].nu);
    }

    const std::vector<StairGen>& gens() const { return gens_; }
    std::size_t count() const { return gens_.size(); }

    /// Dimension of the quotient as a vector space.
    std::size_t degree() const { return degree_; }

    std::size_t mu1() const { return gens_.front().mu; }

    /// One past the largest standard x2-degree.
    std::size_t rows() const { return gens_.back().nu; }

    /// Number of standard monomials in row b (0 when b is off the staircase).
    std::size_t row_width(std::size_t b) const {
        if (b >= rows()) return 0;
        std::size_t r = 0;
        while (r + 1 < gens_.size() && gens_[r + 1].nu <= b) ++r;
        return gens_[r].mu;
    }

    /// Monomial membership in the ideal.
    bool contains(std::size_t a, std::size_t b) const {
        for (const auto& g : gens_)
            if (g.mu <= a && g.nu <= b) return true;
        return false;
    }

    bool is_standard(std::size_t a, std::size_t b) const { return !contains(a, b); }

    /// S + <x1^mbar>: caps the x1-height.
    Staircase truncate(std::size_t mbar) const {
        if (mbar >= mu1()) return *this;
        std::vector<StairGen> out;
        out.push_back({mbar, 0});
        for (const auto& g : gens_)
            if (g.mu < mbar) out.push_back(g);
        return Staircase(std::move(out));
    }

    /// Colon ideal S : x1^mbar.
    Staircase colon(std::size_t mbar) const {
        std::vector<StairGen> out;
        for (const auto& g : gens_) {
            const std::size_t mu = g.mu > mbar ? g.mu - mbar : 0;
            if (out.empty() || mu < out.back().mu) out.push_back({mu, g.nu});
        }
        return Staircase(std::move(out));
    }

    /// Sub-staircase by the halving rule: keep index 1, then repeatedly the
    /// first generator whose mu drops below half the last kept one, forcing
    /// the final generator. The ideal shrinks while the degree at most
    /// doubles, and O(log degree) generators remain.
    Staircase sparsify() const {
        std::vector<StairGen> out;
        std::size_t i = 0;
        out.push_back(gens_[0]);
        while (i + 1 < gens_.size()) {
            std::size_t j = i + 1;
            while (j < gens_.size() && 2 * gens_[j].mu >= gens_[i].mu) ++j;
            if (j >= gens_.size()) break;
            out.push_back(gens_[j]);
            i = j;
        }
        if (out.back() != gens_.back()) out.push_back(gens_.back());
        return Staircase(std::move(out));
    }

    /// Standard monomials, row-major (x2-degree outer, x1-degree inner).
    std::vector<std::pair<std::size_t, std::size_t>> standard_monomials() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(degree_);
        for (std::size_t b = 0; b < rows(); ++b)
            for (std::size_t a = 0; a < row_width(b); ++a) out.emplace_back(a, b);
        return out;
    }

    friend bool operator==(const Staircase& a, const Staircase& b) {
        return a.gens_ == b.gens_;
    }

   private:
    std::vector<StairGen> gens_;
    std::size_t degree_ = 0;
};

/// An element of F[x1,x2]/I reduced modulo the staircase: dense rows, one
/// per standard x2-degree, row b holding exactly row_width(b) coefficients.
template <Field F>
struct StairPoly {
    std::vector<std::vector<typename F::Elem>> rows;

    friend bool operator==(const StairPoly& a, const StairPoly& b) { return a.rows == b.rows; }
};

template <Field F>
StairPoly<F> stair_zero(const F& f, const Staircase& s) {
    StairPoly<F> r;
    r.rows.resize(s.rows());
    for (std::size_t b = 0; b < s.rows(); ++b)
        r.rows[b].assign(s.row_width(b), f.zero());
    return r;
}

template <Field F>
StairPoly<F> stair_one(const F& f, const Staircase& s) {
    auto r = stair_zero(f, s);
    if (!r.rows.empty() && !r.rows[0].empty()) r.rows[0][0] = f.one();
    return r;
}

template <Field F>
bool stair_shape_ok(const F&, const Staircase& s, const StairPoly<F>& a) {
    if (a.rows.size() != s.rows()) return false;
    for (std::size_t b = 0; b < a.rows.size(); ++b)
        if (a.rows[b].size() != s.row_width(b)) return false;
    return true;
}

/// Copies coefficients into the shape of another staircase; monomials that
/// are standard on one side only are dropped or zero-filled.
template <Field F>
StairPoly<F> stair_reshape(const F& f, const Staircase& from, const StairPoly<F>& a,
                           const Staircase& to) {
    (void)from;
    auto r = stair_zero(f, to);
    for (std::size_t b = 0; b < r.rows.size() && b < a.rows.size(); ++b)
        for (std::size_t i = 0; i < r.rows[b].size() && i < a.rows[b].size(); ++i)
            r.rows[b][i] = a.rows[b][i];
    return r;
}

template <Field F>
StairPoly<F> stair_add(const F& f, const StairPoly<F>& a, const StairPoly<F>& b) {
    StairPoly<F> r = a;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t j = 0; j < r.rows[i].size(); ++j)
            r.rows[i][j] = f.add(r.rows[i][j], b.rows[i][j]);
    return r;
}

template <Field F>
StairPoly<F> stair_sub(const F& f, const StairPoly<F>& a, const StairPoly<F>& b) {
    StairPoly<F> r = a;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (std::size_t j = 0; j < r.rows[i].size(); ++j)
            r.rows[i][j] = f.sub(r.rows[i][j], b.rows[i][j]);
    return r;
}

/// F*G mod I. One Kronecker product per rectangle of the sparsified
/// staircase; every standard monomial of I is read from the lowest
/// rectangle containing it (in debug builds, agreement across rectangles is
/// asserted).
template <Field F>
StairPoly<F> mono_mul(const F& f, const Staircase& s, const StairPoly<F>& a,
                      const StairPoly<F>& b) {
    if (!stair_shape_ok(f, s, a) || !stair_shape_ok(f, s, b))
        throw LengthMismatchError("mono_mul: operands not reduced modulo the staircase");
    auto out = stair_zero(f, s);
    if (s.degree() == 0) return out;
    const Staircase sp = s.sparsify();
    const auto& g = sp.gens();

    // rectangle products H_r = (F mod box_r)(G mod box_r) mod box_r
    std::vector<std::vector<Poly<F>>> rect(g.size() > 0 ? g.size() - 1 : 0);
    for (std::size_t r = 0; r + 1 < g.size(); ++r) {
        const std::size_t w = g[r].mu, h = g[r + 1].nu;
        if (w == 0 || h == 0) continue;
        auto box_of = [&](const StairPoly<F>& x) {
            std::vector<Poly<F>> rowsp(std::min<std::size_t>(h, x.rows.size()));
            for (std::size_t i = 0; i < rowsp.size(); ++i) {
                std::vector<typename F::Elem> row(
                    x.rows[i].begin(),
                    x.rows[i].begin() +
                        static_cast<std::ptrdiff_t>(std::min(w, x.rows[i].size())));
                rowsp[i] = normalized(f, std::move(row));
            }
            return rowsp;
        };
        rect[r] = kronecker_mul(f, box_of(a), w, box_of(b), w);
    }

    auto rect_coeff = [&](std::size_t r, std::size_t x1, std::size_t x2) ->
        typename F::Elem {
            if (r >= rect.size() || x2 >= rect[r].size()) return f.zero();
            return coeff(f, rect[r][x2], x1);
        };

    for (std::size_t bdeg = 0; bdeg < s.rows(); ++bdeg) {
        // lowest sparse rectangle whose x2 range covers this row
        std::size_t r = 0;
        while (r + 1 < g.size() && g[r + 1].nu <= bdeg) ++r;
        const std::size_t width = s.row_width(bdeg);
        for (std::size_t adeg = 0; adeg < width; ++adeg) {
            out.rows[bdeg][adeg] = rect_coeff(r, adeg, bdeg);
#ifndef NDEBUG
            for (std::size_t r2 = r + 1; r2 + 1 < g.size(); ++r2) {
                if (adeg < g[r2].mu && bdeg < g[r2 + 1].nu)
                    assert(f.eq(out.rows[bdeg][adeg], rect_coeff(r2, adeg, bdeg)));
            }
#endif
        }
    }
    return out;
}

/// 1/F mod I for F with a unit constant term. Newton iteration on the
/// x1-height: invert modulo I + <x1^ceil(mu1/2)> and correct with
/// G = 2 G0 - G0^2 F, which is exact because the square of the truncated
/// ideal lies inside I.
template <Field F>
StairPoly<F> mono_inv(const F& f, const Staircase& s, const StairPoly<F>& a) {
    if (!stair_shape_ok(f, s, a))
        throw LengthMismatchError("mono_inv: operand not reduced modulo the staircase");
    if (s.degree() == 0)
        throw NotInvertibleError("mono_inv: quotient ring is trivial");
    if (s.mu1() == 1) {
        // quotient is univariate in x2: rows all have width 1
        std::vector<typename F::Elem> col(s.rows(), f.zero());
        for (std::size_t b = 0; b < s.rows(); ++b) col[b] = a.rows[b][0];
        Poly<F> inv = inv_mod_xn(f, normalized(f, std::move(col)), s.rows());
        auto r = stair_zero(f, s);
        for (std::size_t b = 0; b < s.rows(); ++b) r.rows[b][0] = coeff(f, inv, b);
        return r;
    }
    const std::size_t mbar = (s.mu1() + 1) / 2;
    const Staircase sbar = s.truncate(mbar);
    StairPoly<F> abar = stair_reshape(f, s, a, sbar);
    StairPoly<F> gbar = mono_inv(f, sbar, abar);
    StairPoly<F> g0 = stair_reshape(f, sbar, gbar, s);
    StairPoly<F> t = mono_mul(f, s, g0, mono_mul(f, s, g0, a));
    StairPoly<F> r = stair_sub(f, stair_add(f, g0, g0), t);
    return r;
}

}  // namespace tangle

#endif  // TANGLE_STAIRCASE_HPP

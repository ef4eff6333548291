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

#ifndef TANGLE_CORE_HPP
#define TANGLE_CORE_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangle {

/// Base class for failures of mathematical preconditions (as opposed to
/// malformed textual input, which raises ParseError).
class MathError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public MathError {
   public:
    using MathError::MathError;
};

class NotIrreducibleError : public MathError {
   public:
    using MathError::MathError;
};

class NotSeparableError : public MathError {
   public:
    using MathError::MathError;
};

class DivisionByZeroError : public MathError {
   public:
    using MathError::MathError;
};

class DivisionByZeroPolyError : public MathError {
   public:
    using MathError::MathError;
};

class NotInvertibleError : public MathError {
   public:
    using MathError::MathError;
};

class CharacteristicTooSmallError : public MathError {
   public:
    using MathError::MathError;
};

class NotAGeneratorError : public MathError {
   public:
    using MathError::MathError;
};

class ModuliNotCoprimeError : public MathError {
   public:
    using MathError::MathError;
};

class LengthMismatchError : public MathError {
   public:
    using MathError::MathError;
};

/// Malformed textual input (CLI / parsing layer).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/**
 * A coefficient field. Field descriptors are immutable values that own all
 * arithmetic; elements are plain copyable values with no back-pointer to
 * their field. All fields here have prime characteristic, and the descriptor
 * knows its absolute degree over the prime subfield, so generic code can
 * reason about |F| = p^e without materializing that number.
 *
 * poly_mul multiplies two coefficient sequences (ascending degree, not
 * necessarily normalized) and must be subquadratic for large sizes; it is the
 * single primitive all dense arithmetic reduces to.
 */
template <class F>
concept Field =
    std::copyable<F> && std::copyable<typename F::Elem> &&
    requires(const F& f, const typename F::Elem& a, const typename F::Elem& b,
             std::uint64_t r, std::int64_t s,
             const std::vector<typename F::Elem>& v) {
        { f.zero() } -> std::same_as<typename F::Elem>;
        { f.one() } -> std::same_as<typename F::Elem>;
        { f.add(a, b) } -> std::same_as<typename F::Elem>;
        { f.sub(a, b) } -> std::same_as<typename F::Elem>;
        { f.neg(a) } -> std::same_as<typename F::Elem>;
        { f.mul(a, b) } -> std::same_as<typename F::Elem>;
        { f.inv(a) } -> std::same_as<typename F::Elem>;
        { f.is_zero(a) } -> std::same_as<bool>;
        { f.eq(a, b) } -> std::same_as<bool>;
        { f.characteristic() } -> std::same_as<std::uint64_t>;
        { f.degree_over_prime() } -> std::same_as<std::size_t>;
        { f.from_residue(r) } -> std::same_as<typename F::Elem>;
        { f.from_int(s) } -> std::same_as<typename F::Elem>;
        { f.poly_mul(v, v) } -> std::same_as<std::vector<typename F::Elem>>;
    };

}  // namespace tangle

#endif  // TANGLE_CORE_HPP

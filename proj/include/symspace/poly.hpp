/*
 * Copyright 2026 The symspace authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYMSPACE_POLY_HPP
#define SYMSPACE_POLY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspace {

// Hard cap on polynomial degree.  Catalog-scale data stays far below this;
// exceeding it is treated as a usage error, never as silent wraparound.
inline constexpr int kMaxPolyDegree = 1024;

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonExactDivision : PolyError {
    using PolyError::PolyError;
};
struct NegativeCoefficient : PolyError {
    using PolyError::PolyError;
};
struct PolynomialTruncated : PolyError {
    using PolyError::PolyError;
};
struct DegreeCapExceeded : PolyError {
    using PolyError::PolyError;
};
struct CoefficientOverflow : PolyError {
    using PolyError::PolyError;
};

/// Exact integer polynomial in one variable t, coefficients indexed by degree.
///
/// Betti-facing data keeps all coefficients nonnegative, but the (1 - t^k)
/// factors feeding the Borel quotient make signed intermediates unavoidable,
/// so the coefficient type is signed and nonnegativity is asserted at the
/// boundaries that require it (see poly_div_exact and the betti module).
///
/// A polynomial is either complete or carries an explicit truncation degree D,
/// meaning coefficients above D are unknown.  Truncation is metadata, never
/// silent: reading past a truncation throws.
class PoincarePolynomial {
   public:
    PoincarePolynomial() = default;  // zero polynomial, complete
    explicit PoincarePolynomial(std::vector<int64_t> coeffs,
                                std::optional<int> truncation = std::nullopt);

    static PoincarePolynomial one();
    static PoincarePolynomial monomial(int degree, int64_t coeff = 1);
    static PoincarePolynomial one_minus_power(int k);  // 1 - t^k

    const std::vector<int64_t>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient at `degree`; zero past the stored range of a complete
    /// polynomial, PolynomialTruncated past a truncation.
    int64_t coeff(int degree) const;
    /// Degree of the stored data (0 for the zero polynomial).
    int degree() const noexcept;
    std::optional<int> truncation() const noexcept { return truncation_; }
    bool complete() const noexcept { return !truncation_.has_value(); }
    bool is_zero() const noexcept;
    bool nonnegative() const noexcept;
    /// Sum of all stored coefficients (the Euler characteristic for a Betti
    /// polynomial of an even space).
    int64_t coeff_sum() const;
    std::string to_string() const;

    bool operator==(const PoincarePolynomial&) const = default;

   private:
    std::vector<int64_t> coeffs_;  // trailing zeros stripped when complete
    std::optional<int> truncation_;
};

/// Convolution product.  Result truncation = min of the input truncations
/// (a complete input counts as unbounded).
PoincarePolynomial poly_mul(const PoincarePolynomial& a, const PoincarePolynomial& b);

/// Exact division by ascending-degree synthetic division.  Requires complete
/// inputs and a denominator with constant term +-1.  The quotient must come
/// out exact and nonnegative; anything else signals bad input data
/// (NonExactDivision / NegativeCoefficient).
PoincarePolynomial poly_div_exact(const PoincarePolynomial& num, const PoincarePolynomial& den);

/// Drop coefficients above D and record the truncation.
PoincarePolynomial truncate(const PoincarePolynomial& p, int D);

/// True iff coeffs[i] == coeffs[deg-i] for all i.  Complete inputs only.
bool is_palindromic(const PoincarePolynomial& p);

namespace detail {
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
}  // namespace detail

}  // namespace symspace

#endif

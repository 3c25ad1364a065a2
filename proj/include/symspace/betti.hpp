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

#ifndef SYMSPACE_BETTI_HPP
#define SYMSPACE_BETTI_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "symspace/catalog.hpp"
#include "symspace/poly.hpp"

namespace symspace {

struct BettiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankMismatch : BettiError {
    using BettiError::BettiError;
};
struct UnknownBetti : BettiError {
    UnknownBetti(int degree, const std::string& what) : BettiError(what), degree(degree) {}
    int degree;
};

inline constexpr int64_t kBettiUnbounded = std::numeric_limits<int64_t>::max();

/// What is known about one Betti number: an interval [lo, hi] with
/// hi == kBettiUnbounded meaning no upper bound.  Exact values have lo == hi.
struct BettiEntry {
    int64_t lo = 0;
    int64_t hi = kBettiUnbounded;

    static BettiEntry exact(int64_t v) { return {v, v}; }
    static BettiEntry at_least(int64_t v) { return {v, kBettiUnbounded}; }
    static BettiEntry unknown() { return {0, kBettiUnbounded}; }

    bool is_exact() const noexcept { return lo == hi; }
    bool is_known_zero() const noexcept { return lo == 0 && hi == 0; }
    bool operator==(const BettiEntry&) const = default;
};

/// Rational Betti numbers of a space, possibly partial.  A complete vector
/// knows every degree (zero beyond the stored span); a partial vector knows
/// the per-degree intervals it stores and nothing above known_up_to().
class BettiVector {
   public:
    BettiVector() = default;

    static BettiVector from_polynomial(const PoincarePolynomial& p);
    static BettiVector complete_zero();  // the (rational) point
    /// Scaffold for witness data: b_0 = 1, b_1 = 0, everything else unknown,
    /// degrees above known_up_to unknown as well.
    static BettiVector partial(int known_up_to);

    BettiEntry at(int degree) const;
    /// Exact value at `degree`, or UnknownBetti.
    int64_t exact_at(int degree) const;
    void set(int degree, BettiEntry e);

    bool complete() const noexcept { return complete_; }
    /// Largest degree with (possibly partial) information; INT_MAX when
    /// complete.
    int known_up_to() const noexcept;
    /// Degree of the top stored entry (the dimension, for a complete vector
    /// of a closed manifold).
    int top_degree() const noexcept;

    /// Complete and exact in every degree.
    bool fully_exact() const noexcept;

    PoincarePolynomial to_polynomial() const;  // requires complete + exact

    /// Strip trailing known-zero entries of a complete vector.
    void normalize();

    bool operator==(const BettiVector&) const = default;

   private:
    std::vector<BettiEntry> entries_;
    bool complete_ = true;
    int known_up_to_ = 0;
};

/// Betti data of a catalog space through degree min(D, dim).  Computed
/// sources give exact values; witness sources give the cited constraints plus
/// b_0 = 1 and b_1 = 0 (the catalog spaces are simply connected), leaving all
/// other degrees unknown.
BettiVector betti_vector(const IrreducibleSpace& s, int D);

/// Borel quotient for an equal-rank pair: P = prod(1-t^(n_i+1)) / prod(1-t^(m_j+1)).
PoincarePolynomial poincare_equal_rank(const GroupDescriptor& g, const std::vector<GroupDescriptor>& h);

/// Poincare polynomial of a Computed-source catalog space.
PoincarePolynomial space_polynomial(const IrreducibleSpace& s);

/// Kuenneth convolution truncated at D.
BettiVector product_betti(std::span<const BettiVector> factors, int D);
BettiVector product_betti(const std::vector<IrreducibleSpace>& factors, int D);

/// Betti numbers of a connected sum of two closed n-manifolds: middle degrees
/// add, b_0 = b_n = 1.  Requires complete exact inputs of top degree n.
BettiVector connected_sum_betti(const BettiVector& a, const BettiVector& b, int n);

/// Sum of Betti numbers == prod(n_i+1)/prod(m_j+1) for an equal-rank
/// Computed space.  Throws BettiError when the space is not equal rank.
bool euler_characteristic_check(const IrreducibleSpace& s);

}  // namespace symspace

#endif

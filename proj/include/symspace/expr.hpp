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

#ifndef SYMSPACE_EXPR_HPP
#define SYMSPACE_EXPR_HPP

#include <string>
#include <vector>

#include "symspace/catalog.hpp"

namespace symspace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A product of irreducible factors; expressions may connect-sum several
/// products of equal dimension with '#'.
struct ProductSpace {
    std::vector<IrreducibleSpace> factors;
    int dimension() const;
    std::string name() const;  // factors joined with " x "
};

struct SpaceExpression {
    std::vector<ProductSpace> summands;  // connected-sum operands, usually one
    bool is_connected_sum() const { return summands.size() > 1; }
    std::string name() const;
};

/// Factor grammar: S^k, CP^k, HP^k, CaP2, GrR(p,q), GrC(p,q), GrH(p,q),
/// AI(n), AII(n), CI(n), DIII(n), EI..EIX, FI, FII, G, group:<name> with
/// <name> in {SU(n), Spin(k), Sp(n), G2, F4, E6, E7, E8}.  Factors are
/// joined with 'x', connected summands with '#'.
SpaceExpression parse_space_expression(const std::string& text);

}  // namespace symspace

#endif

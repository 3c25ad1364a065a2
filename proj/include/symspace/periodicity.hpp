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

#ifndef SYMSPACE_PERIODICITY_HPP
#define SYMSPACE_PERIODICITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symspace/betti.hpp"
#include "symspace/catalog.hpp"

namespace symspace {

struct PeriodicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFailing : PeriodicityError {
    using PeriodicityError::PeriodicityError;
};

enum class Verdict { Periodic, Fails, Undetermined };

/// The two shapes a 4-periodic Betti vector can take: b_4 = 0 forces
/// everything below c to vanish; b_4 = 1 forces the b_i = b_{i+4} ladder.
enum class Branch { Connected, Periodic4 };

enum class ObstructionKind {
    B4Bound,    // b_4 > 1                       rendered "1<b_4"
    IsoLess,    // b_i < b_{i+4} (or b_j)        rendered "b_i<b_j"
    IsoGreater, // b_i > b_{i+4} (incl. the injection b_{c-4} <= b_c)
    Positive,   // b_j > 0 where 0 is required   rendered "b_j>0"
};

struct Obstruction {
    ObstructionKind kind = ObstructionKind::Positive;
    int i = 0;  // lower degree of the violated pair (unused for Positive/B4Bound)
    int j = 0;  // degree whose Betti number is too large/positive
    std::string str() const;
    bool operator==(const Obstruction&) const = default;
};

struct PeriodicityReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Obstruction> obstruction;  // present iff verdict == Fails
    std::optional<Branch> branch;            // known b_4 branch, when determined
    std::optional<std::string> factor;       // product factor that produced the obstruction
    bool operator==(const PeriodicityReport&) const = default;
};

/// Betti-level 4-periodicity check up to degree c (c >= 8): b_4 <= 1,
/// b_i = b_{i+4} for 0 < i < c-4, b_{c-4} <= b_c, and b_4 = 0 only if
/// b_i = 0 for all 0 < i < c.  Fails reports the lowest-degree violated
/// inequality, except that the b_4 <= 1 bound is reported ahead of the
/// ladder checks.  Partial data yields Undetermined unless some violation
/// is already certain.
PeriodicityReport check_4periodic(const BettiVector& b, int c);

/// Canonical rendering of a Fails report; throws NotFailing otherwise.
std::string obstruction_string(const PeriodicityReport& r);

/// check_4periodic over the catalog restricted to dim >= 16, sorted by the
/// canonical space order.  Requires c >= 16.
std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> classify_irreducibles(int c, int max_dim,
                                                                                  int max_param);
std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> classify_irreducibles_serial(int c, int max_dim,
                                                                                         int max_param);

/// Conclusions of the periodic-product analysis for M = M1 x M2 with
/// b_4(M1) >= b_4(M2), b_1(M) = 0 and M passing check_4periodic at c >= 9:
/// either M is (c-1)-connected at Betti level, or b_4(M1) = 1 and
///   (1) M1 passes check_4periodic at c,
///   (2) b_i(M2) = 0 for 3 < i < c,
///   (3) b_2(M1)+b_3(M1) > 0 implies b_2(M2) = b_3(M2) = 0.
struct ProductAnalysis {
    bool connected_branch = false;
    bool b4_one = false;
    bool factor_periodic = false;
    bool tail_vanishes = false;
    bool low_degree_exclusion = false;
    std::vector<std::string> failed;  // names of conclusions that do not hold
    bool all_hold() const { return failed.empty(); }
};
ProductAnalysis product_factor_analysis(const BettiVector& b1, const BettiVector& b2, int c);

/// Product-aware periodicity check: the Betti check on the full product
/// vector plus, for genuine products, the factor conditions above applied
/// with M1 = the factor of largest b_4.  The factor conditions are necessary
/// for ring-level periodicity of a product and reject Betti-level
/// coincidences such as S^4 x CaP2.
PeriodicityReport check_product(const std::vector<IrreducibleSpace>& factors, int c);

/// True iff b_i = 0 for all 3 < i < 16.  Needs data through degree 15.
bool low_degree_gap(const BettiVector& b);

enum class ShapeCase { SpheresOnly, SpheresTimesCPorGr2, SpheresTimesHPorGr3TimesQ, NotListed };

struct ShapeVerdict {
    bool allowed = false;
    ShapeCase shape = ShapeCase::NotListed;
    std::vector<IrreducibleSpace> big_spheres;   // the S part, each dim >= c
    std::optional<IrreducibleSpace> rank1_like;  // the R factor of case 2/3
    std::optional<IrreducibleSpace> small_q;     // the Q factor of case 3
};

/// Whether the factor list matches one of the allowed product shapes:
/// (1) spheres of dim >= c only; (2) spheres x one of {CP^q, GrR(2,q)};
/// (3) spheres x one of {HP^q, GrR(3,q)} x optionally one of {S^2, S^3}.
/// CaP2 is never listed.
ShapeVerdict shape_verdict(const std::vector<IrreducibleSpace>& factors, int c);

enum class BettiPattern { SphereLike, CPLike, HPLike, S2xHPLike, S3xHPLike, None };

/// Match a complete Betti vector of dimension n against the closed-form
/// patterns.  The CP and S^2 x HP patterns coincide at Betti level in
/// dimensions = 2 mod 4; CPLike takes precedence there.
BettiPattern pattern_classify(const BettiVector& b, int n);

std::string verdict_name(Verdict v);

}  // namespace symspace

#endif

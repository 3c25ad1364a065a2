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

#ifndef SYMSPACE_SYMRANK_HPP
#define SYMSPACE_SYMRANK_HPP

#include <cstdint>
#include <stdexcept>

namespace symspace {

struct SymrankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parity marker: 0 for even n, 1 for odd n.
int delta(int64_t n);

/// f_c(n) = 2 log2(n) + c/2 - 1 - delta(n), as a double for display.
double f_c(int64_t n, int64_t c);

/// Maximal symmetry rank of a positively curved n-manifold: floor((n+1)/2).
int64_t max_symrank(int64_t n);

// Exact threshold comparisons.  All logarithmic thresholds are decided by
// integer exponentiation (e.g. rank >= 2 log2 n + c/2 - 1 iff
// 2^(2 rank + 2 - c) >= n^4), so boundary values are exact.

/// rank >= 2 log2(n) + c/2 - 1.
bool meets_bc_threshold(int64_t n, int64_t c, int64_t rank);
/// rank >= 2 log2(n) + 7.
bool meets_log_plus_seven(int64_t n, int64_t rank);
/// rank >= f_c(n) = 2 log2(n) + c/2 - 1 - delta(n).
bool meets_fc(int64_t n, int64_t c, int64_t rank);
/// rank >= log2(n) + c/2 + 1 + log2(3) - delta(n).
bool meets_second_involution_threshold(int64_t n, int64_t c, int64_t rank);
/// rank >= 2 log2(n).
bool meets_two_log(int64_t n, int64_t rank);

/// Least integer rank satisfying each exact threshold.
int64_t min_rank_bc(int64_t n, int64_t c);
int64_t min_rank_log_plus_seven(int64_t n);
int64_t min_rank_fc(int64_t n, int64_t c);
int64_t min_rank_second_involution(int64_t n, int64_t c);

struct ThresholdQuery {
    int64_t n = 0;
    int64_t c = 0;
    int64_t rank = 0;
};

struct HypothesisReport {
    int64_t n = 0;
    int64_t c = 0;
    int64_t rank = 0;

    bool bc_met = false;            // rank >= 2 log2 n + c/2 - 1
    bool log7_met = false;          // rank >= 2 log2 n + 7
    int64_t berger_reduced = 0;     // rank - delta(n)
    bool berger_meets_fc = false;   // reduced rank >= f_c(n)
    bool sigma_threshold_met = false;  // rank >= f_c(n)
    bool tau_threshold_met = false;    // rank >= log2 n + c/2 + 1 + log2 3 - delta(n)

    int64_t max_rank = 0;  // floor((n+1)/2)
    bool bc_vacuous = false;    // min rank for the b/c threshold exceeds max_rank
    bool log7_vacuous = false;
    bool any_vacuous = false;

    bool chern_regime = false;  // n = 1 mod 4 and rank >= 2 log2 n
    double fc_value = 0.0;
    double wilking_linear = 0.0;  // n/6 + 1, for comparison only
};

HypothesisReport hypothesis_report(const ThresholdQuery& q);

}  // namespace symspace

#endif

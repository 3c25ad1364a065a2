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

#include "symspace/symrank.hpp"

#include <cmath>

namespace symspace {

namespace {

using int128 = __int128;

constexpr int64_t kMaxN = int64_t{1} << 20;

void check_n(int64_t n) {
    if (n < 1 || n > kMaxN) throw SymrankError("dimension out of supported range");
}

int128 pow4(int64_t n) { return int128(n) * n * int128(n) * n; }

// 2^e >= v, exactly, for v >= 1 and any integer e.
bool pow2_geq(int64_t e, int128 v) {
    if (v <= 1) return e >= 0;
    if (e < 0) return false;
    if (e >= 127) return true;
    return (int128(1) << e) >= v;
}

// Least integer e with 2^e >= v (v >= 1).
int64_t ceil_log2(int128 v) {
    int64_t e = 0;
    while (!pow2_geq(e, v)) ++e;
    return e;
}

// Least integer rank with pow2_geq(a*rank + b, v).
int64_t min_rank_for(int64_t a, int64_t b, int128 v) {
    int64_t e = ceil_log2(v);
    // a*rank + b >= e  =>  rank >= ceil((e - b)/a)
    int64_t num = e - b;
    int64_t r = num <= 0 ? 0 : (num + a - 1) / a;
    return r;
}

}  // namespace

int delta(int64_t n) {
    if (n < 0) throw SymrankError("delta needs n >= 0");
    return static_cast<int>(n % 2);
}

double f_c(int64_t n, int64_t c) {
    if (n < 2) throw SymrankError("f_c needs n >= 2");
    return 2.0 * std::log2(static_cast<double>(n)) + static_cast<double>(c) / 2.0 - 1.0 -
           static_cast<double>(delta(n));
}

int64_t max_symrank(int64_t n) {
    if (n < 1) throw SymrankError("max_symrank needs n >= 1");
    return (n + 1) / 2;
}

// rank >= 2 log2 n + c/2 - 1  <=>  2^(2 rank + 2 - c) >= n^4
bool meets_bc_threshold(int64_t n, int64_t c, int64_t rank) {
    check_n(n);
    return pow2_geq(2 * rank + 2 - c, pow4(n));
}

// rank >= 2 log2 n + 7  <=>  2^(rank - 7) >= n^2
bool meets_log_plus_seven(int64_t n, int64_t rank) {
    check_n(n);
    return pow2_geq(rank - 7, int128(n) * n);
}

// rank >= 2 log2 n + c/2 - 1 - delta  <=>  2^(2 rank + 2 + 2 delta - c) >= n^4
bool meets_fc(int64_t n, int64_t c, int64_t rank) {
    check_n(n);
    return pow2_geq(2 * rank + 2 + 2 * delta(n) - c, pow4(n));
}

// rank >= log2 n + c/2 + 1 + log2 3 - delta  <=>  2^(2 rank + 2 delta - 2 - c) >= 9 n^2
bool meets_second_involution_threshold(int64_t n, int64_t c, int64_t rank) {
    check_n(n);
    return pow2_geq(2 * rank + 2 * delta(n) - 2 - c, int128(9) * n * n);
}

// rank >= 2 log2 n  <=>  2^rank >= n^2
bool meets_two_log(int64_t n, int64_t rank) {
    check_n(n);
    return pow2_geq(rank, int128(n) * n);
}

int64_t min_rank_bc(int64_t n, int64_t c) {
    check_n(n);
    return min_rank_for(2, 2 - c, pow4(n));
}

int64_t min_rank_log_plus_seven(int64_t n) {
    check_n(n);
    return min_rank_for(1, -7, int128(n) * n);
}

int64_t min_rank_fc(int64_t n, int64_t c) {
    check_n(n);
    return min_rank_for(2, 2 + 2 * delta(n) - c, pow4(n));
}

int64_t min_rank_second_involution(int64_t n, int64_t c) {
    check_n(n);
    return min_rank_for(2, 2 * delta(n) - 2 - c, int128(9) * n * n);
}

HypothesisReport hypothesis_report(const ThresholdQuery& q) {
    if (q.n < 2 || q.c < 2 || q.n < q.c) throw SymrankError("query needs n >= c >= 2");
    if (q.rank < 0) throw SymrankError("rank must be nonnegative");
    HypothesisReport r;
    r.n = q.n;
    r.c = q.c;
    r.rank = q.rank;

    r.bc_met = meets_bc_threshold(q.n, q.c, q.rank);
    r.log7_met = meets_log_plus_seven(q.n, q.rank);
    r.berger_reduced = q.rank - delta(q.n);
    // reduced >= f_c(n)  <=>  2^(2 reduced + 2 + 2 delta - c) >= n^4
    r.berger_meets_fc = pow2_geq(2 * r.berger_reduced + 2 + 2 * delta(q.n) - q.c, pow4(q.n));
    r.sigma_threshold_met = meets_fc(q.n, q.c, q.rank);
    r.tau_threshold_met = meets_second_involution_threshold(q.n, q.c, q.rank);

    r.max_rank = max_symrank(q.n);
    r.bc_vacuous = min_rank_bc(q.n, q.c) > r.max_rank;
    r.log7_vacuous = min_rank_log_plus_seven(q.n) > r.max_rank;
    r.any_vacuous = r.bc_vacuous || r.log7_vacuous ||
                    min_rank_fc(q.n, q.c) > r.max_rank ||
                    min_rank_second_involution(q.n, q.c) > r.max_rank;

    r.chern_regime = q.n % 4 == 1 && meets_two_log(q.n, q.rank);
    r.fc_value = f_c(q.n, q.c);
    r.wilking_linear = static_cast<double>(q.n) / 6.0 + 1.0;
    return r;
}

}  // namespace symspace

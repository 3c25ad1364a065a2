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

// Timings of the parallel kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <random>

#include "symspace/codes.hpp"
#include "symspace/periodicity.hpp"

using namespace symspace;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    {
        std::mt19937_64 rng(7);
        LinearEmbedding e = random_full_rank_embedding(22, 128, rng);
        int ws = 0, wp = 0;
        double ts = time_ms([&] { ws = min_weight_serial(e); });
        double tp = time_ms([&] { wp = min_weight(e); });
        report("min_weight r=22 m=128", ts, tp);
        if (ws != wp) std::printf("  MISMATCH: %d vs %d\n", ws, wp);
    }
    {
        GriesmerVerifyResult rs, rp;
        double ts = time_ms([&] { rs = verify_griesmer_exhaustive_serial(4, 9); });
        double tp = time_ms([&] { rp = verify_griesmer_exhaustive(4, 9); });
        report("griesmer verify r<=4 m<=9", ts, tp);
        if (rs.codes_checked != rp.codes_checked || rs.violations != rp.violations)
            std::printf("  MISMATCH in scan totals\n");
    }
    {
        AlgLemmaSweep ss, sp;
        double ts = time_ms([&] { ss = alg_lemma_sweep_serial(2048); });
        double tp = time_ms([&] { sp = alg_lemma_sweep(2048); });
        report("alg-lemma sweep n<=2048", ts, tp);
        if (ss.cases != sp.cases || ss.violations != sp.violations)
            std::printf("  MISMATCH in sweep totals\n");
    }
    {
        std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> rs, rp;
        double ts = time_ms([&] { rs = classify_irreducibles_serial(16, 256, 24); });
        double tp = time_ms([&] { rp = classify_irreducibles(16, 256, 24); });
        report("classify dim<=256", ts, tp);
        if (rs.size() != rp.size()) std::printf("  MISMATCH in result size\n");
    }
    return 0;
}

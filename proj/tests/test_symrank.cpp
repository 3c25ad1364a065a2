#include <cmath>

#include "doctest.h"
#include "symspace/symrank.hpp"

using namespace symspace;

TEST_SUITE("symrank") {
    TEST_CASE("delta and f_c") {
        CHECK(delta(4) == 0);
        CHECK(delta(7) == 1);
        CHECK(delta(0) == 0);
        CHECK(f_c(16, 16) == doctest::Approx(15.0).epsilon(1e-12));
        CHECK(f_c(64, 2) == doctest::Approx(12.0).epsilon(1e-12));
        CHECK(f_c(7, 2) == doctest::Approx(2.0 * std::log2(7.0) - 1.0).epsilon(1e-12));
        CHECK(f_c(8, 2) == doctest::Approx(6.0).epsilon(1e-12));
    }

    TEST_CASE("max symmetry rank") {
        CHECK(max_symrank(5) == 3);
        CHECK(max_symrank(16) == 8);
        CHECK(max_symrank(1) == 1);
    }

    TEST_CASE("exact threshold comparisons at boundaries") {
        // 2 log2(1024) + 7 = 27 exactly
        CHECK(meets_log_plus_seven(1024, 27));
        CHECK_FALSE(meets_log_plus_seven(1024, 26));
        CHECK(min_rank_log_plus_seven(1024) == 27);
        // 2 log2(16) + 16/2 - 1 = 15 exactly
        CHECK(meets_bc_threshold(16, 16, 15));
        CHECK_FALSE(meets_bc_threshold(16, 16, 14));
        CHECK(min_rank_bc(16, 16) == 15);
        // f_2(64) = 12 exactly
        CHECK(meets_fc(64, 2, 12));
        CHECK_FALSE(meets_fc(64, 2, 11));
        // non-power-of-two boundary: 2 log2(7) - 1 = 4.61...
        CHECK(meets_fc(7, 2, 5));
        CHECK_FALSE(meets_fc(7, 2, 4));
        CHECK(min_rank_fc(7, 2) == 5);
        // second involution threshold at n=64, c=2: 6 + 1 + 1 + log2 3 = 9.58...
        CHECK(meets_second_involution_threshold(64, 2, 10));
        CHECK_FALSE(meets_second_involution_threshold(64, 2, 9));
        CHECK(min_rank_second_involution(64, 2) == 10);
    }

    TEST_CASE("exact comparisons agree with floating evaluation off boundaries") {
        for (int64_t n = 2; n <= 300; ++n)
            for (int64_t c : {2, 5, 10, 16}) {
                if (n < c) continue;
                double t = 2.0 * std::log2(static_cast<double>(n)) + c / 2.0 - 1.0;
                for (int64_t rank = 0; rank <= 40; ++rank) {
                    double diff = rank - t;
                    if (std::abs(diff) < 1e-9) continue;  // boundary handled exactly elsewhere
                    CHECK(meets_bc_threshold(n, c, rank) == (diff > 0));
                }
            }
    }

    TEST_CASE("f_c monotonicity") {
        for (int64_t c : {2, 4, 9, 16})
            for (int64_t n = 4; n <= 512; ++n) {
                if (n < c) continue;
                if (n - 2 >= c) CHECK(f_c(n, c) >= f_c(n - 2, c));  // same parity
                CHECK(f_c(n, c + 1) > f_c(n, c));
            }
    }

    TEST_CASE("low dimensions sit above the maximal rank") {
        for (int64_t n = 2; n <= 5; ++n)
            for (int64_t c = 2; c <= n; ++c)
                CHECK(f_c(n, c) >= static_cast<double>(max_symrank(n)) - 1e-12);
    }

    TEST_CASE("vacuity sweep at c = 16") {
        // The required rank exceeds the maximal one iff 2 log2 n + 7 >
        // max_symrank(n); since the right side is an integer this is
        // n^2 > 2^(max_symrank(n) - 7), checked by an independent route.
        for (int64_t n = 16; n <= 1024; ++n) {
            bool vac = min_rank_log_plus_seven(n) > max_symrank(n);
            int64_t e = max_symrank(n) - 7;
            bool expect;
            if (e < 0) expect = true;
            else if (e >= 63) expect = false;
            else expect = static_cast<__int128>(n) * n > (static_cast<__int128>(1) << e);
            CHECK_MESSAGE(vac == expect, "n=", n);
        }
    }

    TEST_CASE("hypothesis report") {
        HypothesisReport r = hypothesis_report({16, 16, 15});
        CHECK(r.bc_met);
        CHECK(r.log7_met);
        CHECK(r.any_vacuous);  // 15 > max_symrank(16) = 8
        CHECK(r.max_rank == 8);

        HypothesisReport low = hypothesis_report({16, 16, 8});
        CHECK_FALSE(low.bc_met);
        CHECK(low.bc_vacuous);

        HypothesisReport berger = hypothesis_report({17, 2, 9});
        CHECK(berger.berger_reduced == 8);  // delta(17) = 1
        CHECK(berger.berger_meets_fc);      // 8 >= f_2(17) = 2 log2 17 - 1 = 7.17...

        HypothesisReport chern = hypothesis_report({17, 2, 9});
        CHECK(chern.chern_regime);  // 17 = 1 mod 4, 9 >= 2 log2 17 = 8.17...
        CHECK_FALSE(hypothesis_report({16, 2, 9}).chern_regime);
        CHECK_FALSE(hypothesis_report({17, 2, 8}).chern_regime);

        HypothesisReport big = hypothesis_report({6000, 16, 40});
        CHECK(big.wilking_linear == doctest::Approx(1001.0));
        CHECK_FALSE(big.any_vacuous);

        CHECK_THROWS_AS(hypothesis_report({1, 2, 3}), SymrankError);
        CHECK_THROWS_AS(hypothesis_report({4, 8, 3}), SymrankError);
    }
}

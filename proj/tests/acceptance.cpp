// Acceptance suite: one criterion per function, one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "symspace/betti.hpp"
#include "symspace/catalog.hpp"
#include "symspace/codes.hpp"
#include "symspace/expr.hpp"
#include "symspace/periodicity.hpp"
#include "symspace/symrank.hpp"
#include "symspace/tables.hpp"

using namespace symspace;

namespace {

struct Criterion {
    int id;
    const char* summary;
    double limit_seconds;
    bool (*run)(std::string& detail);
};

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    return cond;
}

std::vector<int> spheres_of(const GroupDescriptor& g) { return group_spheres(g).dims; }

// --------------------------------------------------------------------------
// 1. Sphere-dimension table regeneration
// --------------------------------------------------------------------------
bool criterion1(std::string& detail) {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> quat, spin_odd, spin_even, unitary, special_unitary;
        for (int i = 1; i <= n; ++i) quat.push_back(4 * i - 1);
        spin_odd = quat;
        for (int i = 1; i <= n - 1; ++i) spin_even.push_back(4 * i - 1);
        spin_even.push_back(2 * n - 1);
        std::sort(spin_even.begin(), spin_even.end());
        for (int i = 1; i <= n; ++i) unitary.push_back(2 * i - 1);
        for (int i = 2; i <= n; ++i) special_unitary.push_back(2 * i - 1);

        ok &= expect(spheres_of(GroupDescriptor::Sp(n)) == quat, detail, "Sp row");
        ok &= expect(spheres_of(GroupDescriptor::Spin(2 * n + 1)) == spin_odd, detail, "Spin odd row");
        ok &= expect(spheres_of(GroupDescriptor::Spin(2 * n)) == spin_even, detail, "Spin even row");
        ok &= expect(spheres_of(GroupDescriptor::U(n)) == unitary, detail, "U row");
        ok &= expect(spheres_of(GroupDescriptor::SU(n)) == special_unitary, detail, "SU row");
    }
    using V = std::vector<int>;
    ok &= expect(spheres_of(GroupDescriptor::exceptional(GroupFamily::G2)) == V{3, 11}, detail, "G2");
    ok &= expect(spheres_of(GroupDescriptor::exceptional(GroupFamily::F4)) == V{3, 11, 15, 23},
                 detail, "F4");
    ok &= expect(spheres_of(GroupDescriptor::exceptional(GroupFamily::E6)) == V{3, 9, 11, 15, 17, 23},
                 detail, "E6");
    ok &= expect(spheres_of(GroupDescriptor::exceptional(GroupFamily::E7)) ==
                     V{3, 11, 15, 19, 23, 27, 35},
                 detail, "E7");
    ok &= expect(spheres_of(GroupDescriptor::exceptional(GroupFamily::E8)) ==
                     V{3, 15, 23, 27, 35, 39, 47, 59},
                 detail, "E8");
    ok &= expect(table1_rows().size() == 10, detail, "ten rows");
    return ok;
}

// --------------------------------------------------------------------------
// 2. Leading terms and obstruction columns of the classification tables
// --------------------------------------------------------------------------
bool criterion2(std::string& detail) {
    bool ok = true;
    auto poly_of = [](const IrreducibleSpace& s) { return space_polynomial(s); };

    {
        PoincarePolynomial p = poly_of(IrreducibleSpace::sp_mod_u(4));
        ok &= expect(p.coeff(2) == 1 && p.coeff(4) == 1 && p.coeff(6) == 2, detail, "Sp(4)/U(4)");
    }
    ok &= expect(poly_of(IrreducibleSpace::complex_gr(2, 2)).coeff(4) == 2, detail, "GrC(2,2)");
    {
        PoincarePolynomial p = poly_of(IrreducibleSpace::quat_gr(2, 2));
        ok &= expect(p.coeff(4) == 1 && p.coeff(8) == 2, detail, "GrH(2,2)");
    }
    {
        PoincarePolynomial p = poly_of(IrreducibleSpace::so_mod_u(5));
        ok &= expect(p.coeff(2) == 1 && p.coeff(4) == 1 && p.coeff(6) == 2, detail, "SO(10)/U(5)");
    }
    ok &= expect(poly_of(IrreducibleSpace::exceptional(SpaceKind::G2SO4)) ==
                     PoincarePolynomial({1, 0, 0, 0, 1, 0, 0, 0, 1}),
                 detail, "G2/SO(4) exact");
    {
        PoincarePolynomial p = poly_of(IrreducibleSpace::exceptional(SpaceKind::EIII));
        ok &= expect(p.coeff(4) == 1 && p.coeff(8) == 2, detail, "E6/SO(10)xSO(2)");
    }
    {
        // E7/SU(8): first positive degree = 0 mod 4 is 8 (b_4 = 0, b_8 = 1).
        PoincarePolynomial p = poly_of(IrreducibleSpace::exceptional(SpaceKind::EV));
        int first_mod4 = 0;
        for (int d = 4; d <= 70; d += 4)
            if (p.coeff(d) > 0) {
                first_mod4 = d;
                break;
            }
        ok &= expect(first_mod4 == 8 && p.coeff(4) == 0 && p.coeff(8) == 1, detail, "E7/SU(8)");
    }
    for (SpaceKind k : {SpaceKind::EVII, SpaceKind::EIX}) {
        PoincarePolynomial p = poly_of(IrreducibleSpace::exceptional(k));
        ok &= expect(p.coeff(4) == 1 && p.coeff(8) == 1 && p.coeff(12) == 2, detail,
                     "t^4+t^8+2t^12 row");
    }
    ok &= expect(poly_of(IrreducibleSpace::cap2()) ==
                     PoincarePolynomial({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}),
                 detail, "F4/Spin(9) exact");

    // Obstruction columns, byte for byte.
    const std::vector<std::string> expect2 = {"b_5>0",  "b_5>0",  "1<b_4", "1<b_4",
                                              "b_2<b_6", "b_4<b_8", "b_2<b_6"};
    const std::vector<std::string> expect3 = {"0<b_9",   "0<b_9",   "b_4<b_8", "b_4<b_8",
                                              "b_4<b_8", "b_4<b_8", "b_8<b_12", "b_4<b_8",
                                              "b_8<b_12", "b_4<b_8", "b_4<b_8", "b_8>b_12"};
    auto check_column = [&](int id, const std::vector<std::string>& want) {
        auto rows = table_rows(id);
        if (!expect(rows.size() == want.size(), detail, "row count")) return;
        for (size_t i = 0; i < rows.size(); ++i)
            ok &= expect(rows[i].obstruction == want[i], detail,
                         rows[i].gh + " obstruction '" + rows[i].obstruction + "'");
    };
    check_column(2, expect2);
    check_column(3, expect3);

    // Every printed column is verified against computation.
    auto problems = verify_tables();
    for (const auto& p : problems) ok &= expect(false, detail, p);

    // The engine's own lowest-degree report matches the printed column on
    // every row except EII, EV, EVII, whose printed inequalities sit higher
    // in the ladder (their truth is checked by verify_tables above).
    std::set<std::string> hand_picked = {"E6/SU(6)xSU(2)", "E7/SU(8)", "E7/E6xSO(2)"};
    for (int id : {2, 3}) {
        for (const auto& row : table_rows(id)) {
            if (hand_picked.count(row.gh)) continue;
            auto rep = check_4periodic(betti_vector(row.smallest_space(), 16), 16);
            ok &= expect(rep.verdict == Verdict::Fails, detail, row.gh + " verdict");
            if (rep.verdict == Verdict::Fails)
                ok &= expect(*rep.obstruction == parse_obstruction(row.obstruction), detail,
                             row.gh + " engine says " + obstruction_string(rep));
        }
    }
    return ok;
}

// --------------------------------------------------------------------------
// 3. Classification sweep at c = 16
// --------------------------------------------------------------------------
bool criterion3(std::string& detail) {
    bool ok = true;
    auto results = classify_irreducibles(16, 64, 20);
    ok &= expect(!results.empty(), detail, "empty sweep");
    for (const auto& [s, rep] : results) {
        if (rep.verdict != Verdict::Periodic) continue;
        bool allowed = s.kind() == SpaceKind::Sphere || s.kind() == SpaceKind::CP ||
                       s.kind() == SpaceKind::HP ||
                       (s.kind() == SpaceKind::RealGr && (s.p() == 2 || s.p() == 3));
        ok &= expect(allowed, detail, "periodic space " + s.name());
        ok &= expect(s.kind() != SpaceKind::LieGroup, detail, "Lie group " + s.name());
        ok &= expect(s.kind() != SpaceKind::ComplexGr && s.kind() != SpaceKind::QuatGr, detail,
                     "rank >= 2 Grassmannian " + s.name());
    }
    return ok;
}

// --------------------------------------------------------------------------
// 4. E8 x HP^3 flips between c = 15 and c = 16
// --------------------------------------------------------------------------
bool criterion4(std::string& detail) {
    bool ok = true;
    std::vector<IrreducibleSpace> fs = {
        IrreducibleSpace::lie_group(GroupDescriptor::exceptional(GroupFamily::E8)),
        IrreducibleSpace::hp(3)};
    ok &= expect(check_product(fs, 15).verdict == Verdict::Periodic, detail, "c=15 not periodic");
    auto rep = check_product(fs, 16);
    ok &= expect(rep.verdict == Verdict::Fails, detail, "c=16 not failing");
    ok &= expect(rep.obstruction && rep.obstruction->i == 11 && rep.obstruction->j == 15, detail,
                 "lowest violation not at i=11");
    BettiVector prod = product_betti(fs, 16);
    ok &= expect(prod.exact_at(11) == 1 && prod.exact_at(15) == 2, detail, "b_11/b_15 values");
    return ok;
}

// --------------------------------------------------------------------------
// 5. Connected sums fail at c = 10
// --------------------------------------------------------------------------
bool criterion5(std::string& detail) {
    bool ok = true;
    auto betti_of = [](const IrreducibleSpace& s) {
        return BettiVector::from_polynomial(space_polynomial(s));
    };
    auto check_fails = [&](const BettiVector& a, const BettiVector& b, int n, const char* name) {
        auto rep = check_4periodic(connected_sum_betti(a, b, n), 10);
        ok &= expect(rep.verdict == Verdict::Fails, detail, std::string(name) + " not failing");
        if (rep.obstruction) {
            bool via48 = rep.obstruction->kind == ObstructionKind::B4Bound ||
                         rep.obstruction->i == 4 || rep.obstruction->j == 4 ||
                         rep.obstruction->i == 8 || rep.obstruction->j == 8;
            ok &= expect(via48, detail, std::string(name) + " fails away from b_4/b_8");
        }
    };
    // CP^m # CP^m, dim 2m >= 10
    check_fails(betti_of(IrreducibleSpace::cp(5)), betti_of(IrreducibleSpace::cp(5)), 10, "CP5#CP5");
    check_fails(betti_of(IrreducibleSpace::cp(8)), betti_of(IrreducibleSpace::cp(8)), 16, "CP8#CP8");
    // HP^m # HP^m
    check_fails(betti_of(IrreducibleSpace::hp(3)), betti_of(IrreducibleSpace::hp(3)), 12, "HP3#HP3");
    check_fails(betti_of(IrreducibleSpace::hp(4)), betti_of(IrreducibleSpace::hp(4)), 16, "HP4#HP4");
    // HP^4 # CaP2 (equal dimension 16)
    check_fails(betti_of(IrreducibleSpace::hp(4)), betti_of(IrreducibleSpace::cap2()), 16,
                "HP4#CaP2");
    check_fails(betti_of(IrreducibleSpace::cap2()), betti_of(IrreducibleSpace::cap2()), 16,
                "CaP2#CaP2");
    return ok;
}

// --------------------------------------------------------------------------
// 6. Exhaustive Griesmer verification
// --------------------------------------------------------------------------
bool criterion6(std::string& detail) {
    bool ok = true;
    auto small = verify_griesmer_exhaustive(3, 7);
    ok &= expect(small.violations == 0, detail, "violations in r<=3, m<=7");
    bool simplex = false;
    for (const auto& e : small.equalities)
        if (e.r == 3 && e.m == 7 && e.min_weight == 4 && e.uniform_codes > 0) simplex = true;
    ok &= expect(simplex, detail, "simplex [7,3,4] equality witness missing");

    auto big = verify_griesmer_exhaustive(4, 10);
    ok &= expect(big.violations == 0, detail, "violations in r<=4, m<=10");
    ok &= expect(big.codes_checked > 50000000ull, detail, "suspiciously small scan");
    return ok;
}

// --------------------------------------------------------------------------
// 7. Ceiling-sum lemma sweep
// --------------------------------------------------------------------------
bool criterion7(std::string& detail) {
    auto sweep = alg_lemma_sweep(256);
    bool ok = expect(sweep.cases == 255u * 256u / 2, detail, "case count");
    ok &= expect(sweep.violations == 0, detail, "violations found");
    return ok;
}

// --------------------------------------------------------------------------
// 8. Randomized involution trials
// --------------------------------------------------------------------------
bool criterion8(std::string& detail) {
    bool ok = true;
    TrialSummary sigma = sigma_trials(1000, 24682, 12, 32, 64, 2);
    ok &= expect(sigma.failures == 0, detail,
                 "sigma failures: " + std::to_string(sigma.failures));
    TrialSummary tau = tau_trials(1000, 24682, 13, 32, 64, 2);
    ok &= expect(tau.failures == 0, detail, "tau failures: " + std::to_string(tau.failures));
    return ok;
}

// --------------------------------------------------------------------------
// 9. Shape soundness sweep over <= 2-factor products
// --------------------------------------------------------------------------
bool criterion9(std::string& detail) {
    bool ok = true;
    auto spaces = enumerate_spaces(64, 20);
    int periodic_count = 0, counterexamples = 0;
    auto consider = [&](const std::vector<IrreducibleSpace>& fs) {
        int dim = 0;
        for (const auto& f : fs) dim += f.dimension();
        if (dim < 16 || dim > 64) return;
        if (check_product(fs, 16).verdict != Verdict::Periodic) return;
        ++periodic_count;
        if (!shape_verdict(fs, 16).allowed) {
            ++counterexamples;
            std::string name;
            for (const auto& f : fs) name += (name.empty() ? "" : " x ") + f.name();
            expect(false, detail, "counterexample " + name);
        }
    };
    for (size_t i = 0; i < spaces.size(); ++i) {
        consider({spaces[i]});
        for (size_t j = i; j < spaces.size(); ++j) consider({spaces[i], spaces[j]});
    }
    ok &= expect(counterexamples == 0, detail, "counterexamples exist");
    ok &= expect(periodic_count > 100, detail, "periodic set suspiciously small");
    return ok;
}

// --------------------------------------------------------------------------
// 10. Property suites
// --------------------------------------------------------------------------
bool criterion10(std::string& detail) {
    bool ok = true;

    // Equal-rank catalog polynomials: palindromic, nonnegative, Euler identity.
    int checked = 0;
    for (const auto& s : enumerate_spaces(256, 20)) {
        if (s.kind() == SpaceKind::LieGroup || !s.equal_rank()) continue;
        PoincarePolynomial p = poincare_equal_rank(s.symbol_group(), s.isotropy());
        ok &= expect(p.nonnegative(), detail, s.name() + " negative coefficient");
        ok &= expect(is_palindromic(p), detail, s.name() + " not palindromic");
        ok &= expect(p.degree() == s.dimension(), detail, s.name() + " degree mismatch");
        ok &= expect(euler_characteristic_check(s), detail, s.name() + " Euler identity");
        ++checked;
    }
    ok &= expect(checked > 200, detail, "too few equal-rank polynomials");

    // poly_div_exact(poly_mul(a, b), b) == a on 10^4 random pairs.
    std::mt19937 rng(123457);
    std::uniform_int_distribution<int> deg(0, 24);
    std::uniform_int_distribution<int64_t> coef(0, 9);
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<int64_t> a(static_cast<size_t>(deg(rng)) + 1), b(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : a) v = coef(rng);
        for (auto& v : b) v = coef(rng);
        a.front() = 1;
        b.front() = 1;
        PoincarePolynomial pa{std::vector<int64_t>(a)}, pb{std::vector<int64_t>(b)};
        if (!(poly_div_exact(poly_mul(pa, pb), pb) == pa)) {
            ok &= expect(false, detail, "mul/div round trip failed at iter " + std::to_string(iter));
            break;
        }
    }

    // Monotonicity of the verdict in c on all complete catalog vectors.
    for (const auto& s : enumerate_spaces(128, 12)) {
        if (s.source() != BettiSource::Computed) continue;
        BettiVector b = betti_vector(s, 128);
        bool above_failed = false;
        for (int c = 8; c <= s.dimension() + 4; ++c) {
            Verdict v = check_4periodic(b, c).verdict;
            if (v != Verdict::Periodic) above_failed = true;
            else if (above_failed) {
                ok &= expect(false, detail, s.name() + " verdict not monotone in c");
                break;
            }
        }
    }
    return ok;
}

const Criterion kCriteria[] = {
    {1, "sphere-dimension table regeneration", 1.0, criterion1},
    {2, "classification-table leading terms and obstruction columns", 1.0, criterion2},
    {3, "classification sweep at c=16 (dim <= 64, params <= 20)", 10.0, criterion3},
    {4, "E8 x HP^3 periodic at c=15, fails at c=16 via b_11 < b_15", 1.0, criterion4},
    {5, "connected sums of projective planes fail at c=10", 1.0, criterion5},
    {6, "exhaustive Griesmer verification with simplex equality witness", 60.0, criterion6},
    {7, "ceiling-sum lemma sweep over 2 <= c <= n <= 256", 10.0, criterion7},
    {8, "1000 seeded involution trials for sigma and tau", 60.0, criterion8},
    {9, "shape soundness sweep over <= 2-factor products", 60.0, criterion9},
    {10, "polynomial, Euler and monotonicity property suites", 30.0, criterion10},
};

}  // namespace

int main() {
    int failures = 0;
    for (const auto& c : kCriteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "time limit " + std::to_string(c.limit_seconds) + "s exceeded";
        }
        std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.summary, secs);
        if (!ok && !detail.empty()) std::printf("     %s\n", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

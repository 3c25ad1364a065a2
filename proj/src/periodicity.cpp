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

#include "symspace/periodicity.hpp"

#include <algorithm>

namespace symspace {

std::string Obstruction::str() const {
    switch (kind) {
        case ObstructionKind::B4Bound: return "1<b_4";
        case ObstructionKind::IsoLess:
            return "b_" + std::to_string(i) + "<b_" + std::to_string(j);
        case ObstructionKind::IsoGreater:
            return "b_" + std::to_string(i) + ">b_" + std::to_string(j);
        case ObstructionKind::Positive: return "b_" + std::to_string(j) + ">0";
    }
    return "?";
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Periodic: return "Periodic";
        case Verdict::Fails: return "Fails";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

// Certain-order facts about interval entries; lower bounds are always finite.
bool certainly_less(const BettiEntry& x, const BettiEntry& y) { return x.hi < y.lo; }
bool certainly_greater(const BettiEntry& x, const BettiEntry& y) { return x.lo > y.hi; }
bool certainly_equal(const BettiEntry& x, const BettiEntry& y) {
    return x.is_exact() && y.is_exact() && x.lo == y.lo;
}
bool certainly_leq(const BettiEntry& x, const BettiEntry& y) { return x.hi <= y.lo; }

struct Violation {
    int sort_degree;
    int tiebreak;  // lower wins at equal degree: ladder checks before the vanishing check
    Obstruction obs;
};

}  // namespace

PeriodicityReport check_4periodic(const BettiVector& b, int c) {
    if (c < 8) throw PeriodicityError("periodicity check needs c >= 8");

    std::vector<Violation> violations;
    bool undetermined = false;

    BettiEntry b4 = b.at(4);

    // b_4 <= 1.
    bool b4_violated = b4.lo >= 2;
    if (b4_violated) violations.push_back({4, 0, {ObstructionKind::B4Bound, 0, 4}});
    else if (b4.hi > 1) undetermined = true;

    // Ladder b_i = b_{i+4} for 0 < i < c-4.  A violated adjacent pair with
    // two exact entries renders as an inequality between the pair; a
    // conflict whose positive side is only bounded below renders as a
    // positivity violation (witness data).
    auto pair_violation = [&](int i, int j) {
        BettiEntry x = b.at(i), y = b.at(j);
        if (certainly_less(x, y)) {
            if (x.is_known_zero() && !y.is_exact())
                violations.push_back({j, 0, {ObstructionKind::Positive, 0, j}});
            else
                violations.push_back({i, 0, {ObstructionKind::IsoLess, i, j}});
            return true;
        }
        if (certainly_greater(x, y)) {
            if (y.is_known_zero() && !x.is_exact())
                violations.push_back({i, 0, {ObstructionKind::Positive, 0, i}});
            else
                violations.push_back({i, 0, {ObstructionKind::IsoGreater, i, j}});
            return true;
        }
        return false;
    };

    for (int i = 1; i < c - 4; ++i) {
        if (!pair_violation(i, i + 4) && !certainly_equal(b.at(i), b.at(i + 4))) undetermined = true;
    }
    // The ladder makes every pair in one residue class mod 4 equal inside
    // (0, c); compare non-adjacent pairs when unknown entries break the
    // adjacent path, so witness data with gaps (known zero at one end, a
    // positive lower bound further up) stays decisive.
    for (int i = 1; i < c; ++i) {
        for (int j = i + 8; j < c; j += 4) {
            bool adjacent_path_exact = true;
            for (int k = i + 4; k < j && adjacent_path_exact; k += 4)
                if (!b.at(k).is_exact()) adjacent_path_exact = false;
            if (!adjacent_path_exact) pair_violation(i, j);
        }
    }

    // Injection at the top: b_{c-4} <= b_c.
    {
        BettiEntry x = b.at(c - 4), y = b.at(c);
        if (certainly_greater(x, y))
            violations.push_back({c - 4, 0, {ObstructionKind::IsoGreater, c - 4, c}});
        else if (!certainly_leq(x, y))
            undetermined = true;
    }

    // b_4 = 0 forces b_i = 0 for 0 < i < c.
    if (b4.is_known_zero()) {
        for (int j = 1; j < c; ++j) {
            BettiEntry e = b.at(j);
            if (e.lo >= 1) violations.push_back({j, 1, {ObstructionKind::Positive, 0, j}});
            else if (e.hi != 0) undetermined = true;
        }
    } else if (!b4_violated && !(b4.lo >= 1)) {
        // b_4 could still be 0; the vanishing condition is unresolved unless
        // everything below c is known zero.
        for (int j = 1; j < c; ++j)
            if (!b.at(j).is_known_zero()) {
                undetermined = true;
                break;
            }
    }

    PeriodicityReport rep;
    if (b4.is_exact()) rep.branch = (b4.lo == 0) ? Branch::Connected : Branch::Periodic4;

    if (b4_violated) {
        rep.verdict = Verdict::Fails;
        rep.obstruction = Obstruction{ObstructionKind::B4Bound, 0, 4};
        return rep;
    }
    if (!violations.empty()) {
        auto it = std::min_element(violations.begin(), violations.end(),
                                   [](const Violation& a, const Violation& b) {
                                       return std::tie(a.sort_degree, a.tiebreak) <
                                              std::tie(b.sort_degree, b.tiebreak);
                                   });
        rep.verdict = Verdict::Fails;
        rep.obstruction = it->obs;
        return rep;
    }
    rep.verdict = undetermined ? Verdict::Undetermined : Verdict::Periodic;
    return rep;
}

std::string obstruction_string(const PeriodicityReport& r) {
    if (r.verdict != Verdict::Fails || !r.obstruction)
        throw NotFailing("report carries no obstruction");
    return r.obstruction->str();
}

// ---------------------------------------------------------------------------
// Catalog classification
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> classify_impl(int c, int max_dim,
                                                                          int max_param, bool parallel) {
    if (c < 16) throw PeriodicityError("classification needs c >= 16");
    std::vector<IrreducibleSpace> spaces;
    for (auto& s : enumerate_spaces(max_dim, max_param))
        if (s.dimension() >= 16) spaces.push_back(std::move(s));

    std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> out(spaces.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t idx = 0; idx < spaces.size(); ++idx) {
        const auto& s = spaces[idx];
        out[idx] = {s, check_4periodic(betti_vector(s, c), c)};
    }
    return out;  // enumerate_spaces is already canonically sorted
}

}  // namespace

std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> classify_irreducibles(int c, int max_dim,
                                                                                  int max_param) {
    return classify_impl(c, max_dim, max_param, true);
}

std::vector<std::pair<IrreducibleSpace, PeriodicityReport>> classify_irreducibles_serial(int c, int max_dim,
                                                                                         int max_param) {
    return classify_impl(c, max_dim, max_param, false);
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

ProductAnalysis product_factor_analysis(const BettiVector& b1, const BettiVector& b2, int c) {
    if (c < 9) throw PeriodicityError("product analysis needs c >= 9");
    if (!(b1.at(4).is_exact() && b2.at(4).is_exact() && b1.at(4).lo >= b2.at(4).lo))
        throw PeriodicityError("product analysis requires exact b_4 with b_4(M1) >= b_4(M2)");
    std::vector<BettiVector> fs = {b1, b2};
    BettiVector prod = product_betti(std::span<const BettiVector>(fs), c);
    if (!prod.at(1).is_known_zero()) throw PeriodicityError("product analysis requires b_1 = 0");
    PeriodicityReport base = check_4periodic(prod, c);
    if (base.verdict != Verdict::Periodic)
        throw PeriodicityError("product does not pass the periodicity check at c");

    ProductAnalysis a;
    bool connected = true;
    for (int i = 1; i < c && connected; ++i)
        if (!prod.at(i).is_known_zero()) connected = false;
    a.connected_branch = connected;
    if (connected) return a;

    a.b4_one = b1.at(4).lo == 1;
    if (!a.b4_one) a.failed.push_back("b4_one");

    a.factor_periodic = check_4periodic(b1, c).verdict == Verdict::Periodic;
    if (!a.factor_periodic) a.failed.push_back("factor_periodic");

    a.tail_vanishes = true;
    for (int i = 4; i < c; ++i)
        if (!b2.at(i).is_known_zero()) {
            a.tail_vanishes = false;
            a.failed.push_back("tail_vanishes");
            break;
        }

    a.low_degree_exclusion = true;
    if (b1.at(2).lo + b1.at(3).lo > 0) {
        if (!(b2.at(2).is_known_zero() && b2.at(3).is_known_zero())) {
            a.low_degree_exclusion = false;
            a.failed.push_back("low_degree_exclusion");
        }
    }
    return a;
}

PeriodicityReport check_product(const std::vector<IrreducibleSpace>& factors, int c) {
    if (factors.empty()) throw PeriodicityError("empty product");
    std::vector<BettiVector> fs;
    fs.reserve(factors.size());
    for (const auto& s : factors) fs.push_back(betti_vector(s, c));
    BettiVector prod = product_betti(std::span<const BettiVector>(fs), c);
    PeriodicityReport base = check_4periodic(prod, c);
    if (base.verdict != Verdict::Periodic || factors.size() == 1) return base;

    // Betti-level connectivity needs no factor conditions.
    bool connected = true;
    for (int i = 1; i < c && connected; ++i)
        if (!prod.at(i).is_known_zero()) connected = false;
    if (connected) return base;

    // Factor conditions with M1 = the factor with the largest b_4 and M2 the
    // product of the rest; necessary for ring-level periodicity of a product.
    size_t best = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (!fs[i].at(4).is_exact()) return base;  // cannot refine
        if (fs[i].at(4).lo > fs[best].at(4).lo) best = i;
    }
    std::vector<BettiVector> rest;
    for (size_t i = 0; i < fs.size(); ++i)
        if (i != best) rest.push_back(fs[i]);
    BettiVector m2 = product_betti(std::span<const BettiVector>(rest), c);

    // A non-connected periodic product needs a factor with b_4 = 1.
    if (fs[best].at(4).lo != 1) {
        PeriodicityReport rep;
        rep.verdict = Verdict::Fails;
        rep.obstruction = Obstruction{ObstructionKind::Positive, 0, 4};
        rep.factor = "no factor carries b_4 = 1";
        rep.branch = base.branch;
        return rep;
    }

    PeriodicityReport fac = check_4periodic(fs[best], c);
    if (fac.verdict == Verdict::Fails) {
        fac.factor = factors[best].name();
        return fac;
    }
    for (int i = 4; i < c; ++i) {
        BettiEntry e = m2.at(i);
        if (e.lo >= 1) {
            PeriodicityReport rep;
            rep.verdict = Verdict::Fails;
            rep.obstruction = Obstruction{ObstructionKind::Positive, 0, i};
            rep.factor = "complement of " + factors[best].name();
            rep.branch = base.branch;
            return rep;
        }
    }
    if (fs[best].at(2).lo + fs[best].at(3).lo > 0) {
        for (int i : {2, 3}) {
            if (m2.at(i).lo >= 1) {
                PeriodicityReport rep;
                rep.verdict = Verdict::Fails;
                rep.obstruction = Obstruction{ObstructionKind::Positive, 0, i};
                rep.factor = "complement of " + factors[best].name();
                rep.branch = base.branch;
                return rep;
            }
        }
    }
    return base;
}

bool low_degree_gap(const BettiVector& b) {
    for (int i = 4; i < 16; ++i) {
        BettiEntry e = b.at(i);
        if (e.lo >= 1) return false;
        if (!e.is_known_zero()) throw UnknownBetti(i, "insufficient Betti data for the low-degree gap");
    }
    return true;
}

// ---------------------------------------------------------------------------
// Shape verdict and pattern matching
// ---------------------------------------------------------------------------

namespace {

// Low-parameter coincidences (CP^1 = S^2, SU(2)/SO(2) = S^2, SO(4)/U(2) = S^2,
// Sp(2)/U(2) = SO(6)/U(3) = CP^3, ...) so the shape judgment sees the space,
// not the descriptor it arrived under.
IrreducibleSpace shape_canonical(IrreducibleSpace f) {
    for (;;) {
        if (f.kind() == SpaceKind::CP && f.p() == 1) f = IrreducibleSpace::sphere(2);
        else if (f.kind() == SpaceKind::HP && f.p() == 1) f = IrreducibleSpace::sphere(4);
        else if (f.kind() == SpaceKind::SUModSO && f.p() == 2) f = IrreducibleSpace::sphere(2);
        else if (f.kind() == SpaceKind::SOModU && f.p() == 2) f = IrreducibleSpace::sphere(2);
        else if (f.kind() == SpaceKind::SpModU && f.p() == 1) f = IrreducibleSpace::sphere(2);
        else if (f.kind() == SpaceKind::SpModU && f.p() == 2) f = IrreducibleSpace::cp(3);
        else if (f.kind() == SpaceKind::SOModU && f.p() == 3) f = IrreducibleSpace::cp(3);
        else return f;
    }
}

}  // namespace

ShapeVerdict shape_verdict(const std::vector<IrreducibleSpace>& factors, int c) {
    if (c < 16) throw PeriodicityError("shape verdict needs c >= 16");
    ShapeVerdict v;
    int n_r2 = 0, n_r3 = 0, n_q = 0, n_other = 0;
    for (const auto& raw : factors) {
        IrreducibleSpace f = shape_canonical(raw);
        switch (f.kind()) {
            case SpaceKind::Sphere:
                if (f.dimension() >= c) v.big_spheres.push_back(f);
                else if (f.dimension() == 2 || f.dimension() == 3) {
                    ++n_q;
                    v.small_q = f;
                } else
                    ++n_other;
                break;
            case SpaceKind::CP:
                ++n_r2;
                v.rank1_like = f;
                break;
            case SpaceKind::RealGr:
                if (f.p() == 2) {
                    ++n_r2;
                    v.rank1_like = f;
                } else if (f.p() == 3) {
                    ++n_r3;
                    v.rank1_like = f;
                } else
                    ++n_other;
                break;
            case SpaceKind::HP:
                ++n_r3;
                v.rank1_like = f;
                break;
            default:
                ++n_other;  // CaP2 and everything else: not listed
        }
    }
    if (n_other == 0 && n_r2 == 0 && n_r3 == 0 && n_q == 0) {
        v.allowed = true;
        v.shape = ShapeCase::SpheresOnly;
    } else if (n_other == 0 && n_r2 == 1 && n_r3 == 0 && n_q == 0) {
        v.allowed = true;
        v.shape = ShapeCase::SpheresTimesCPorGr2;
    } else if (n_other == 0 && n_r2 == 0 && n_r3 == 1 && n_q <= 1) {
        v.allowed = true;
        v.shape = ShapeCase::SpheresTimesHPorGr3TimesQ;
    } else {
        v.allowed = false;
        v.shape = ShapeCase::NotListed;
        v.rank1_like.reset();
        v.small_q.reset();
    }
    return v;
}

BettiPattern pattern_classify(const BettiVector& b, int n) {
    if (!b.fully_exact()) throw BettiError("pattern_classify requires a complete Betti vector");
    if (b.top_degree() != n || b.exact_at(0) != 1) return BettiPattern::None;

    auto matches = [&](auto&& expected) {
        for (int i = 0; i <= n; ++i)
            if (b.exact_at(i) != expected(i)) return false;
        return true;
    };

    if (matches([&](int i) { return (i == 0 || i == n) ? 1 : 0; })) return BettiPattern::SphereLike;
    if (n % 2 == 0 && matches([&](int i) { return i % 2 == 0 ? 1 : 0; })) return BettiPattern::CPLike;
    if (n % 4 == 0 && matches([&](int i) { return i % 4 == 0 ? 1 : 0; })) return BettiPattern::HPLike;
    if (n % 4 == 2 && matches([&](int i) { return i % 2 == 0 ? 1 : 0; })) return BettiPattern::S2xHPLike;
    if (n % 4 == 3 && matches([&](int i) { return (i % 4 == 0 || i % 4 == 3) ? 1 : 0; }))
        return BettiPattern::S3xHPLike;
    return BettiPattern::None;
}

}  // namespace symspace

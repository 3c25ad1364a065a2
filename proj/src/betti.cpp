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

#include "symspace/betti.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace symspace {

// ---------------------------------------------------------------------------
// BettiVector
// ---------------------------------------------------------------------------

BettiVector BettiVector::from_polynomial(const PoincarePolynomial& p) {
    if (!p.complete()) throw BettiError("Betti vector from a truncated polynomial");
    if (!p.nonnegative()) throw NegativeCoefficient("Betti numbers must be nonnegative");
    BettiVector b;
    b.complete_ = true;
    b.entries_.reserve(p.coeffs().size());
    for (int64_t v : p.coeffs()) b.entries_.push_back(BettiEntry::exact(v));
    return b;
}

BettiVector BettiVector::complete_zero() {
    BettiVector b;
    b.complete_ = true;
    b.entries_ = {BettiEntry::exact(1)};
    return b;
}

BettiVector BettiVector::partial(int known_up_to) {
    if (known_up_to < 1) throw BettiError("partial vector needs known_up_to >= 1");
    BettiVector b;
    b.complete_ = false;
    b.known_up_to_ = known_up_to;
    b.entries_.assign(static_cast<size_t>(known_up_to) + 1, BettiEntry::unknown());
    b.entries_[0] = BettiEntry::exact(1);
    b.entries_[1] = BettiEntry::exact(0);
    return b;
}

BettiEntry BettiVector::at(int degree) const {
    if (degree < 0) throw BettiError("negative degree");
    if (degree < static_cast<int>(entries_.size())) return entries_[static_cast<size_t>(degree)];
    return complete_ ? BettiEntry::exact(0) : BettiEntry::unknown();
}

int64_t BettiVector::exact_at(int degree) const {
    BettiEntry e = at(degree);
    if (!e.is_exact()) throw UnknownBetti(degree, "Betti number unknown at degree " + std::to_string(degree));
    return e.lo;
}

void BettiVector::set(int degree, BettiEntry e) {
    if (degree < 0) throw BettiError("negative degree");
    if (degree >= static_cast<int>(entries_.size())) {
        if (!complete_ && degree > known_up_to_) throw BettiError("degree above known_up_to");
        entries_.resize(static_cast<size_t>(degree) + 1,
                        complete_ ? BettiEntry::exact(0) : BettiEntry::unknown());
    }
    entries_[static_cast<size_t>(degree)] = e;
}

void BettiVector::normalize() {
    if (complete_)
        while (!entries_.empty() && entries_.back().is_known_zero()) entries_.pop_back();
}

int BettiVector::known_up_to() const noexcept { return complete_ ? INT_MAX : known_up_to_; }

int BettiVector::top_degree() const noexcept {
    for (int i = static_cast<int>(entries_.size()) - 1; i >= 0; --i)
        if (!entries_[static_cast<size_t>(i)].is_known_zero()) return i;
    return 0;
}

bool BettiVector::fully_exact() const noexcept {
    if (!complete_) return false;
    return std::all_of(entries_.begin(), entries_.end(), [](const BettiEntry& e) { return e.is_exact(); });
}

PoincarePolynomial BettiVector::to_polynomial() const {
    if (!fully_exact()) throw BettiError("partial Betti vector has no polynomial");
    std::vector<int64_t> c;
    c.reserve(entries_.size());
    for (const auto& e : entries_) c.push_back(e.lo);
    return PoincarePolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Borel quotient
// ---------------------------------------------------------------------------

PoincarePolynomial poincare_equal_rank(const GroupDescriptor& g, const std::vector<GroupDescriptor>& h) {
    int hrank = 0;
    for (const auto& f : h) hrank += f.rank();
    if (g.rank() != hrank)
        throw RankMismatch("rank(G) = " + std::to_string(g.rank()) + " != rank(H) = " + std::to_string(hrank));

    // Multiset-cancel common factor degrees before multiplying out.
    std::map<int, int> deg;  // factor degree -> numerator multiplicity minus denominator multiplicity
    for (int d : group_spheres(g).dims) deg[d + 1] += 1;
    for (const auto& f : h)
        for (int d : group_spheres(f).dims) deg[d + 1] -= 1;

    PoincarePolynomial num = PoincarePolynomial::one();
    PoincarePolynomial den = PoincarePolynomial::one();
    for (auto [d, mult] : deg) {
        for (int i = 0; i < mult; ++i) num = poly_mul(num, PoincarePolynomial::one_minus_power(d));
        for (int i = 0; i < -mult; ++i) den = poly_mul(den, PoincarePolynomial::one_minus_power(d));
    }
    return poly_div_exact(num, den);
}

// ---------------------------------------------------------------------------
// Catalog space polynomials
// ---------------------------------------------------------------------------

namespace {

PoincarePolynomial dim_step_pattern(int dim, int step) {
    // 1 + t^step + t^(2 step) + ... + t^dim
    std::vector<int64_t> c(static_cast<size_t>(dim) + 1, 0);
    for (int i = 0; i <= dim; i += step) c[static_cast<size_t>(i)] = 1;
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial sphere_poly(int n) {
    std::vector<int64_t> c(static_cast<size_t>(n) + 1, 0);
    c.front() = 1;
    c.back() += 1;
    return PoincarePolynomial(std::move(c));
}

}  // namespace

PoincarePolynomial space_polynomial(const IrreducibleSpace& s) {
    switch (s.kind()) {
        case SpaceKind::Sphere: return sphere_poly(s.p());
        case SpaceKind::CP: return dim_step_pattern(2 * s.p(), 2);
        case SpaceKind::HP: return dim_step_pattern(4 * s.p(), 4);
        case SpaceKind::CaP2: return PoincarePolynomial({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1});
        case SpaceKind::LieGroup: {
            PoincarePolynomial p = PoincarePolynomial::one();
            for (int d : group_spheres(*s.group()).dims) p = poly_mul(p, sphere_poly(d));
            return p;
        }
        default: {
            if (s.source() != BettiSource::Computed)
                throw UnknownBetti(0, s.name() + " has no computed polynomial");
            return poincare_equal_rank(s.symbol_group(), s.isotropy());
        }
    }
}

BettiVector betti_vector(const IrreducibleSpace& s, int D) {
    if (D < 0) throw BettiError("negative degree bound");
    if (s.source() == BettiSource::Computed) {
        // Complete data; D only matters to callers reading a window.
        return BettiVector::from_polynomial(space_polynomial(s));
    }
    const auto ws = s.witnesses();
    int upto = D;
    for (const auto& w : ws) upto = std::max(upto, w.degree);
    BettiVector b = BettiVector::partial(std::max(upto, 1));
    for (const auto& w : ws) {
        BettiEntry e = (w.relation == WitnessRelation::Equal) ? BettiEntry::exact(w.value)
                                                              : BettiEntry::at_least(w.value);
        b.set(w.degree, e);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Kuenneth product and connected sums
// ---------------------------------------------------------------------------

namespace {

int64_t hi_mul(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a == kBettiUnbounded || b == kBettiUnbounded) return kBettiUnbounded;
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return kBettiUnbounded;
    return r;
}

int64_t hi_add(int64_t a, int64_t b) {
    if (a == kBettiUnbounded || b == kBettiUnbounded) return kBettiUnbounded;
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) return kBettiUnbounded;
    return r;
}

}  // namespace

BettiVector product_betti(std::span<const BettiVector> factors, int D) {
    if (D < 0) throw BettiError("negative degree bound");
    BettiVector acc = BettiVector::complete_zero();
    for (const auto& f : factors) {
        bool complete = acc.complete() && f.complete();
        int dmax = complete ? std::min(acc.top_degree() + f.top_degree(), D)
                            : std::min({D, acc.known_up_to(), f.known_up_to()});
        BettiVector next;
        if (!complete) {
            next = BettiVector::partial(std::max(dmax, 1));
            for (int d = 0; d <= next.known_up_to(); ++d) next.set(d, BettiEntry::unknown());
        }
        for (int d = 0; d <= dmax; ++d) {
            int64_t lo = 0, hi = 0;
            for (int i = 0; i <= d; ++i) {
                BettiEntry x = acc.at(i), y = f.at(d - i);
                lo = detail::checked_add(lo, detail::checked_mul(x.lo, y.lo));
                hi = hi_add(hi, hi_mul(x.hi, y.hi));
            }
            next.set(d, BettiEntry{lo, hi});
        }
        acc = std::move(next);
    }
    acc.normalize();
    return acc;
}

BettiVector product_betti(const std::vector<IrreducibleSpace>& factors, int D) {
    std::vector<BettiVector> fs;
    fs.reserve(factors.size());
    for (const auto& s : factors) fs.push_back(betti_vector(s, D));
    return product_betti(std::span<const BettiVector>(fs), D);
}

BettiVector connected_sum_betti(const BettiVector& a, const BettiVector& b, int n) {
    if (!a.fully_exact() || !b.fully_exact())
        throw BettiError("connected sum requires complete Betti data");
    if (a.top_degree() != n || b.top_degree() != n)
        throw BettiError("connected sum requires equal dimension summands");
    if (n < 1) throw BettiError("connected sum needs n >= 1");
    BettiVector r = BettiVector::complete_zero();
    r.set(n, BettiEntry::exact(1));
    for (int i = 1; i < n; ++i)
        r.set(i, BettiEntry::exact(detail::checked_add(a.exact_at(i), b.exact_at(i))));
    return r;
}

bool euler_characteristic_check(const IrreducibleSpace& s) {
    if (!s.equal_rank() || s.source() != BettiSource::Computed)
        throw BettiError(s.name() + " is not an equal-rank computed space");
    PoincarePolynomial p = poincare_equal_rank(s.symbol_group(), s.isotropy());
    // Cancel common factors before multiplying; the raw products overflow for
    // the larger groups while the reduced ones stay catalog-sized.
    std::map<int, int> mult;
    for (int d : group_spheres(s.symbol_group()).dims) mult[d + 1] += 1;
    for (const auto& h : s.isotropy())
        for (int d : group_spheres(h).dims) mult[d + 1] -= 1;
    int64_t num = 1, den = 1;
    for (auto [d, m] : mult) {
        for (int i = 0; i < m; ++i) num = detail::checked_mul(num, d);
        for (int i = 0; i < -m; ++i) den = detail::checked_mul(den, d);
    }
    if (num % den != 0) return false;
    return p.coeff_sum() == num / den;
}

}  // namespace symspace

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

#include "symspace/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace symspace {

namespace detail {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in add");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in mul");
    return r;
}

}  // namespace detail

namespace {

void strip_trailing_zeros(std::vector<int64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_degree_cap(size_t size) {
    if (size > static_cast<size_t>(kMaxPolyDegree) + 1)
        throw DegreeCapExceeded("polynomial degree exceeds cap " + std::to_string(kMaxPolyDegree));
}

}  // namespace

PoincarePolynomial::PoincarePolynomial(std::vector<int64_t> coeffs, std::optional<int> truncation)
    : coeffs_(std::move(coeffs)), truncation_(truncation) {
    check_degree_cap(coeffs_.size());
    if (truncation_) {
        if (*truncation_ < 0) throw PolyError("negative truncation degree");
        if (static_cast<int>(coeffs_.size()) > *truncation_ + 1) coeffs_.resize(*truncation_ + 1);
    } else {
        strip_trailing_zeros(coeffs_);
    }
}

PoincarePolynomial PoincarePolynomial::one() { return PoincarePolynomial({1}); }

PoincarePolynomial PoincarePolynomial::monomial(int degree, int64_t coeff) {
    if (degree < 0) throw PolyError("negative degree");
    check_degree_cap(static_cast<size_t>(degree) + 1);
    std::vector<int64_t> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = coeff;
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::one_minus_power(int k) {
    if (k <= 0) throw PolyError("one_minus_power needs k >= 1");
    check_degree_cap(static_cast<size_t>(k) + 1);
    std::vector<int64_t> c(static_cast<size_t>(k) + 1, 0);
    c.front() = 1;
    c.back() = -1;
    return PoincarePolynomial(std::move(c));
}

int64_t PoincarePolynomial::coeff(int degree) const {
    if (degree < 0) throw PolyError("negative degree");
    if (truncation_ && degree > *truncation_)
        throw PolynomialTruncated("coefficient above truncation degree " + std::to_string(*truncation_));
    if (degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(degree)];
}

int PoincarePolynomial::degree() const noexcept {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<size_t>(i)] != 0) return i;
    return 0;
}

bool PoincarePolynomial::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t v) { return v == 0; });
}

bool PoincarePolynomial::nonnegative() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t v) { return v >= 0; });
}

int64_t PoincarePolynomial::coeff_sum() const {
    int64_t s = 0;
    for (int64_t v : coeffs_) s = detail::checked_add(s, v);
    return s;
}

std::string PoincarePolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int64_t v = coeffs_[i];
        if (v == 0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        int64_t a = std::abs(v);
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t^" << i;
        }
    }
    if (first) os << "0";
    if (truncation_) os << " + O(t^" << (*truncation_ + 1) << ")";
    return os.str();
}

PoincarePolynomial poly_mul(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    std::optional<int> trunc;
    if (a.truncation() && b.truncation()) trunc = std::min(*a.truncation(), *b.truncation());
    else if (a.truncation()) trunc = a.truncation();
    else if (b.truncation()) trunc = b.truncation();

    if (a.is_zero() || b.is_zero()) return PoincarePolynomial({}, trunc);

    size_t full = a.coeffs().size() + b.coeffs().size() - 1;
    size_t out = full;
    if (trunc) out = std::min(out, static_cast<size_t>(*trunc) + 1);
    else check_degree_cap(full);
    check_degree_cap(out);

    std::vector<int64_t> c(out, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        int64_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        size_t jmax = std::min(b.coeffs().size(), out > i ? out - i : 0);
        for (size_t j = 0; j < jmax; ++j) {
            if (b.coeffs()[j] == 0) continue;
            c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(ai, b.coeffs()[j]));
        }
    }
    return PoincarePolynomial(std::move(c), trunc);
}

PoincarePolynomial poly_div_exact(const PoincarePolynomial& num, const PoincarePolynomial& den) {
    if (!num.complete() || !den.complete())
        throw PolynomialTruncated("poly_div_exact requires complete polynomials");
    if (den.is_zero()) throw PolyError("division by zero polynomial");
    int64_t d0 = den.coeffs().front();
    if (d0 != 1 && d0 != -1)
        throw PolyError("poly_div_exact requires a denominator with constant term +-1");
    if (num.is_zero()) return PoincarePolynomial();

    int ndeg = num.degree();
    int ddeg = den.degree();
    if (ndeg < ddeg) throw NonExactDivision("numerator degree below denominator degree");

    // Ascending synthetic division; the residual must vanish identically.
    std::vector<int64_t> rem(num.coeffs());
    rem.resize(static_cast<size_t>(ndeg) + 1);
    int qdeg = ndeg - ddeg;
    std::vector<int64_t> q(static_cast<size_t>(qdeg) + 1, 0);
    for (int k = 0; k <= qdeg; ++k) {
        int64_t qk = rem[static_cast<size_t>(k)] * d0;  // d0 is +-1
        q[static_cast<size_t>(k)] = qk;
        if (qk == 0) continue;
        for (size_t j = 0; j < den.coeffs().size(); ++j) {
            if (den.coeffs()[j] == 0) continue;
            size_t idx = static_cast<size_t>(k) + j;
            rem[idx] = detail::checked_add(rem[idx], -detail::checked_mul(qk, den.coeffs()[j]));
        }
    }
    for (int64_t v : rem)
        if (v != 0) throw NonExactDivision("nonzero remainder");
    for (int64_t v : q)
        if (v < 0) throw NegativeCoefficient("negative coefficient in exact quotient");
    return PoincarePolynomial(std::move(q));
}

PoincarePolynomial truncate(const PoincarePolynomial& p, int D) {
    if (D < 0) throw PolyError("negative truncation degree");
    std::vector<int64_t> c(p.coeffs());
    if (static_cast<int>(c.size()) > D + 1) c.resize(static_cast<size_t>(D) + 1);
    return PoincarePolynomial(std::move(c), D);
}

bool is_palindromic(const PoincarePolynomial& p) {
    if (!p.complete()) throw PolynomialTruncated("is_palindromic requires a complete polynomial");
    int d = p.degree();
    for (int i = 0; i <= d / 2; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

}  // namespace symspace

// Independent reference implementations used only to derive and check
// expected test values.  Deliberately written with different algorithms from
// the library: descending-degree long division, plain nested-loop
// convolution, and unoptimized exhaustive searches.

#ifndef SYMSPACE_TESTS_ORACLES_HPP
#define SYMSPACE_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

namespace oracle {

using Coeffs = std::vector<int64_t>;

inline Coeffs convolve(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Classic descending long division; returns true and the quotient when the
// division is exact.
inline bool long_divide(Coeffs num, const Coeffs& den, Coeffs& quotient) {
    Coeffs d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (d.empty()) return false;
    if (num.size() < d.size()) return num.empty();
    quotient.assign(num.size() - d.size() + 1, 0);
    for (size_t k = quotient.size(); k-- > 0;) {
        int64_t lead = num[k + d.size() - 1];
        if (lead % d.back() != 0) return false;
        int64_t q = lead / d.back();
        quotient[k] = q;
        for (size_t j = 0; j < d.size(); ++j) num[k + j] -= q * d[j];
    }
    for (int64_t v : num)
        if (v != 0) return false;
    return true;
}

// Betti numbers of a product of odd-dimensional spheres.
inline Coeffs sphere_product(const std::vector<int>& dims) {
    Coeffs p = {1};
    for (int d : dims) {
        Coeffs s(static_cast<size_t>(d) + 1, 0);
        s.front() = 1;
        s.back() = 1;
        p = convolve(p, s);
    }
    return p;
}

// Number of partitions of j with at most k parts, each part at most m
// (lattice paths in a k x m box).
inline int64_t partitions_in_box(int j, int k, int m) {
    if (j == 0) return 1;
    if (j < 0 || k == 0 || m == 0) return 0;
    // largest part s, then partitions of j - s into at most k-1 parts <= s
    int64_t total = 0;
    for (int s = 1; s <= m && s <= j; ++s) total += partitions_in_box(j - s, k - 1, s);
    return total;
}

// Number of partitions of j into distinct parts, each at most m.
inline int64_t partitions_distinct(int j, int m) {
    if (j == 0) return 1;
    if (j < 0 || m == 0) return 0;
    return partitions_distinct(j, m - 1) + partitions_distinct(j - m, m - 1);
}

// Minimum nonzero-codeword weight by plain enumeration over all 2^r masks,
// rows given as 64-bit words.
inline int plain_min_weight(const std::vector<uint64_t>& rows) {
    int best = 1 << 30;
    for (uint64_t mask = 1; mask < (uint64_t{1} << rows.size()); ++mask) {
        uint64_t cw = 0;
        for (size_t i = 0; i < rows.size(); ++i)
            if ((mask >> i) & 1) cw ^= rows[i];
        int w = __builtin_popcountll(cw);
        if (w < best) best = w;
    }
    return best;
}

}  // namespace oracle

#endif

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

#include "symspace/codes.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <istream>
#include <map>
#include <sstream>

namespace symspace {

// ---------------------------------------------------------------------------
// BitVec
// ---------------------------------------------------------------------------

BitVec::BitVec(int bits) : bits_(bits) {
    if (bits < 0 || bits > kMaxAmbientLength) throw CodesError("bit length out of range");
}

bool BitVec::get(int i) const {
    if (i < 0 || i >= bits_) throw CodesError("bit index out of range");
    return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
}

void BitVec::set(int i, bool v) {
    if (i < 0 || i >= bits_) throw CodesError("bit index out of range");
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) w_[static_cast<size_t>(i) >> 6] |= mask;
    else w_[static_cast<size_t>(i) >> 6] &= ~mask;
}

void BitVec::flip(int i) { set(i, !get(i)); }

void BitVec::operator^=(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
}

void BitVec::operator|=(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
}

int BitVec::popcount() const noexcept {
    int s = 0;
    for (uint64_t w : w_) s += std::popcount(w);
    return s;
}

bool BitVec::any() const noexcept {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

int BitVec::popcount_and(const BitVec& mask) const noexcept {
    int s = 0;
    for (size_t k = 0; k < w_.size(); ++k) s += std::popcount(w_[k] & mask.w_[k]);
    return s;
}

int BitVec::lowest_set() const noexcept {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

std::string BitVec::to_string() const {
    std::string s(static_cast<size_t>(bits_), '0');
    for (int i = 0; i < bits_; ++i)
        if (get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// LinearEmbedding
// ---------------------------------------------------------------------------

int gf2_rank(std::vector<BitVec> rows) {
    int rank = 0;
    int m = rows.empty() ? 0 : rows.front().bits();
    for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)].get(col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && rows[static_cast<size_t>(i)].get(col))
                rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

LinearEmbedding::LinearEmbedding(std::vector<BitVec> rows, int m) : rows_(std::move(rows)), m_(m) {
    if (m_ < 1 || m_ > kMaxAmbientLength) throw CodesError("ambient length out of range");
    if (rows_.empty()) throw CodesError("empty generator matrix");
    for (const auto& row : rows_)
        if (row.bits() != m_) throw CodesError("row length mismatch");
    if (r() > m_) throw RankDeficient("more generators than ambient length");
    if (gf2_rank(rows_) != r()) throw RankDeficient("generator rows are linearly dependent");
}

BitVec LinearEmbedding::image(const BitVec& coeffs) const {
    BitVec img(m_);
    for (int i = 0; i < r(); ++i)
        if (coeffs.get(i)) img ^= rows_[static_cast<size_t>(i)];
    return img;
}

// ---------------------------------------------------------------------------
// Matrix text format: one row per line of '0'/'1' characters
// ---------------------------------------------------------------------------

LinearEmbedding read_generator_matrix(std::istream& in) {
    std::vector<BitVec> rows;
    int m = -1;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (m < 0) m = static_cast<int>(line.size());
        else if (static_cast<int>(line.size()) != m)
            throw CodesError("generator rows have unequal lengths");
        BitVec row(m);
        for (int i = 0; i < m; ++i) {
            char ch = line[static_cast<size_t>(i)];
            if (ch != '0' && ch != '1') throw CodesError("generator rows must be 0/1 strings");
            row.set(i, ch == '1');
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CodesError("empty generator matrix");
    return LinearEmbedding(std::move(rows), m);
}

LinearEmbedding parse_generator_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_generator_matrix(in);
}

std::string write_generator_matrix(const LinearEmbedding& e) {
    std::string out;
    for (const auto& row : e.rows()) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

LinearEmbedding random_full_rank_embedding(int r, int m, std::mt19937_64& rng) {
    if (r < 1 || r > m) throw CodesError("need 1 <= r <= m");
    for (;;) {
        std::vector<BitVec> rows;
        rows.reserve(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            BitVec row(m);
            for (int j = 0; j < m; ++j) row.set(j, (rng() >> 17) & 1);
            rows.push_back(std::move(row));
        }
        if (gf2_rank(rows) == r) return LinearEmbedding(std::move(rows), m);
    }
}

// ---------------------------------------------------------------------------
// Span enumeration (Gray code over a basis of images)
// ---------------------------------------------------------------------------

namespace {

struct SpanBest {
    int weight = INT_MAX;
    uint64_t mask = 0;  // Gray-coded combination of basis vectors
};

void span_scan_block(const std::vector<BitVec>& basis, uint64_t lo, uint64_t hi, SpanBest& best) {
    auto gray = [](uint64_t x) { return x ^ (x >> 1); };
    BitVec cw(basis.front().bits());
    uint64_t g = gray(lo);
    for (size_t i = 0; i < basis.size(); ++i)
        if ((g >> i) & 1) cw ^= basis[i];
    for (uint64_t x = lo;; ++x) {
        if (x != lo) {
            cw ^= basis[static_cast<size_t>(std::countr_zero(x))];
            g = gray(x);
        }
        if (g != 0) {
            int w = cw.popcount();
            if (w < best.weight || (w == best.weight && g < best.mask)) {
                best.weight = w;
                best.mask = g;
            }
        }
        if (x + 1 >= hi) break;
    }
}

// Deterministic minimum of (image weight, combination) over the nonzero span
// of the basis; identical result for any partition of the index range.
SpanBest span_min_weight(const std::vector<BitVec>& basis, bool parallel) {
    if (basis.empty()) throw CodesError("empty basis");
    if (basis.size() > static_cast<size_t>(kMaxExhaustiveRank))
        throw CodesError("span enumeration capped at 2^24 codewords");
    uint64_t total = uint64_t{1} << basis.size();
    SpanBest best;
    if (!parallel || total < (uint64_t{1} << 16)) {
        span_scan_block(basis, 0, total, best);
        return best;
    }
    int nblocks = 64;
    uint64_t chunk = (total + static_cast<uint64_t>(nblocks) - 1) / static_cast<uint64_t>(nblocks);
#pragma omp parallel
    {
        SpanBest local;
#pragma omp for schedule(dynamic)
        for (int b = 0; b < nblocks; ++b) {
            uint64_t lo = static_cast<uint64_t>(b) * chunk;
            uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi) span_scan_block(basis, lo, hi, local);
        }
#pragma omp critical(symspace_span_best)
        {
            if (local.weight < best.weight ||
                (local.weight == best.weight && local.mask < best.mask))
                best = local;
        }
    }
    return best;
}

}  // namespace

int min_weight(const LinearEmbedding& e) {
    if (e.r() > kMaxExhaustiveRank) throw CodesError("min_weight enumeration capped at r <= 24");
    return span_min_weight(e.rows(), true).weight;
}

int min_weight_serial(const LinearEmbedding& e) {
    if (e.r() > kMaxExhaustiveRank) throw CodesError("min_weight enumeration capped at r <= 24");
    return span_min_weight(e.rows(), false).weight;
}

// ---------------------------------------------------------------------------
// Griesmer bound
// ---------------------------------------------------------------------------

int64_t griesmer_min_length(int r, int w) {
    if (r < 1 || w < 1) throw CodesError("griesmer_min_length needs r >= 1, w >= 1");
    int64_t sum = 0;
    for (int i = 0; i < r; ++i) {
        if (i >= 62 || (int64_t{1} << i) >= w) {
            sum += r - i;  // all remaining terms are 1
            break;
        }
        sum += (static_cast<int64_t>(w) + (int64_t{1} << i) - 1) >> i;
    }
    return sum;
}

namespace {

struct EqKey {
    int r, m, w;
    bool operator<(const EqKey& o) const { return std::tie(r, m, w) < std::tie(o.r, o.m, o.w); }
};
struct EqCount {
    uint64_t codes = 0;
    uint64_t uniform = 0;
};

struct ScanResult {
    uint64_t checked = 0;
    uint64_t violations = 0;
    std::map<EqKey, EqCount> eq;

    void merge(const ScanResult& o) {
        checked += o.checked;
        violations += o.violations;
        for (const auto& [k, v] : o.eq) {
            auto& cell = eq[k];
            cell.codes += v.codes;
            cell.uniform += v.uniform;
        }
    }
};

// Every [m, r] code has exactly one reduced-echelon generator matrix, and the
// Griesmer bound is a property of the code, so scanning echelon forms covers
// all full-rank generator matrices.  Rows fit one machine word (m <= 12).
ScanResult scan_echelon_codes(int r, int m, const std::vector<int64_t>& bound, bool parallel) {
    std::vector<std::vector<int>> combos;
    {
        std::vector<int> pivots(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) pivots[static_cast<size_t>(i)] = i;
        for (;;) {
            combos.push_back(pivots);
            int i = r - 1;
            while (i >= 0 && pivots[static_cast<size_t>(i)] == m - r + i) --i;
            if (i < 0) break;
            ++pivots[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
        }
    }

    ScanResult total;
#pragma omp parallel if (parallel)
    {
        ScanResult local;
#pragma omp for schedule(dynamic)
        for (size_t ci = 0; ci < combos.size(); ++ci) {
            const auto& pv = combos[ci];
            std::vector<char> is_pivot(static_cast<size_t>(m), 0);
            for (int p : pv) is_pivot[static_cast<size_t>(p)] = 1;
            // Free entries of the echelon form: row i, column j > pivot_i,
            // j not a pivot column.
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < r; ++i)
                for (int j = pv[static_cast<size_t>(i)] + 1; j < m; ++j)
                    if (!is_pivot[static_cast<size_t>(j)]) free_pos.emplace_back(i, j);

            std::vector<uint64_t> rows(static_cast<size_t>(r), 0);
            for (int i = 0; i < r; ++i)
                rows[static_cast<size_t>(i)] = uint64_t{1} << pv[static_cast<size_t>(i)];

            uint64_t count = uint64_t{1} << free_pos.size();
            for (uint64_t x = 0;; ++x) {
                if (x != 0) {
                    auto [ri, cj] = free_pos[static_cast<size_t>(std::countr_zero(x))];
                    rows[static_cast<size_t>(ri)] ^= uint64_t{1} << cj;
                }
                uint64_t cw = 0;
                int wmin = INT_MAX, wmax = 0;
                for (uint32_t y = 1; y < (uint32_t{1} << r); ++y) {
                    cw ^= rows[static_cast<size_t>(std::countr_zero(y))];
                    int w = std::popcount(cw);
                    wmin = std::min(wmin, w);
                    wmax = std::max(wmax, w);
                }
                ++local.checked;
                int64_t need = bound[static_cast<size_t>(wmin)];
                if (m < need) {
                    ++local.violations;
                } else if (m == need) {
                    auto& cell = local.eq[EqKey{r, m, wmin}];
                    ++cell.codes;
                    if (wmin == wmax) ++cell.uniform;
                }
                if (x + 1 >= count) break;
            }
        }
#pragma omp critical(symspace_griesmer_scan)
        total.merge(local);
    }
    return total;
}

GriesmerVerifyResult verify_impl(int r_max, int m_max, bool parallel) {
    if (r_max < 1 || m_max < 1) throw CodesError("bounds must be >= 1");
    if (r_max > 4 || m_max > 12)
        throw CodesError("exhaustive verification capped at r_max <= 4, m_max <= 12");

    GriesmerVerifyResult res;
    std::map<EqKey, EqCount> eq;
    for (int r = 1; r <= r_max; ++r) {
        for (int m = r; m <= m_max; ++m) {
            std::vector<int64_t> bound(static_cast<size_t>(m) + 1, 0);
            for (int w = 1; w <= m; ++w) bound[static_cast<size_t>(w)] = griesmer_min_length(r, w);
            ScanResult scan = scan_echelon_codes(r, m, bound, parallel);
            res.codes_checked += scan.checked;
            res.violations += scan.violations;
            for (const auto& [k, v] : scan.eq) {
                auto& cell = eq[k];
                cell.codes += v.codes;
                cell.uniform += v.uniform;
            }
        }
    }
    for (const auto& [k, v] : eq) res.equalities.push_back({k.r, k.m, k.w, v.codes, v.uniform});
    return res;
}

}  // namespace

GriesmerVerifyResult verify_griesmer_exhaustive(int r_max, int m_max) {
    return verify_impl(r_max, m_max, true);
}

GriesmerVerifyResult verify_griesmer_exhaustive_serial(int r_max, int m_max) {
    return verify_impl(r_max, m_max, false);
}

// ---------------------------------------------------------------------------
// Algebraic lemma
// ---------------------------------------------------------------------------

int64_t alg_lemma_min_rank(int64_t n, int64_t c) {
    if (!(n >= c && c >= 2)) throw CodesError("needs n >= c >= 2");
    int64_t a = (c + 1) / 2;                    // ceil(c/2)
    int64_t b = (n - c + 2) / 2;                // ceil((n-c+1)/2), >= 1
    int64_t fl = std::bit_width(static_cast<uint64_t>(b)) - 1;  // floor(log2 b)
    return a + fl + 1;
}

bool alg_lemma_holds(int64_t n, int64_t c, int64_t r) {
    if (!(n >= c && c >= 2)) throw CodesError("needs n >= c >= 2");
    int64_t a = (c + 1) / 2;
    int64_t b = (n - c + 2) / 2;
    // Exact precondition r > a + log2(b), i.e. 2^(r-a) > b.
    int64_t ex = r - a;
    bool pre = ex >= 63 || (ex >= 0 && (int64_t{1} << ex) > b);
    if (!pre) throw CodesError("rank below the lemma threshold");

    int64_t sum = 0;
    for (int64_t i = 0; i < r; ++i) {
        int64_t k = i + 1;
        if (k >= 62 || (int64_t{1} << k) >= b) {
            sum += r - i;  // remaining terms are all 1
            break;
        }
        sum += (b + (int64_t{1} << k) - 1) >> k;
    }
    return n / 2 < sum;
}

namespace {

AlgLemmaSweep alg_sweep_impl(int n_max, bool parallel) {
    if (n_max < 2) throw CodesError("n_max must be >= 2");
    AlgLemmaSweep s;
    uint64_t cases = 0, violations = 0;
#pragma omp parallel for reduction(+ : cases, violations) schedule(static) if (parallel)
    for (int n = 2; n <= n_max; ++n) {
        for (int c = 2; c <= n; ++c) {
            ++cases;
            if (!alg_lemma_holds(n, c, alg_lemma_min_rank(n, c))) ++violations;
        }
    }
    s.cases = cases;
    s.violations = violations;
    return s;
}

}  // namespace

AlgLemmaSweep alg_lemma_sweep(int n_max) { return alg_sweep_impl(n_max, true); }
AlgLemmaSweep alg_lemma_sweep_serial(int n_max) { return alg_sweep_impl(n_max, false); }

// ---------------------------------------------------------------------------
// Involution search
// ---------------------------------------------------------------------------

namespace {

// Basis of the joint kernel of up to three functionals on the coefficient
// space Z_2^r (functionals given as r-bit masks).
std::vector<BitVec> kernel_basis(std::vector<BitVec> funcs, int r) {
    // Row-reduce the functional matrix.
    std::vector<int> pivot_cols;
    int nrows = static_cast<int>(funcs.size());
    int rank = 0;
    for (int col = 0; col < r && rank < nrows; ++col) {
        int pivot = -1;
        for (int i = rank; i < nrows; ++i)
            if (funcs[static_cast<size_t>(i)].get(col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(funcs[static_cast<size_t>(rank)], funcs[static_cast<size_t>(pivot)]);
        for (int i = 0; i < nrows; ++i)
            if (i != rank && funcs[static_cast<size_t>(i)].get(col))
                funcs[static_cast<size_t>(i)] ^= funcs[static_cast<size_t>(rank)];
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(static_cast<size_t>(r), 0);
    for (int p : pivot_cols) is_pivot[static_cast<size_t>(p)] = 1;

    std::vector<BitVec> basis;
    for (int f = 0; f < r; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        BitVec v(r);
        v.set(f, true);
        for (int i = 0; i < rank; ++i)
            if (funcs[static_cast<size_t>(i)].get(f)) v.set(pivot_cols[static_cast<size_t>(i)], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec total_parity_functional(const LinearEmbedding& e) {
    BitVec f(e.r());
    for (int i = 0; i < e.r(); ++i) f.set(i, e.rows()[static_cast<size_t>(i)].popcount() & 1);
    return f;
}

InvolutionCertificate certificate_for(const LinearEmbedding& e, const std::vector<BitVec>& basis,
                                      int n, int c) {
    std::vector<BitVec> images;
    images.reserve(basis.size());
    for (const auto& v : basis) images.push_back(e.image(v));
    SpanBest best = span_min_weight(images, false);

    BitVec elem(e.r());
    for (size_t i = 0; i < basis.size(); ++i)
        if ((best.mask >> i) & 1) elem ^= basis[i];

    InvolutionCertificate cert;
    cert.element = elem;
    cert.image = e.image(elem);
    cert.weight = best.weight;
    cert.codim = 2 * best.weight;
    cert.even_weight = best.weight % 2 == 0;
    cert.within_bound = 2 * cert.codim <= n - c;  // codim <= (n-c)/2
    return cert;
}

}  // namespace

InvolutionCertificate find_sigma(const LinearEmbedding& e, int n, int c) {
    if (e.r() < 2) throw NoEvenSubspace("even-parity subspace needs r >= 2");
    if (2 * e.m() != n && 2 * e.m() + 1 != n) throw CodesError("expected m = floor(n/2)");
    auto basis = kernel_basis({total_parity_functional(e)}, e.r());
    return certificate_for(e, basis, n, c);
}

InvolutionCertificate find_tau(const LinearEmbedding& e, const InvolutionCertificate& sigma, int n,
                               int c) {
    if (e.r() < 4) throw SubspaceTooSmall("tau search needs r >= 4");
    int i0 = sigma.image.lowest_set();
    if (i0 < 0) throw NoSupport("sigma has empty support");

    // (1) pinned support coordinate of iota(sigma); (2) total parity;
    // (3) parity over the complement of supp(iota(sigma)).
    BitVec f1(e.r()), f3(e.r());
    for (int i = 0; i < e.r(); ++i) {
        const BitVec& row = e.rows()[static_cast<size_t>(i)];
        f1.set(i, row.get(i0));
        int outside = row.popcount() - row.popcount_and(sigma.image);
        f3.set(i, outside & 1);
    }
    auto basis = kernel_basis({f1, total_parity_functional(e), f3}, e.r());
    if (basis.empty()) throw SubspaceTooSmall("constrained subspace is trivial");

    InvolutionCertificate cert = certificate_for(e, basis, n, c);
    cert.escapes_sigma = !cert.image.get(i0);
    int outside = cert.image.popcount() - cert.image.popcount_and(sigma.image);
    cert.even_weight_outside_sigma = outside % 2 == 0;
    return cert;
}

int subgroup_codim(const LinearEmbedding& e, const std::vector<BitVec>& elems) {
    BitVec joint(e.m());
    for (const auto& v : elems) joint |= e.image(v);
    return 2 * joint.popcount();
}

// ---------------------------------------------------------------------------
// Seeded randomized trials
// ---------------------------------------------------------------------------

namespace {

uint64_t trial_seed(uint64_t seed, int t) {
    // splitmix-style per-trial stream
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(t) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialSummary sigma_trials(int trials, uint64_t seed, int r, int m, int n, int c) {
    TrialSummary s;
    s.seed = seed;
    s.trials = trials;
    int failures = 0;
#pragma omp parallel for reduction(+ : failures) schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        LinearEmbedding e = random_full_rank_embedding(r, m, rng);
        InvolutionCertificate cert = find_sigma(e, n, c);
        // Re-derive everything from the raw image vector.
        BitVec img = e.image(cert.element);
        int w = img.popcount();
        bool ok = cert.element.any() && img == cert.image && w == cert.weight &&
                  cert.codim == 2 * w && cert.even_weight == (w % 2 == 0) && (w % 2 == 0) &&
                  cert.within_bound == (2 * cert.codim <= n - c) && cert.within_bound;
        if (!ok) ++failures;
    }
    s.failures = failures;
    return s;
}

TrialSummary tau_trials(int trials, uint64_t seed, int r, int m, int n, int c) {
    TrialSummary s;
    s.seed = seed;
    s.trials = trials;
    int failures = 0;
#pragma omp parallel for reduction(+ : failures) schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        LinearEmbedding e = random_full_rank_embedding(r, m, rng);
        InvolutionCertificate sigma = find_sigma(e, n, c);
        InvolutionCertificate tau = find_tau(e, sigma, n, c);

        BitVec img = e.image(tau.element);
        int w = img.popcount();
        int i0 = sigma.image.lowest_set();
        int outside = img.popcount() - img.popcount_and(sigma.image);
        int joint = subgroup_codim(e, {sigma.element, tau.element});
        bool ok = tau.element.any() && img == tau.image && w == tau.weight && tau.codim == 2 * w &&
                  tau.escapes_sigma && i0 >= 0 && !img.get(i0) &&
                  tau.even_weight && w % 2 == 0 &&
                  tau.even_weight_outside_sigma && outside % 2 == 0 &&
                  joint % 4 == 0 &&
                  tau.within_bound && 2 * tau.codim <= n - c;
        if (!ok) ++failures;
    }
    s.failures = failures;
    return s;
}

}  // namespace symspace

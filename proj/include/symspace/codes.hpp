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

#ifndef SYMSPACE_CODES_HPP
#define SYMSPACE_CODES_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspace {

struct CodesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : CodesError {
    using CodesError::CodesError;
};
struct NoEvenSubspace : CodesError {
    using CodesError::CodesError;
};
struct SubspaceTooSmall : CodesError {
    using CodesError::CodesError;
};
struct NoSupport : CodesError {
    using CodesError::CodesError;
};

inline constexpr int kMaxAmbientLength = 512;
inline constexpr int kMaxExhaustiveRank = 24;  // 2^r codeword enumeration cap

/// Fixed-capacity bit vector over GF(2), up to 512 bits.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(int bits);

    int bits() const noexcept { return bits_; }
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);
    void operator^=(const BitVec& o);
    void operator|=(const BitVec& o);
    int popcount() const noexcept;
    bool any() const noexcept;
    /// Population count restricted to the positions set in `mask`.
    int popcount_and(const BitVec& mask) const noexcept;
    /// Lowest set bit, or -1.
    int lowest_set() const noexcept;
    std::string to_string() const;  // '0'/'1' characters, index 0 first

    bool operator==(const BitVec&) const = default;

   private:
    std::array<uint64_t, 8> w_{};
    int bits_ = 0;
};

/// Full-rank r x m generator matrix over GF(2); rows generate the image of an
/// injective linear map from Z_2^r into Z_2^m.
class LinearEmbedding {
   public:
    LinearEmbedding(std::vector<BitVec> rows, int m);

    int r() const noexcept { return static_cast<int>(rows_.size()); }
    int m() const noexcept { return m_; }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }

    /// Image of a coefficient vector (bit i selects row i).
    BitVec image(const BitVec& coeffs) const;

   private:
    std::vector<BitVec> rows_;
    int m_ = 0;
};

int gf2_rank(std::vector<BitVec> rows);

LinearEmbedding read_generator_matrix(std::istream& in);
LinearEmbedding parse_generator_matrix(const std::string& text);
std::string write_generator_matrix(const LinearEmbedding& e);

LinearEmbedding random_full_rank_embedding(int r, int m, std::mt19937_64& rng);

/// Minimum Hamming weight over the 2^r - 1 nonzero codewords (r <= 24).
int min_weight(const LinearEmbedding& e);
int min_weight_serial(const LinearEmbedding& e);

/// Griesmer length bound: sum_{i=0}^{r-1} ceil(w / 2^i).
int64_t griesmer_min_length(int r, int w);

struct GriesmerEquality {
    int r = 0;
    int m = 0;
    int min_weight = 0;
    uint64_t codes = 0;          // equality-achieving codes at these parameters
    uint64_t uniform_codes = 0;  // of which every nonzero codeword has weight = min_weight
};

struct GriesmerVerifyResult {
    uint64_t codes_checked = 0;
    uint64_t violations = 0;
    std::vector<GriesmerEquality> equalities;  // sorted by (r, m, w)
    bool ok() const noexcept { return violations == 0; }
};

/// Exhaustive check of the Griesmer bound over every full-rank code with
/// r <= r_max, r <= m <= m_max, via reduced-echelon generator enumeration
/// (each code has exactly one echelon generator matrix, and the bound is a
/// property of the code).  Bounds capped at r_max <= 4, m_max <= 12.
GriesmerVerifyResult verify_griesmer_exhaustive(int r_max, int m_max);
GriesmerVerifyResult verify_griesmer_exhaustive_serial(int r_max, int m_max);

/// floor(n/2) < sum_{i=0}^{r-1} ceil(2^-(i+1) * ceil((n-c+1)/2)) for
/// n >= c >= 2 and r > ceil(c/2) + log2(ceil((n-c+1)/2)).  Evaluates both
/// sides exactly; the precondition is checked exactly as well.
bool alg_lemma_holds(int64_t n, int64_t c, int64_t r);

/// Least integer r exceeding ceil(c/2) + log2(ceil((n-c+1)/2)).
int64_t alg_lemma_min_rank(int64_t n, int64_t c);

struct AlgLemmaSweep {
    uint64_t cases = 0;
    uint64_t violations = 0;
    bool ok() const noexcept { return violations == 0; }
};

/// alg_lemma_holds at the minimal admissible rank for all 2 <= c <= n <= n_max.
AlgLemmaSweep alg_lemma_sweep(int n_max);
AlgLemmaSweep alg_lemma_sweep_serial(int n_max);

struct InvolutionCertificate {
    BitVec element;  // coefficients in Z_2^r
    BitVec image;    // its image in Z_2^m
    int weight = 0;  // Hamming weight of the image
    int codim = 0;   // 2 * weight
    bool even_weight = false;
    bool within_bound = false;  // codim <= (n - c)/2
    // set by find_tau only:
    bool escapes_sigma = false;             // image vanishes on the pinned support bit of sigma
    bool even_weight_outside_sigma = false; // parity over the complement of supp(sigma)
};

/// Minimal-image-weight nonzero element of the even-total-parity subspace
/// of Z_2^r (dimension >= r-1).  Its codimension 2w is automatically
/// divisible by 4; within_bound records codim <= (n-c)/2.
InvolutionCertificate find_sigma(const LinearEmbedding& e, int n, int c);

/// Minimal-image-weight nonzero element of the subspace cut out by three
/// functionals: the pinned support coordinate of sigma (its lowest-index
/// support bit), total parity, and parity over the complement of
/// supp(sigma).  Subspace dimension >= r-3.
InvolutionCertificate find_tau(const LinearEmbedding& e, const InvolutionCertificate& sigma, int n, int c);

/// Codimension of the joint fixed set of the subgroup generated by the given
/// elements: 2 * weight of the OR of their images.
int subgroup_codim(const LinearEmbedding& e, const std::vector<BitVec>& elems);

struct TrialSummary {
    uint64_t seed = 0;
    int trials = 0;
    int failures = 0;  // any required flag false or re-derivation mismatch
    bool ok() const noexcept { return failures == 0; }
};

/// Seeded randomized trials of find_sigma / find_tau on full-rank embeddings;
/// every certificate is re-derived from the raw image vector and checked.
TrialSummary sigma_trials(int trials, uint64_t seed, int r, int m, int n, int c);
TrialSummary tau_trials(int trials, uint64_t seed, int r, int m, int n, int c);

}  // namespace symspace

#endif

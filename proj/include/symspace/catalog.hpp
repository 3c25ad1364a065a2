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

#ifndef SYMSPACE_CATALOG_HPP
#define SYMSPACE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symspace {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Compact Lie groups and their rational sphere decompositions
// ---------------------------------------------------------------------------

enum class GroupFamily { Sp, Spin, U, SU, G2, F4, E6, E7, E8, SO };

/// A compact Lie group up to rational equivalence.  SO(k) is resolved to the
/// rational type of Spin(k); the low-rank coincidences SO(2)=U(1),
/// SO(4)=Spin(3)^2 etc. fall out of the Spin sphere formulas.
struct GroupDescriptor {
    GroupFamily family = GroupFamily::Sp;
    int param = 0;  // unused for the exceptional families

    static GroupDescriptor Sp(int n);
    static GroupDescriptor Spin(int k);
    static GroupDescriptor SO(int k);  // canonicalizes to Spin(k)
    static GroupDescriptor U(int n);
    static GroupDescriptor SU(int n);
    static GroupDescriptor exceptional(GroupFamily f);

    int rank() const;
    int dimension() const;  // sum of the sphere dimensions
    std::string to_string() const;
    bool operator==(const GroupDescriptor&) const = default;
};

/// Multiset of rational sphere dimensions, kept sorted.
struct SphereList {
    std::vector<int> dims;
    int sum() const;
    size_t size() const noexcept { return dims.size(); }
};

/// Sphere dimensions of the group's rational homotopy type.
SphereList group_spheres(const GroupDescriptor& g);

// ---------------------------------------------------------------------------
// Irreducible simply connected compact symmetric spaces
// ---------------------------------------------------------------------------

enum class SpaceKind {
    Sphere,
    CP,
    HP,
    CaP2,
    RealGr,
    ComplexGr,
    QuatGr,
    SpModU,   // CI   = Sp(n)/U(n)
    SOModU,   // DIII = SO(2n)/U(n)
    SUModSO,  // AI   = SU(n)/SO(n)
    SUModSp,  // AII  = SU(2n)/Sp(n)
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G2SO4,
    LieGroup,
};

enum class WitnessRelation { Equal, AtLeast };

/// A single cited Betti constraint for a space whose full polynomial is not
/// computed here.
struct BettiWitness {
    int degree = 0;
    WitnessRelation relation = WitnessRelation::Equal;
    int64_t value = 0;
    std::string citation;  // catalog table-row tag
};

enum class BettiSource { Computed, Witness };

class IrreducibleSpace {
   public:
    IrreducibleSpace() = default;  // placeholder value for containers
    static IrreducibleSpace sphere(int n);
    static IrreducibleSpace cp(int q);
    static IrreducibleSpace hp(int q);
    static IrreducibleSpace cap2();
    static IrreducibleSpace real_gr(int p, int q);
    static IrreducibleSpace complex_gr(int p, int q);
    static IrreducibleSpace quat_gr(int p, int q);
    static IrreducibleSpace sp_mod_u(int n);    // CI(n)
    static IrreducibleSpace so_mod_u(int n);    // DIII(n)
    static IrreducibleSpace su_mod_so(int n);   // AI(n)
    static IrreducibleSpace su_mod_sp(int n);   // AII(n)
    static IrreducibleSpace exceptional(SpaceKind k);
    static IrreducibleSpace lie_group(const GroupDescriptor& g);

    SpaceKind kind() const noexcept { return kind_; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    const std::optional<GroupDescriptor>& group() const noexcept { return group_; }

    int dimension() const;
    bool equal_rank() const;
    BettiSource source() const;
    std::vector<BettiWitness> witnesses() const;

    /// The pair (G, H) realizing the space; LieGroup spaces report G with an
    /// empty isotropy list.
    GroupDescriptor symbol_group() const;
    std::vector<GroupDescriptor> isotropy() const;

    /// Canonical display name, re-parseable by the expression grammar
    /// (e.g. "S^17", "GrR(3,8)", "EVII", "group:Spin(11)").
    std::string name() const;

    bool operator==(const IrreducibleSpace&) const = default;
    /// Canonical ordering used to make sweep output deterministic.
    static bool canonical_less(const IrreducibleSpace& a, const IrreducibleSpace& b);

   private:
    IrreducibleSpace(SpaceKind k, int p, int q) : kind_(k), p_(p), q_(q) {}
    SpaceKind kind_ = SpaceKind::Sphere;
    int p_ = 0;
    int q_ = 0;
    std::optional<GroupDescriptor> group_;
};

/// Every catalog space with dim <= max_dim and family parameters <= max_param,
/// each descriptor exactly once.  Sphere dimensions are bounded by max_dim
/// only.  Grassmannians enumerate from p = 2 (p = 1 duplicates the rank-one
/// families); Lie groups enumerate over SU(n>=3), Spin(k>=7), Sp(n>=2) and the
/// five exceptional groups so that each group manifold appears under a single
/// descriptor.
std::vector<IrreducibleSpace> enumerate_spaces(int max_dim, int max_param);

/// The embedded catalog data file (schema documented at its head).
std::string_view catalog_raw_data();

std::string space_kind_name(SpaceKind k);

}  // namespace symspace

#endif

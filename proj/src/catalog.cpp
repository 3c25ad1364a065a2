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

#include "symspace/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>
#include <utility>

namespace symspace {

// ---------------------------------------------------------------------------
// GroupDescriptor
// ---------------------------------------------------------------------------

GroupDescriptor GroupDescriptor::Sp(int n) {
    if (n < 1) throw CatalogError("Sp(n) needs n >= 1");
    return {GroupFamily::Sp, n};
}

GroupDescriptor GroupDescriptor::Spin(int k) {
    if (k < 2) throw CatalogError("Spin(k) needs k >= 2");
    return {GroupFamily::Spin, k};
}

GroupDescriptor GroupDescriptor::SO(int k) { return Spin(k); }

GroupDescriptor GroupDescriptor::U(int n) {
    if (n < 1) throw CatalogError("U(n) needs n >= 1");
    return {GroupFamily::U, n};
}

GroupDescriptor GroupDescriptor::SU(int n) {
    if (n < 2) throw CatalogError("SU(n) needs n >= 2");
    return {GroupFamily::SU, n};
}

GroupDescriptor GroupDescriptor::exceptional(GroupFamily f) {
    switch (f) {
        case GroupFamily::G2:
        case GroupFamily::F4:
        case GroupFamily::E6:
        case GroupFamily::E7:
        case GroupFamily::E8:
            return {f, 0};
        default:
            throw CatalogError("not an exceptional family");
    }
}

int GroupDescriptor::rank() const {
    switch (family) {
        case GroupFamily::Sp: return param;
        case GroupFamily::Spin:
        case GroupFamily::SO: return param / 2;
        case GroupFamily::U: return param;
        case GroupFamily::SU: return param - 1;
        case GroupFamily::G2: return 2;
        case GroupFamily::F4: return 4;
        case GroupFamily::E6: return 6;
        case GroupFamily::E7: return 7;
        case GroupFamily::E8: return 8;
    }
    throw CatalogError("bad family");
}

int GroupDescriptor::dimension() const { return group_spheres(*this).sum(); }

std::string GroupDescriptor::to_string() const {
    switch (family) {
        case GroupFamily::Sp: return "Sp(" + std::to_string(param) + ")";
        case GroupFamily::Spin: return "Spin(" + std::to_string(param) + ")";
        case GroupFamily::SO: return "SO(" + std::to_string(param) + ")";
        case GroupFamily::U: return "U(" + std::to_string(param) + ")";
        case GroupFamily::SU: return "SU(" + std::to_string(param) + ")";
        case GroupFamily::G2: return "G2";
        case GroupFamily::F4: return "F4";
        case GroupFamily::E6: return "E6";
        case GroupFamily::E7: return "E7";
        case GroupFamily::E8: return "E8";
    }
    throw CatalogError("bad family");
}

int SphereList::sum() const { return std::accumulate(dims.begin(), dims.end(), 0); }

namespace {

SphereList sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return SphereList{std::move(v)};
}

// Spin(k) for any k >= 1; Spin(1) is the trivial group (empty list), used
// internally for SO(1) isotropy factors.
SphereList spin_spheres(int k) {
    std::vector<int> d;
    if (k % 2 == 1) {
        int n = (k - 1) / 2;
        for (int i = 1; i <= n; ++i) d.push_back(4 * i - 1);
    } else {
        int n = k / 2;
        for (int i = 1; i <= n - 1; ++i) d.push_back(4 * i - 1);
        d.push_back(2 * n - 1);
    }
    return sorted(std::move(d));
}

}  // namespace

SphereList group_spheres(const GroupDescriptor& g) {
    std::vector<int> d;
    switch (g.family) {
        case GroupFamily::Sp:
            if (g.param < 1) throw CatalogError("Sp(n) needs n >= 1");
            for (int i = 1; i <= g.param; ++i) d.push_back(4 * i - 1);
            return sorted(std::move(d));
        case GroupFamily::Spin:
        case GroupFamily::SO:
            if (g.param < 2) throw CatalogError("Spin(k) needs k >= 2");
            return spin_spheres(g.param);
        case GroupFamily::U:
            if (g.param < 1) throw CatalogError("U(n) needs n >= 1");
            for (int i = 1; i <= g.param; ++i) d.push_back(2 * i - 1);
            return sorted(std::move(d));
        case GroupFamily::SU:
            if (g.param < 2) throw CatalogError("SU(n) needs n >= 2");
            for (int i = 2; i <= g.param; ++i) d.push_back(2 * i - 1);
            return sorted(std::move(d));
        case GroupFamily::G2: return sorted({3, 11});
        case GroupFamily::F4: return sorted({3, 11, 15, 23});
        case GroupFamily::E6: return sorted({3, 9, 11, 15, 17, 23});
        case GroupFamily::E7: return sorted({3, 11, 15, 19, 23, 27, 35});
        case GroupFamily::E8: return sorted({3, 15, 23, 27, 35, 39, 47, 59});
    }
    throw CatalogError("bad family");
}

// ---------------------------------------------------------------------------
// IrreducibleSpace
// ---------------------------------------------------------------------------

IrreducibleSpace IrreducibleSpace::sphere(int n) {
    if (n < 2) throw CatalogError("S^n needs n >= 2 (simply connected)");
    return {SpaceKind::Sphere, n, 0};
}

IrreducibleSpace IrreducibleSpace::cp(int q) {
    if (q < 1) throw CatalogError("CP^q needs q >= 1");
    return {SpaceKind::CP, q, 0};
}

IrreducibleSpace IrreducibleSpace::hp(int q) {
    if (q < 1) throw CatalogError("HP^q needs q >= 1");
    return {SpaceKind::HP, q, 0};
}

IrreducibleSpace IrreducibleSpace::cap2() { return {SpaceKind::CaP2, 0, 0}; }

// Rank-one Grassmannians canonicalize to the projective families so every
// space answers through one descriptor.
IrreducibleSpace IrreducibleSpace::real_gr(int p, int q) {
    if (p < 1 || p > q) throw CatalogError("GrR(p,q) needs 1 <= p <= q");
    if (p == 1) return sphere(q);
    return {SpaceKind::RealGr, p, q};
}

IrreducibleSpace IrreducibleSpace::complex_gr(int p, int q) {
    if (p < 1 || p > q) throw CatalogError("GrC(p,q) needs 1 <= p <= q");
    if (p == 1) return cp(q);
    return {SpaceKind::ComplexGr, p, q};
}

IrreducibleSpace IrreducibleSpace::quat_gr(int p, int q) {
    if (p < 1 || p > q) throw CatalogError("GrH(p,q) needs 1 <= p <= q");
    if (p == 1) return hp(q);
    return {SpaceKind::QuatGr, p, q};
}

IrreducibleSpace IrreducibleSpace::sp_mod_u(int n) {
    if (n < 1) throw CatalogError("CI(n) needs n >= 1");
    return {SpaceKind::SpModU, n, 0};
}

IrreducibleSpace IrreducibleSpace::so_mod_u(int n) {
    if (n < 2) throw CatalogError("DIII(n) needs n >= 2");
    return {SpaceKind::SOModU, n, 0};
}

IrreducibleSpace IrreducibleSpace::su_mod_so(int n) {
    if (n < 2) throw CatalogError("AI(n) needs n >= 2");
    return {SpaceKind::SUModSO, n, 0};
}

IrreducibleSpace IrreducibleSpace::su_mod_sp(int n) {
    if (n < 2) throw CatalogError("AII(n) needs n >= 2");
    return {SpaceKind::SUModSp, n, 0};
}

IrreducibleSpace IrreducibleSpace::exceptional(SpaceKind k) {
    switch (k) {
        case SpaceKind::EI:
        case SpaceKind::EII:
        case SpaceKind::EIII:
        case SpaceKind::EIV:
        case SpaceKind::EV:
        case SpaceKind::EVI:
        case SpaceKind::EVII:
        case SpaceKind::EVIII:
        case SpaceKind::EIX:
        case SpaceKind::FI:
        case SpaceKind::FII:
        case SpaceKind::G2SO4:
            return {k, 0, 0};
        default:
            throw CatalogError("not an exceptional space kind");
    }
}

IrreducibleSpace IrreducibleSpace::lie_group(const GroupDescriptor& g) {
    IrreducibleSpace s{SpaceKind::LieGroup, g.param, 0};
    s.group_ = g;
    return s;
}

GroupDescriptor IrreducibleSpace::symbol_group() const {
    switch (kind_) {
        case SpaceKind::Sphere: return GroupDescriptor::Spin(p_ + 1);
        case SpaceKind::CP: return GroupDescriptor::SU(p_ + 1);
        case SpaceKind::HP: return GroupDescriptor::Sp(p_ + 1);
        case SpaceKind::CaP2: return GroupDescriptor::exceptional(GroupFamily::F4);
        case SpaceKind::RealGr: return GroupDescriptor::Spin(p_ + q_);
        case SpaceKind::ComplexGr: return GroupDescriptor::SU(p_ + q_);
        case SpaceKind::QuatGr: return GroupDescriptor::Sp(p_ + q_);
        case SpaceKind::SpModU: return GroupDescriptor::Sp(p_);
        case SpaceKind::SOModU: return GroupDescriptor::Spin(2 * p_);
        case SpaceKind::SUModSO: return GroupDescriptor::SU(p_);
        case SpaceKind::SUModSp: return GroupDescriptor::SU(2 * p_);
        case SpaceKind::EI:
        case SpaceKind::EII:
        case SpaceKind::EIII:
        case SpaceKind::EIV: return GroupDescriptor::exceptional(GroupFamily::E6);
        case SpaceKind::EV:
        case SpaceKind::EVI:
        case SpaceKind::EVII: return GroupDescriptor::exceptional(GroupFamily::E7);
        case SpaceKind::EVIII:
        case SpaceKind::EIX: return GroupDescriptor::exceptional(GroupFamily::E8);
        case SpaceKind::FI:
        case SpaceKind::FII: return GroupDescriptor::exceptional(GroupFamily::F4);
        case SpaceKind::G2SO4: return GroupDescriptor::exceptional(GroupFamily::G2);
        case SpaceKind::LieGroup: return *group_;
    }
    throw CatalogError("bad kind");
}

std::vector<GroupDescriptor> IrreducibleSpace::isotropy() const {
    switch (kind_) {
        case SpaceKind::Sphere: return {GroupDescriptor::Spin(p_)};
        case SpaceKind::CP:
            if (p_ == 1) return {GroupDescriptor::U(1)};
            return {GroupDescriptor::SU(p_), GroupDescriptor::U(1)};
        case SpaceKind::HP: return {GroupDescriptor::Sp(p_), GroupDescriptor::Sp(1)};
        case SpaceKind::CaP2: return {GroupDescriptor::Spin(9)};
        case SpaceKind::RealGr:
            return {GroupDescriptor::Spin(p_), GroupDescriptor::Spin(q_)};
        case SpaceKind::ComplexGr:
            return {GroupDescriptor::SU(p_), GroupDescriptor::SU(q_), GroupDescriptor::U(1)};
        case SpaceKind::QuatGr: return {GroupDescriptor::Sp(p_), GroupDescriptor::Sp(q_)};
        case SpaceKind::SpModU: return {GroupDescriptor::U(p_)};
        case SpaceKind::SOModU: return {GroupDescriptor::U(p_)};
        case SpaceKind::SUModSO:
            if (p_ == 2) return {GroupDescriptor::U(1)};  // SO(2)
            return {GroupDescriptor::Spin(p_)};
        case SpaceKind::SUModSp: return {GroupDescriptor::Sp(p_)};
        case SpaceKind::EI: return {GroupDescriptor::Sp(4)};
        case SpaceKind::EII: return {GroupDescriptor::SU(6), GroupDescriptor::SU(2)};
        case SpaceKind::EIII: return {GroupDescriptor::Spin(10), GroupDescriptor::U(1)};
        case SpaceKind::EIV: return {GroupDescriptor::exceptional(GroupFamily::F4)};
        case SpaceKind::EV: return {GroupDescriptor::SU(8)};
        case SpaceKind::EVI: return {GroupDescriptor::Spin(12), GroupDescriptor::SU(2)};
        case SpaceKind::EVII: return {GroupDescriptor::exceptional(GroupFamily::E6), GroupDescriptor::U(1)};
        case SpaceKind::EVIII: return {GroupDescriptor::Spin(16)};
        case SpaceKind::EIX: return {GroupDescriptor::exceptional(GroupFamily::E7), GroupDescriptor::SU(2)};
        case SpaceKind::FI: return {GroupDescriptor::Sp(3), GroupDescriptor::SU(2)};
        case SpaceKind::FII: return {GroupDescriptor::Spin(9)};
        case SpaceKind::G2SO4: return {GroupDescriptor::Spin(3), GroupDescriptor::Spin(3)};
        case SpaceKind::LieGroup: return {};
    }
    throw CatalogError("bad kind");
}

int IrreducibleSpace::dimension() const {
    switch (kind_) {
        case SpaceKind::Sphere: return p_;
        case SpaceKind::CP: return 2 * p_;
        case SpaceKind::HP: return 4 * p_;
        case SpaceKind::CaP2: return 16;
        case SpaceKind::RealGr: return p_ * q_;
        case SpaceKind::ComplexGr: return 2 * p_ * q_;
        case SpaceKind::QuatGr: return 4 * p_ * q_;
        case SpaceKind::SpModU: return p_ * (p_ + 1);
        case SpaceKind::SOModU: return p_ * (p_ - 1);
        case SpaceKind::SUModSO: return (p_ - 1) * (p_ + 2) / 2;
        case SpaceKind::SUModSp: return (2 * p_ + 1) * (p_ - 1);
        case SpaceKind::EI: return 42;
        case SpaceKind::EII: return 40;
        case SpaceKind::EIII: return 32;
        case SpaceKind::EIV: return 26;
        case SpaceKind::EV: return 70;
        case SpaceKind::EVI: return 64;
        case SpaceKind::EVII: return 54;
        case SpaceKind::EVIII: return 128;
        case SpaceKind::EIX: return 112;
        case SpaceKind::FI: return 28;
        case SpaceKind::FII: return 16;
        case SpaceKind::G2SO4: return 8;
        case SpaceKind::LieGroup: return group_->dimension();
    }
    throw CatalogError("bad kind");
}

bool IrreducibleSpace::equal_rank() const {
    if (kind_ == SpaceKind::LieGroup) return false;  // chi = 0
    int hrank = 0;
    for (const auto& h : isotropy()) hrank += h.rank();
    return symbol_group().rank() == hrank;
}

BettiSource IrreducibleSpace::source() const {
    switch (kind_) {
        case SpaceKind::Sphere:
        case SpaceKind::CP:
        case SpaceKind::HP:
        case SpaceKind::CaP2:
        case SpaceKind::LieGroup:
            return BettiSource::Computed;
        default:
            return equal_rank() ? BettiSource::Computed : BettiSource::Witness;
    }
}

std::vector<BettiWitness> IrreducibleSpace::witnesses() const {
    std::vector<BettiWitness> w;
    if (source() != BettiSource::Witness) return w;
    switch (kind_) {
        case SpaceKind::SUModSO:
            if (p_ >= 6) w.push_back({5, WitnessRelation::AtLeast, 1, "table2:SU(n)/SO(n)"});
            break;
        case SpaceKind::SUModSp:
            if (p_ >= 4) w.push_back({5, WitnessRelation::AtLeast, 1, "table2:SU(2n)/Sp(n)"});
            break;
        case SpaceKind::EI:
            w.push_back({9, WitnessRelation::AtLeast, 1, "table3:E6/Sp(4)"});
            break;
        case SpaceKind::EIV:
            w.push_back({9, WitnessRelation::AtLeast, 1, "table3:E6/F4"});
            break;
        case SpaceKind::RealGr:
            // Non-equal-rank Grassmannians have p, q both odd.
            if (p_ == 3) {
                // Low-degree Betti numbers agree with the HP pattern.
                int upto = std::min(q_, 16);
                for (int i = 0; i <= upto; ++i)
                    w.push_back({i, WitnessRelation::Equal, (i % 4 == 0) ? 1 : 0, "lowdeg:GrR(3,q)"});
            } else if (p_ >= 5) {
                w.push_back({4, WitnessRelation::AtLeast, 2, "table2:SO(p+q)/SO(p)xSO(q)"});
            }
            break;
        default:
            break;
    }
    return w;
}

std::string space_kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::Sphere: return "Sphere";
        case SpaceKind::CP: return "CP";
        case SpaceKind::HP: return "HP";
        case SpaceKind::CaP2: return "CaP2";
        case SpaceKind::RealGr: return "RealGr";
        case SpaceKind::ComplexGr: return "ComplexGr";
        case SpaceKind::QuatGr: return "QuatGr";
        case SpaceKind::SpModU: return "CI";
        case SpaceKind::SOModU: return "DIII";
        case SpaceKind::SUModSO: return "AI";
        case SpaceKind::SUModSp: return "AII";
        case SpaceKind::EI: return "EI";
        case SpaceKind::EII: return "EII";
        case SpaceKind::EIII: return "EIII";
        case SpaceKind::EIV: return "EIV";
        case SpaceKind::EV: return "EV";
        case SpaceKind::EVI: return "EVI";
        case SpaceKind::EVII: return "EVII";
        case SpaceKind::EVIII: return "EVIII";
        case SpaceKind::EIX: return "EIX";
        case SpaceKind::FI: return "FI";
        case SpaceKind::FII: return "FII";
        case SpaceKind::G2SO4: return "G";
        case SpaceKind::LieGroup: return "group";
    }
    throw CatalogError("bad kind");
}

std::string IrreducibleSpace::name() const {
    switch (kind_) {
        case SpaceKind::Sphere: return "S^" + std::to_string(p_);
        case SpaceKind::CP: return "CP^" + std::to_string(p_);
        case SpaceKind::HP: return "HP^" + std::to_string(p_);
        case SpaceKind::CaP2: return "CaP2";
        case SpaceKind::RealGr: return "GrR(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
        case SpaceKind::ComplexGr: return "GrC(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
        case SpaceKind::QuatGr: return "GrH(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
        case SpaceKind::SpModU: return "CI(" + std::to_string(p_) + ")";
        case SpaceKind::SOModU: return "DIII(" + std::to_string(p_) + ")";
        case SpaceKind::SUModSO: return "AI(" + std::to_string(p_) + ")";
        case SpaceKind::SUModSp: return "AII(" + std::to_string(p_) + ")";
        case SpaceKind::LieGroup: return "group:" + group_->to_string();
        default: return space_kind_name(kind_);
    }
}

bool IrreducibleSpace::canonical_less(const IrreducibleSpace& a, const IrreducibleSpace& b) {
    auto key = [](const IrreducibleSpace& s) {
        int fam = s.kind_ == SpaceKind::LieGroup ? static_cast<int>(s.group_->family) : 0;
        return std::make_tuple(static_cast<int>(s.kind_), fam, s.p_, s.q_);
    };
    return key(a) < key(b);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<IrreducibleSpace> enumerate_spaces(int max_dim, int max_param) {
    if (max_dim < 0 || max_param < 0) throw CatalogError("enumerate_spaces needs bounds >= 0");
    std::vector<IrreducibleSpace> out;
    if (max_dim == 0) return out;
    auto add = [&](IrreducibleSpace s) {
        if (s.dimension() <= max_dim) out.push_back(std::move(s));
    };

    for (int n = 2; n <= max_dim; ++n) add(IrreducibleSpace::sphere(n));
    for (int q = 1; q <= max_param && 2 * q <= max_dim; ++q) add(IrreducibleSpace::cp(q));
    for (int q = 1; q <= max_param && 4 * q <= max_dim; ++q) add(IrreducibleSpace::hp(q));
    if (16 <= max_dim) add(IrreducibleSpace::cap2());
    for (int p = 2; p <= max_param; ++p)
        for (int q = p; q <= max_param && p * q <= max_dim; ++q) add(IrreducibleSpace::real_gr(p, q));
    for (int p = 2; p <= max_param; ++p)
        for (int q = p; q <= max_param && 2 * p * q <= max_dim; ++q) add(IrreducibleSpace::complex_gr(p, q));
    for (int p = 2; p <= max_param; ++p)
        for (int q = p; q <= max_param && 4 * p * q <= max_dim; ++q) add(IrreducibleSpace::quat_gr(p, q));
    for (int n = 2; n <= max_param && n * (n + 1) <= max_dim; ++n) add(IrreducibleSpace::sp_mod_u(n));
    for (int n = 2; n <= max_param && n * (n - 1) <= max_dim; ++n) add(IrreducibleSpace::so_mod_u(n));
    for (int n = 2; n <= max_param && (n - 1) * (n + 2) / 2 <= max_dim; ++n)
        add(IrreducibleSpace::su_mod_so(n));
    for (int n = 2; n <= max_param && (2 * n + 1) * (n - 1) <= max_dim; ++n)
        add(IrreducibleSpace::su_mod_sp(n));

    for (SpaceKind k : {SpaceKind::EI, SpaceKind::EII, SpaceKind::EIII, SpaceKind::EIV, SpaceKind::EV,
                        SpaceKind::EVI, SpaceKind::EVII, SpaceKind::EVIII, SpaceKind::EIX, SpaceKind::FI,
                        SpaceKind::FII, SpaceKind::G2SO4})
        add(IrreducibleSpace::exceptional(k));

    // Group manifolds; each compact simple group appears under one descriptor
    // (SU(2)=Sp(1)=Spin(3) is already S^3, Spin(4) is not simple, Spin(5)=Sp(2)
    // and Spin(6)=SU(4), so Spin starts at 7).
    for (int n = 3; n <= max_param && n * n - 1 <= max_dim; ++n)
        add(IrreducibleSpace::lie_group(GroupDescriptor::SU(n)));
    for (int k = 7; k <= max_param && k * (k - 1) / 2 <= max_dim; ++k)
        add(IrreducibleSpace::lie_group(GroupDescriptor::Spin(k)));
    for (int n = 2; n <= max_param && n * (2 * n + 1) <= max_dim; ++n)
        add(IrreducibleSpace::lie_group(GroupDescriptor::Sp(n)));
    for (GroupFamily f : {GroupFamily::G2, GroupFamily::F4, GroupFamily::E6, GroupFamily::E7, GroupFamily::E8})
        add(IrreducibleSpace::lie_group(GroupDescriptor::exceptional(f)));

    std::sort(out.begin(), out.end(), IrreducibleSpace::canonical_less);
    return out;
}

}  // namespace symspace

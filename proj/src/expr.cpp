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

#include "symspace/expr.hpp"

#include <cctype>

namespace symspace {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    auto push = [&] {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            push();
        } else if (ch == '#') {
            push();
            toks.emplace_back("#");
        } else {
            cur += ch;
        }
    }
    push();
    return toks;
}

int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw ParseError("missing " + what);
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad " + what + ": " + s);
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": " + s);
    }
}

// "Name(a)" or "Name(a,b)"
std::pair<int, int> parse_params(const std::string& tok, size_t open, bool pair_required,
                                 bool pair_allowed) {
    if (open == std::string::npos || tok.back() != ')') throw ParseError("bad factor: " + tok);
    std::string inside = tok.substr(open + 1, tok.size() - open - 2);
    size_t comma = inside.find(',');
    if (comma == std::string::npos) {
        if (pair_required) throw ParseError("factor needs two parameters: " + tok);
        return {parse_int(inside, "parameter"), 0};
    }
    if (!pair_allowed) throw ParseError("factor takes one parameter: " + tok);
    return {parse_int(inside.substr(0, comma), "parameter"),
            parse_int(inside.substr(comma + 1), "parameter")};
}

GroupDescriptor parse_group_name(const std::string& name) {
    if (name == "G2") return GroupDescriptor::exceptional(GroupFamily::G2);
    if (name == "F4") return GroupDescriptor::exceptional(GroupFamily::F4);
    if (name == "E6") return GroupDescriptor::exceptional(GroupFamily::E6);
    if (name == "E7") return GroupDescriptor::exceptional(GroupFamily::E7);
    if (name == "E8") return GroupDescriptor::exceptional(GroupFamily::E8);
    size_t open = name.find('(');
    if (open == std::string::npos || name.back() != ')') throw ParseError("bad group: " + name);
    std::string fam = name.substr(0, open);
    int k = parse_int(name.substr(open + 1, name.size() - open - 2), "group parameter");
    try {
        if (fam == "SU") return GroupDescriptor::SU(k);
        if (fam == "Spin") return GroupDescriptor::Spin(k);
        if (fam == "SO") return GroupDescriptor::SO(k);
        if (fam == "Sp") return GroupDescriptor::Sp(k);
        if (fam == "U") return GroupDescriptor::U(k);
    } catch (const CatalogError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("bad group: " + name);
}

IrreducibleSpace parse_factor(const std::string& tok) {
    try {
        if (tok.rfind("S^", 0) == 0) return IrreducibleSpace::sphere(parse_int(tok.substr(2), "dimension"));
        if (tok.rfind("CP^", 0) == 0) return IrreducibleSpace::cp(parse_int(tok.substr(3), "parameter"));
        if (tok.rfind("HP^", 0) == 0) return IrreducibleSpace::hp(parse_int(tok.substr(3), "parameter"));
        if (tok == "CaP2") return IrreducibleSpace::cap2();
        if (tok == "G") return IrreducibleSpace::exceptional(SpaceKind::G2SO4);
        if (tok.rfind("group:", 0) == 0) return IrreducibleSpace::lie_group(parse_group_name(tok.substr(6)));

        size_t open = tok.find('(');
        std::string head = open == std::string::npos ? tok : tok.substr(0, open);
        if (head == "GrR") {
            auto [p, q] = parse_params(tok, open, true, true);
            return IrreducibleSpace::real_gr(p, q);
        }
        if (head == "GrC") {
            auto [p, q] = parse_params(tok, open, true, true);
            return IrreducibleSpace::complex_gr(p, q);
        }
        if (head == "GrH") {
            auto [p, q] = parse_params(tok, open, true, true);
            return IrreducibleSpace::quat_gr(p, q);
        }
        if (head == "AI") {
            auto [n, _] = parse_params(tok, open, false, false);
            return IrreducibleSpace::su_mod_so(n);
        }
        if (head == "AII") {
            auto [n, _] = parse_params(tok, open, false, false);
            return IrreducibleSpace::su_mod_sp(n);
        }
        if (head == "CI") {
            auto [n, _] = parse_params(tok, open, false, false);
            return IrreducibleSpace::sp_mod_u(n);
        }
        if (head == "DIII") {
            auto [n, _] = parse_params(tok, open, false, false);
            return IrreducibleSpace::so_mod_u(n);
        }
        for (auto [name, kind] : {std::pair<const char*, SpaceKind>{"EI", SpaceKind::EI},
                                  {"EII", SpaceKind::EII},
                                  {"EIII", SpaceKind::EIII},
                                  {"EIV", SpaceKind::EIV},
                                  {"EV", SpaceKind::EV},
                                  {"EVI", SpaceKind::EVI},
                                  {"EVII", SpaceKind::EVII},
                                  {"EVIII", SpaceKind::EVIII},
                                  {"EIX", SpaceKind::EIX},
                                  {"FI", SpaceKind::FI},
                                  {"FII", SpaceKind::FII}})
            if (tok == name) return IrreducibleSpace::exceptional(kind);
    } catch (const CatalogError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown factor: " + tok);
}

}  // namespace

int ProductSpace::dimension() const {
    int d = 0;
    for (const auto& f : factors) d += f.dimension();
    return d;
}

std::string ProductSpace::name() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].name();
    }
    return s;
}

std::string SpaceExpression::name() const {
    std::string s;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " # ";
        s += summands[i].name();
    }
    return s;
}

SpaceExpression parse_space_expression(const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty()) throw ParseError("empty expression");

    SpaceExpression expr;
    ProductSpace current;
    bool expect_factor = true;
    for (const auto& tok : toks) {
        if (tok == "#") {
            if (expect_factor || current.factors.empty()) throw ParseError("misplaced '#'");
            expr.summands.push_back(std::move(current));
            current = {};
            expect_factor = true;
        } else if (tok == "x") {
            if (expect_factor) throw ParseError("misplaced 'x'");
            expect_factor = true;
        } else {
            if (!expect_factor) throw ParseError("missing 'x' before " + tok);
            current.factors.push_back(parse_factor(tok));
            expect_factor = false;
        }
    }
    if (expect_factor || current.factors.empty()) throw ParseError("dangling operator");
    expr.summands.push_back(std::move(current));

    if (expr.is_connected_sum()) {
        int dim = expr.summands.front().dimension();
        for (const auto& s : expr.summands)
            if (s.dimension() != dim)
                throw ParseError("connected summands must share one dimension");
    }
    return expr;
}

}  // namespace symspace

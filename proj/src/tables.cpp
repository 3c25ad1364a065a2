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

#include "symspace/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "symspace/betti.hpp"

namespace symspace {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> records_with_prefix(const std::string& prefix) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in{std::string(catalog_raw_data())};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '|');
        if (!fields.empty() && fields[0] == prefix) out.push_back(std::move(fields));
    }
    return out;
}

SpaceKind parse_space_kind(const std::string& tok) {
    static const std::vector<std::pair<std::string, SpaceKind>> m = {
        {"Sphere", SpaceKind::Sphere}, {"CP", SpaceKind::CP},       {"HP", SpaceKind::HP},
        {"CaP2", SpaceKind::CaP2},     {"RealGr", SpaceKind::RealGr},
        {"ComplexGr", SpaceKind::ComplexGr}, {"QuatGr", SpaceKind::QuatGr},
        {"CI", SpaceKind::SpModU},     {"DIII", SpaceKind::SOModU}, {"AI", SpaceKind::SUModSO},
        {"AII", SpaceKind::SUModSp},   {"EI", SpaceKind::EI},       {"EII", SpaceKind::EII},
        {"EIII", SpaceKind::EIII},     {"EIV", SpaceKind::EIV},     {"EV", SpaceKind::EV},
        {"EVI", SpaceKind::EVI},       {"EVII", SpaceKind::EVII},   {"EVIII", SpaceKind::EVIII},
        {"EIX", SpaceKind::EIX},       {"FI", SpaceKind::FI},       {"FII", SpaceKind::FII},
        {"G", SpaceKind::G2SO4}};
    for (const auto& [name, kind] : m)
        if (name == tok) return kind;
    throw TableError("unknown space kind: " + tok);
}

}  // namespace

std::string Table1Row::display() const {
    if (!formula_id.empty()) {
        if (formula_id == "sp4k" || formula_id == "spin_odd") return "3, 7, ..., 4n-1";
        if (formula_id == "spin_even") return "3, 7, ..., 4n-5, 2n-1";
        if (formula_id == "u2k") return "1, 3, ..., 2n-1";
        if (formula_id == "su2k") return "3, 5, ..., 2n-1";
        throw TableError("unknown sphere formula: " + formula_id);
    }
    std::string s;
    for (size_t i = 0; i < literal.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(literal[i]);
    }
    return s;
}

std::vector<Table1Row> table1_rows() {
    std::vector<Table1Row> rows;
    for (const auto& f : records_with_prefix("group")) {
        if (f.size() != 4) throw TableError("bad group record");
        Table1Row row;
        row.tag = f[1];
        row.params = f[2];
        const std::string& spec = f[3];
        if (spec.find(';') != std::string::npos || (spec.size() <= 2 && isdigit(spec[0]))) {
            for (const auto& tok : split(spec, ';')) row.literal.push_back(std::stoi(tok));
        } else {
            row.formula_id = spec;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> table_rows(int table) {
    if (table != 2 && table != 3) throw TableError("table id must be 2 or 3");
    std::vector<TableRow> rows;
    std::string prefix = table == 2 ? "table2" : "table3";
    for (const auto& f : records_with_prefix(prefix)) {
        TableRow row;
        row.table = table;
        if (table == 2) {
            if (f.size() != 8) throw TableError("bad table2 record");
            row.gh = f[1];
            row.params = f[2];
            row.kind = parse_space_kind(f[3]);
            auto ps = split(f[4], ',');
            row.p0 = std::stoi(ps[0]);
            if (ps.size() > 1) row.q0 = std::stoi(ps[1]);
            row.poly = f[5];
            row.reference = f[6];
            row.obstruction = f[7];
        } else {
            if (f.size() != 6) throw TableError("bad table3 record");
            row.gh = f[1];
            row.kind = parse_space_kind(f[2]);
            row.poly = f[3];
            row.reference = f[4];
            row.obstruction = f[5];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IrreducibleSpace TableRow::smallest_space() const {
    switch (kind) {
        case SpaceKind::SUModSO: return IrreducibleSpace::su_mod_so(p0);
        case SpaceKind::SUModSp: return IrreducibleSpace::su_mod_sp(p0);
        case SpaceKind::RealGr: return IrreducibleSpace::real_gr(p0, q0);
        case SpaceKind::ComplexGr: return IrreducibleSpace::complex_gr(p0, q0);
        case SpaceKind::QuatGr: return IrreducibleSpace::quat_gr(p0, q0);
        case SpaceKind::SpModU: return IrreducibleSpace::sp_mod_u(p0);
        case SpaceKind::SOModU: return IrreducibleSpace::so_mod_u(p0);
        default: return IrreducibleSpace::exceptional(kind);
    }
}

PrintedPoly parse_printed_poly(const std::string& s) {
    PrintedPoly out;
    if (s.empty() || s == "-") return out;
    for (const auto& raw : split(s, '+')) {
        std::string tok = raw;
        if (tok == "...") {
            out.elided = true;
            continue;
        }
        int64_t coeff = 1;
        size_t tpos = tok.find('t');
        if (tpos == std::string::npos) throw TableError("bad poly term: " + tok);
        if (tpos > 0) coeff = std::stoll(tok.substr(0, tpos));
        size_t cpos = tok.find('^');
        if (cpos == std::string::npos) throw TableError("bad poly term: " + tok);
        int degree = std::stoi(tok.substr(cpos + 1));
        out.terms.push_back({degree, coeff});
    }
    return out;
}

Obstruction parse_obstruction(const std::string& s) {
    auto parse_side = [](const std::string& side) -> std::pair<bool, int> {
        if (side.rfind("b_", 0) == 0) return {true, std::stoi(side.substr(2))};
        return {false, std::stoi(side)};
    };
    size_t lt = s.find('<');
    size_t gt = s.find('>');
    if (lt != std::string::npos) {
        auto [lb, lv] = parse_side(s.substr(0, lt));
        auto [rb, rv] = parse_side(s.substr(lt + 1));
        if (!lb && rb) {
            if (lv == 1 && rv == 4) return {ObstructionKind::B4Bound, 0, 4};
            return {ObstructionKind::Positive, 0, rv};  // "0<b_9"
        }
        if (lb && rb) return {ObstructionKind::IsoLess, lv, rv};
        throw TableError("bad obstruction: " + s);
    }
    if (gt != std::string::npos) {
        auto [lb, lv] = parse_side(s.substr(0, gt));
        auto [rb, rv] = parse_side(s.substr(gt + 1));
        if (lb && !rb && rv == 0) return {ObstructionKind::Positive, 0, lv};  // "b_5>0"
        if (lb && rb) return {ObstructionKind::IsoGreater, lv, rv};
        throw TableError("bad obstruction: " + s);
    }
    throw TableError("bad obstruction: " + s);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string render_table1(TableFormat f) {
    auto rows = table1_rows();
    if (f == TableFormat::Json) {
        nlohmann::ordered_json j;
        j["table"] = 1;
        j["title"] = "rational sphere dimensions of the simple Lie groups";
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["group"] = r.tag;
            row["params"] = r.params;
            row["spheres"] = r.display();
            j["rows"].push_back(row);
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    if (f == TableFormat::Csv) {
        os << "group,spheres\n";
        for (const auto& r : rows) {
            std::string list = r.display();
            // CSV uses space-separated dimension lists.
            std::string flat;
            for (char ch : list)
                if (ch != ',') flat += ch;
            std::string squeezed;
            for (size_t i = 0; i < flat.size(); ++i) {
                if (flat[i] == ' ' && i + 1 < flat.size() && flat[i + 1] == ' ') continue;
                squeezed += flat[i];
            }
            os << csv_escape(r.tag) << "," << squeezed << "\n";
        }
        return os.str();
    }
    os << "table 1: dimensions of spheres in the rational homotopy type\n";
    os << std::left << std::setw(14) << "group" << "spheres\n";
    for (const auto& r : rows) os << std::left << std::setw(14) << r.tag << r.display() << "\n";
    return os.str();
}

std::string render_table23(int id, TableFormat f) {
    auto rows = table_rows(id);
    std::string title = id == 2
                            ? "classical irreducible spaces of dimension >= 16 outside the periodic list"
                            : "exceptional irreducible spaces outside the periodic list";
    if (f == TableFormat::Json) {
        nlohmann::ordered_json j;
        j["table"] = id;
        j["title"] = title;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["space"] = r.gh;
            if (id == 2) row["params"] = r.params;
            row["poincare"] = r.poly;
            row["reference"] = r.reference;
            row["obstruction"] = r.obstruction;
            j["rows"].push_back(row);
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    if (f == TableFormat::Csv) {
        if (id == 2) os << "space,params,poincare,reference,obstruction\n";
        else os << "space,poincare,reference,obstruction\n";
        for (const auto& r : rows) {
            os << csv_escape(r.gh) << ",";
            if (id == 2) os << csv_escape(r.params) << ",";
            os << csv_escape(r.poly) << "," << csv_escape(r.reference) << ","
               << csv_escape(r.obstruction) << "\n";
        }
        return os.str();
    }
    os << "table " << id << ": " << title << "\n";
    os << std::left << std::setw(26) << "space";
    if (id == 2) os << std::setw(12) << "params";
    os << std::setw(22) << "P(t)-1 if eq-rank" << std::setw(20) << "reference"
       << "obstruction\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(26) << r.gh;
        if (id == 2) os << std::setw(12) << r.params;
        os << std::setw(22) << r.poly << std::setw(20) << (r.reference.empty() ? "-" : r.reference)
           << r.obstruction << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_table(int id, TableFormat f) {
    if (id == 1) return render_table1(f);
    return render_table23(id, f);
}

// ---------------------------------------------------------------------------
// Verification against computation
// ---------------------------------------------------------------------------

std::vector<std::string> verify_tables() {
    std::vector<std::string> problems;
    auto complain = [&](const std::string& msg) { problems.push_back(msg); };

    for (int id : {2, 3}) {
        for (const auto& row : table_rows(id)) {
            IrreducibleSpace s = row.smallest_space();
            BettiVector b = betti_vector(s, 20);

            // The printed obstruction is a true inequality on the Betti data.
            Obstruction obs = parse_obstruction(row.obstruction);
            bool holds = false;
            switch (obs.kind) {
                case ObstructionKind::B4Bound: holds = b.at(4).lo >= 2; break;
                case ObstructionKind::IsoLess: holds = b.at(obs.i).hi < b.at(obs.j).lo; break;
                case ObstructionKind::IsoGreater: holds = b.at(obs.i).lo > b.at(obs.j).hi; break;
                case ObstructionKind::Positive: holds = b.at(obs.j).lo >= 1; break;
            }
            if (!holds) complain(row.gh + ": printed obstruction " + row.obstruction + " not verified");

            // Equal-rank rows reproduce the printed coefficients.
            PrintedPoly pp = parse_printed_poly(row.poly);
            if (!pp.terms.empty()) {
                if (s.source() != BettiSource::Computed) {
                    complain(row.gh + ": printed polynomial for a non-computed row");
                } else {
                    PoincarePolynomial p = space_polynomial(s);
                    for (const auto& term : pp.terms)
                        if (p.coeff(term.degree) != term.coeff)
                            complain(row.gh + ": coefficient of t^" + std::to_string(term.degree) +
                                     " is " + std::to_string(p.coeff(term.degree)) + ", printed " +
                                     std::to_string(term.coeff));
                    // When the printed terms reach the top degree the entry is
                    // the whole polynomial (e.g. G2/SO(4)); otherwise it is a
                    // leading-terms excerpt even without an explicit ellipsis.
                    if (!pp.elided && pp.terms.back().degree == s.dimension()) {
                        std::vector<int64_t> c(static_cast<size_t>(s.dimension()) + 1, 0);
                        c[0] = 1;
                        for (const auto& term : pp.terms)
                            c[static_cast<size_t>(term.degree)] = term.coeff;
                        if (!(p == PoincarePolynomial(std::move(c))))
                            complain(row.gh + ": P(t) is " + p.to_string() + ", printed " + row.poly);
                    }
                }
            }

            // The engine agrees the space fails at c = 16.
            PeriodicityReport rep = check_4periodic(b, 16);
            if (rep.verdict != Verdict::Fails)
                complain(row.gh + ": expected Fails at c=16, got " + verdict_name(rep.verdict));
        }
    }
    return problems;
}

}  // namespace symspace

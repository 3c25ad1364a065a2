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

#ifndef SYMSPACE_TABLES_HPP
#define SYMSPACE_TABLES_HPP

#include <string>
#include <vector>

#include "symspace/catalog.hpp"
#include "symspace/periodicity.hpp"

namespace symspace {

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table1Row {
    std::string tag;         // "Sp(n)", "E8", ...
    std::string params;      // "n>=1" or "-"
    std::string formula_id;  // "sp4k", ... empty for literal rows
    std::vector<int> literal;
    std::string display() const;  // "3, 7, ..., 4n-1" or the literal list
};

struct TableRow {
    int table = 2;
    std::string gh;
    std::string params;  // empty for table 3
    SpaceKind kind = SpaceKind::Sphere;
    int p0 = 0, q0 = 0;  // smallest admissible parameters (0 when fixed space)
    std::string poly;    // printed low-degree terms of P-1, or "-"
    std::string reference;
    std::string obstruction;

    IrreducibleSpace smallest_space() const;
};

std::vector<Table1Row> table1_rows();
std::vector<TableRow> table_rows(int table);  // table 2 or 3

/// One printed term of a P-1 column entry.
struct PolyTerm {
    int degree = 0;
    int64_t coeff = 0;
};
struct PrintedPoly {
    std::vector<PolyTerm> terms;
    bool elided = false;  // trailing "..."
};
PrintedPoly parse_printed_poly(const std::string& s);  // "-" gives empty terms

Obstruction parse_obstruction(const std::string& s);

enum class TableFormat { Text, Csv, Json };

std::string render_table(int id, TableFormat f);

/// Recompute every table row and cross-check the printed columns: equal-rank
/// rows must reproduce the listed coefficients (exactly when not elided), the
/// printed obstruction must be a true Betti inequality at the smallest
/// parameters, and the periodicity verdict at c = 16 must be Fails.
/// Returns human-readable problems; empty means verified.
std::vector<std::string> verify_tables();

}  // namespace symspace

#endif

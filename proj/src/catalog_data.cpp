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

namespace symspace {

// The catalog ships as an embedded structured text file so tests can diff it
// against the reference tables independently of the loader.
static const char* const kCatalogData = R"CATALOG(# symspace catalog data, schema v1
#
# Records are '|'-separated; '#' starts a comment line.
#
# group|<tag>|<param grammar>|<spheres>
#   <spheres> is a formula id evaluated at the parameter n:
#     sp4k      : 3, 7, ..., 4n-1              (Sp(n))
#     spin_odd  : 3, 7, ..., 4n-1              (Spin(2n+1))
#     spin_even : 3, 7, ..., 4n-5, 2n-1        (Spin(2n))
#     u2k       : 1, 3, ..., 2n-1              (U(n))
#     su2k      : 3, 5, ..., 2n-1              (SU(n))
#   or a literal ';'-separated dimension list for the exceptional groups.
#
# space|<kind>|<param grammar>|<G>|<H factors>|<witness rules>
#   <witness rules> is a ';'-separated list of rule ids, expanded by the
#   loader into cited Betti constraints:
#     b5_pos_n6     : b_5 >= 1 when n >= 6        [table2:SU(n)/SO(n)]
#     b5_pos_n4     : b_5 >= 1 when n >= 4        [table2:SU(2n)/Sp(n)]
#     b9_pos        : b_9 >= 1                    [table3 row for the space]
#     hp_low_deg    : b_i equals the HP pattern for i <= min(q,16),
#                     applies when p = 3 and q is odd          [low-degree]
#     b4_two_oddodd : b_4 >= 2 when 5 <= p <= q, p and q odd
#                     [table2:SO(p+q)/SO(p)xSO(q)]
#
# table2|<G/H>|<param note>|<kind>|<smallest params>|<poly>|<ref>|<obstruction>
# table3|<G/H>|<kind>|<poly>|<ref>|<obstruction>
#   <poly> lists the relevant low-degree terms of P-1 for equal-rank rows
#   ('...' marks an elided tail, '-' marks a cited row); <obstruction> is the
#   canonical obstruction string for the row at its smallest parameters.

group|Sp(n)|n>=1|sp4k
group|Spin(2n+1)|n>=1|spin_odd
group|Spin(2n)|n>=1|spin_even
group|U(n)|n>=1|u2k
group|SU(n)|n>=2|su2k
group|G2|-|3;11
group|F4|-|3;11;15;23
group|E6|-|3;9;11;15;17;23
group|E7|-|3;11;15;19;23;27;35
group|E8|-|3;15;23;27;35;39;47;59

space|Sphere|n>=2|Spin(n+1)|Spin(n)|
space|CP|q>=1|SU(q+1)|SU(q),U(1)|
space|HP|q>=1|Sp(q+1)|Sp(q),Sp(1)|
space|CaP2|-|F4|Spin(9)|
space|RealGr|1<=p<=q|Spin(p+q)|Spin(p),Spin(q)|hp_low_deg;b4_two_oddodd
space|ComplexGr|1<=p<=q|SU(p+q)|SU(p),SU(q),U(1)|
space|QuatGr|1<=p<=q|Sp(p+q)|Sp(p),Sp(q)|
space|CI|n>=2|Sp(n)|U(n)|
space|DIII|n>=2|Spin(2n)|U(n)|
space|AI|n>=2|SU(n)|SO(n)|b5_pos_n6
space|AII|n>=2|SU(2n)|Sp(n)|b5_pos_n4
space|EI|-|E6|Sp(4)|b9_pos
space|EII|-|E6|SU(6),SU(2)|
space|EIII|-|E6|Spin(10),U(1)|
space|EIV|-|E6|F4|b9_pos
space|EV|-|E7|SU(8)|
space|EVI|-|E7|Spin(12),SU(2)|
space|EVII|-|E7|E6,U(1)|
space|EVIII|-|E8|Spin(16)|
space|EIX|-|E8|E7,SU(2)|
space|FI|-|F4|Sp(3),SU(2)|
space|FII|-|F4|Spin(9)|
space|G|-|G2|Spin(3),Spin(3)|

table2|SU(n)/SO(n)|n>=6|AI|6|-|Borel53|b_5>0
table2|SU(2n)/Sp(n)|n>=4|AII|4|-|Borel53|b_5>0
table2|SO(p+q)/SO(p)xSO(q)|4<=p<=q|RealGr|4,4|-|Ramani-Sankaran97|1<b_4
table2|SU(p+q)/S(U(p)xU(q))|2<=p<=q|ComplexGr|2,2|2t^4+...||1<b_4
table2|Sp(n)/U(n)|n>=4|CI|4|t^2+t^4+2t^6+...||b_2<b_6
table2|Sp(p+q)/Sp(p)xSp(q)|2<=p<=q|QuatGr|2,2|t^4+2t^8+...||b_4<b_8
table2|SO(2n)/U(n)|n>=5|DIII|5|t^2+t^4+2t^6+...||b_2<b_6

table3|E6/Sp(4)|EI|-|Ishitoya77|0<b_9
table3|E6/F4|EIV|-|Araki-Shikata61|0<b_9
table3|E6/SU(6)xSU(2)|EII|t^4+t^6+2t^8||b_4<b_8
table3|E6/SO(10)xSO(2)|EIII|t^4+2t^8+...||b_4<b_8
table3|E7/SU(8)|EV|t^8+...||b_4<b_8
table3|E7/SO(12)xSU(2)|EVI|t^4+2t^8+...||b_4<b_8
table3|E7/E6xSO(2)|EVII|t^4+t^8+2t^12+...||b_8<b_12
table3|E8/SO(16)|EVIII|t^8+...||b_4<b_8
table3|E8/E7xSU(2)|EIX|t^4+t^8+2t^12+...||b_8<b_12
table3|F4/Sp(3)xSU(2)|FI|t^4+2t^8+...||b_4<b_8
table3|F4/Spin(9)|FII|t^8+...||b_4<b_8
table3|G2/SO(4)|G|t^4+t^8||b_8>b_12
)CATALOG";

std::string_view catalog_raw_data() { return kCatalogData; }

}  // namespace symspace

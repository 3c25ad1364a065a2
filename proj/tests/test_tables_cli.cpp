#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "symspace/expr.hpp"
#include "symspace/tables.hpp"

using namespace symspace;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    std::string cmd = std::string(SYMSPACE_CLI_PATH) + " " + args;
    if (out) {
        cmd += " > /tmp/symspace_cli_out.txt 2>/dev/null";
    } else {
        cmd += " > /dev/null 2>/dev/null";
    }
    int status = std::system(cmd.c_str());
    if (out) *out = slurp("/tmp/symspace_cli_out.txt");
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE("tables") {
    TEST_CASE("table rows parse from the embedded data") {
        auto t1 = table1_rows();
        REQUIRE(t1.size() == 10);
        CHECK(t1.front().tag == "Sp(n)");
        CHECK(t1.back().tag == "E8");
        CHECK(t1.back().literal == std::vector<int>{3, 15, 23, 27, 35, 39, 47, 59});

        auto t2 = table_rows(2);
        REQUIRE(t2.size() == 7);
        CHECK(t2[0].gh == "SU(n)/SO(n)");
        CHECK(t2[0].obstruction == "b_5>0");
        auto t3 = table_rows(3);
        REQUIRE(t3.size() == 12);
        CHECK(t3.back().gh == "G2/SO(4)");
        CHECK(t3.back().obstruction == "b_8>b_12");
    }

    TEST_CASE("printed polynomial and obstruction grammar") {
        auto pp = parse_printed_poly("t^2+t^4+2t^6+...");
        REQUIRE(pp.terms.size() == 3);
        CHECK(pp.terms[2].degree == 6);
        CHECK(pp.terms[2].coeff == 2);
        CHECK(pp.elided);
        CHECK_FALSE(parse_printed_poly("t^4+t^8").elided);
        CHECK(parse_printed_poly("-").terms.empty());

        CHECK(parse_obstruction("1<b_4").kind == ObstructionKind::B4Bound);
        auto o1 = parse_obstruction("b_2<b_6");
        CHECK(o1.kind == ObstructionKind::IsoLess);
        CHECK(o1.i == 2);
        CHECK(o1.j == 6);
        auto o2 = parse_obstruction("b_8>b_12");
        CHECK(o2.kind == ObstructionKind::IsoGreater);
        auto o3 = parse_obstruction("b_5>0");
        CHECK(o3.kind == ObstructionKind::Positive);
        CHECK(o3.j == 5);
        CHECK(parse_obstruction("0<b_9").j == 9);
    }

    TEST_CASE("data-file sphere formulas agree with the loader") {
        // Interpret each record's formula id independently and diff it
        // against group_spheres over the family's parameter range.
        auto interp = [](const std::string& id, int n) {
            std::vector<int> d;
            if (id == "sp4k" || id == "spin_odd")
                for (int k = 1; k <= n; ++k) d.push_back(4 * k - 1);
            else if (id == "spin_even") {
                for (int k = 1; k <= n - 1; ++k) d.push_back(4 * k - 1);
                d.push_back(2 * n - 1);
            } else if (id == "u2k")
                for (int k = 1; k <= n; ++k) d.push_back(2 * k - 1);
            else if (id == "su2k")
                for (int k = 2; k <= n; ++k) d.push_back(2 * k - 1);
            std::sort(d.begin(), d.end());
            return d;
        };
        for (const auto& row : table1_rows()) {
            if (row.formula_id.empty()) {
                GroupFamily fam;
                if (row.tag == "G2") fam = GroupFamily::G2;
                else if (row.tag == "F4") fam = GroupFamily::F4;
                else if (row.tag == "E6") fam = GroupFamily::E6;
                else if (row.tag == "E7") fam = GroupFamily::E7;
                else fam = GroupFamily::E8;
                auto lit = row.literal;
                std::sort(lit.begin(), lit.end());
                CHECK(group_spheres(GroupDescriptor::exceptional(fam)).dims == lit);
                continue;
            }
            for (int n = 2; n <= 8; ++n) {
                GroupDescriptor g;
                if (row.tag == "Sp(n)") g = GroupDescriptor::Sp(n);
                else if (row.tag == "Spin(2n+1)") g = GroupDescriptor::Spin(2 * n + 1);
                else if (row.tag == "Spin(2n)") g = GroupDescriptor::Spin(2 * n);
                else if (row.tag == "U(n)") g = GroupDescriptor::U(n);
                else g = GroupDescriptor::SU(n);
                CHECK_MESSAGE(group_spheres(g).dims == interp(row.formula_id, n), row.tag, " n=", n);
            }
        }
    }

    TEST_CASE("every printed table row verifies against computation") {
        auto problems = verify_tables();
        for (const auto& p : problems) MESSAGE(p);
        CHECK(problems.empty());
    }

    TEST_CASE("rendered tables match the golden files") {
        for (int id : {1, 2, 3}) {
            std::string got = render_table(id, TableFormat::Text);
            std::string want = slurp(std::string(SYMSPACE_GOLDEN_DIR) + "/table" +
                                     std::to_string(id) + ".txt");
            CHECK_MESSAGE(got == want, "table ", id);
            std::string csv = render_table(id, TableFormat::Csv);
            CHECK_MESSAGE(csv == slurp(std::string(SYMSPACE_GOLDEN_DIR) + "/table" +
                                       std::to_string(id) + ".csv"),
                          "table ", id, " csv");
        }
        CHECK(render_table(1, TableFormat::Csv).find("E8,3 15 23 27 35 39 47 59\n") !=
              std::string::npos);
    }

    TEST_CASE("json output round-trips byte-identically") {
        for (int id : {1, 2, 3}) {
            std::string s = render_table(id, TableFormat::Json);
            auto parsed = nlohmann::ordered_json::parse(s);
            CHECK(parsed.dump() + "\n" == s);
        }
    }
}

TEST_SUITE("expr") {
    TEST_CASE("products and sums parse") {
        auto e = parse_space_expression("group:E8 x HP^3");
        REQUIRE(e.summands.size() == 1);
        REQUIRE(e.summands[0].factors.size() == 2);
        CHECK(e.summands[0].factors[0].kind() == SpaceKind::LieGroup);
        CHECK(e.summands[0].dimension() == 260);
        CHECK(e.name() == "group:E8 x HP^3");

        auto cs = parse_space_expression("CaP2 # CaP2");
        CHECK(cs.is_connected_sum());
        CHECK(cs.summands.size() == 2);

        auto g = parse_space_expression("GrR(3,8)");
        CHECK(g.summands[0].factors[0].dimension() == 24);

        for (const char* txt : {"S^17 x S^20", "AI(6)", "AII(4)", "CI(4)", "DIII(5)", "EVII",
                                "FII", "G", "CP^8 x S^2", "group:Spin(11)", "group:Sp(3)"})
            CHECK_NOTHROW(parse_space_expression(txt));
    }

    TEST_CASE("factor names round-trip through the parser") {
        for (const auto& s : enumerate_spaces(64, 8)) {
            auto e = parse_space_expression(s.name());
            REQUIRE(e.summands.size() == 1);
            REQUIRE(e.summands[0].factors.size() == 1);
            CHECK(e.summands[0].factors[0] == s);
        }
    }

    TEST_CASE("parse errors") {
        CHECK_THROWS_AS(parse_space_expression(""), ParseError);
        CHECK_THROWS_AS(parse_space_expression("S^17 x"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("x S^17"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("S^17 S^20"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("Q^5"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("GrR(4)"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("GrR(0,4)"), ParseError);
        CHECK_THROWS_AS(parse_space_expression("S^2 # S^3"), ParseError);  // dimension mismatch
        CHECK_THROWS_AS(parse_space_expression("group:E9"), ParseError);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("verdict exit codes") {
        CHECK(run_cli("check \"S^17 x S^20\" --c 16") == 0);
        CHECK(run_cli("check \"group:E8 x HP^3\" --c 15") == 0);
        CHECK(run_cli("check \"group:E8 x HP^3\" --c 16") == 1);
        CHECK(run_cli("check \"GrR(3,13)\" --c 16") == 2);   // undetermined
        CHECK(run_cli("check \"S^17 x\" --c 16") == 64);     // parse error
        CHECK(run_cli("check \"AI(4) # AI(4)\" --c 10") == 65);  // no Betti data for summands
        CHECK(run_cli("nonsense") == 64);
        CHECK(run_cli("tables 2 --format bogus") == 64);
    }

    TEST_CASE("connected sums through the expression grammar") {
        std::string out;
        CHECK(run_cli("check \"CaP2 # CaP2\" --c 10", &out) == 1);
        CHECK(out.find("Fails") != std::string::npos);
        CHECK(out.find("b_4<b_8") != std::string::npos);
    }

    TEST_CASE("json check output") {
        std::string out;
        CHECK(run_cli("check \"HP^4\" --c 16 --format json", &out) == 0);
        auto j = nlohmann::ordered_json::parse(out);
        CHECK(j["verdict"] == "Periodic");
        CHECK(j["c"] == 16);
        CHECK(j["obstruction"].is_null());
        CHECK(j.dump() + "\n" == out);  // canonical key order round-trips

        CHECK(run_cli("classify --c 16 --max-dim 32 --max-param 6 --format json", &out) == 0);
        CHECK(nlohmann::ordered_json::parse(out).dump() + "\n" == out);
    }

    TEST_CASE("classify summary") {
        std::string out;
        CHECK(run_cli("classify --c 16 --max-dim 64 --max-param 12 --format json", &out) == 0);
        auto j = nlohmann::ordered_json::parse(out);
        for (const auto& k : j["periodic_kinds"]) {
            std::string kind = k.get<std::string>();
            bool ok = kind == "Sphere" || kind == "CP" || kind == "HP" || kind == "GrR(2,*)" ||
                      kind == "GrR(3,*)";
            CHECK_MESSAGE(ok, kind);
        }
    }

    TEST_CASE("codes subcommands") {
        std::string out;
        CHECK(run_cli("codes griesmer --r 4 --w 8", &out) == 0);
        CHECK(out == "15\n");
        CHECK(run_cli("codes alg-lemma --n-max 64", &out) == 0);
        CHECK(out.find("0 violations") != std::string::npos);

        std::ofstream f("/tmp/symspace_simplex.txt");
        f << "1010101\n0110011\n0001111\n";
        f.close();
        // codim 8 exceeds (14-2)/2, so the bound flag is down: exit 1
        CHECK(run_cli("codes sigma --matrix /tmp/symspace_simplex.txt --n 14 --c 2", &out) == 1);
        CHECK(out.find("weight: 4") != std::string::npos);
        CHECK(out.find("within_bound: false") != std::string::npos);

        std::ofstream bad("/tmp/symspace_bad.txt");
        bad << "10\n10\n";
        bad.close();
        CHECK(run_cli("codes sigma --matrix /tmp/symspace_bad.txt --n 4 --c 2") == 64);
    }

    TEST_CASE("tables through the binary match the goldens") {
        std::string out;
        CHECK(run_cli("tables 1 --format csv", &out) == 0);
        CHECK(out == slurp(std::string(SYMSPACE_GOLDEN_DIR) + "/table1.csv"));
        CHECK(run_cli("tables 3", &out) == 0);
        CHECK(out == slurp(std::string(SYMSPACE_GOLDEN_DIR) + "/table3.txt"));
        CHECK(run_cli("tables 4") == 64);
    }

    TEST_CASE("thresholds") {
        std::string out;
        CHECK(run_cli("thresholds --n 1024 --c 16 --rank 27 --format json", &out) == 0);
        auto j = nlohmann::ordered_json::parse(out);
        CHECK(j["meets_2log2n_plus_7"] == true);
        CHECK(run_cli("thresholds --n 16 --c 16 --rank 8 --format json", &out) == 0);
        j = nlohmann::ordered_json::parse(out);
        CHECK(j["meets_2log2n_plus_c_half_minus_1"] == false);
        CHECK(j["vacuous"] == true);
    }
}

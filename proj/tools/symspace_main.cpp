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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symspace/betti.hpp"
#include "symspace/catalog.hpp"
#include "symspace/codes.hpp"
#include "symspace/expr.hpp"
#include "symspace/periodicity.hpp"
#include "symspace/symrank.hpp"
#include "symspace/tables.hpp"

namespace {

using nlohmann::ordered_json;
using namespace symspace;

constexpr int kExitParse = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

TableFormat parse_format(const std::string& f) {
    if (f == "text") return TableFormat::Text;
    if (f == "csv") return TableFormat::Csv;
    if (f == "json") return TableFormat::Json;
    throw ParseError("unknown format: " + f);
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Periodic: return 0;
        case Verdict::Fails: return 1;
        case Verdict::Undetermined: return 2;
    }
    return kExitInternal;
}

int run_check(const std::string& expr_text, int c, const std::string& format) {
    SpaceExpression expr = parse_space_expression(expr_text);
    PeriodicityReport rep;
    if (expr.is_connected_sum()) {
        int dim = expr.summands.front().dimension();
        BettiVector acc;
        bool first = true;
        for (const auto& s : expr.summands) {
            BettiVector v = product_betti(s.factors, dim);
            if (!v.fully_exact())
                throw UnknownBetti(0, "connected sums need complete Betti data");
            acc = first ? v : connected_sum_betti(acc, v, dim);
            first = false;
        }
        rep = check_4periodic(acc, c);
    } else {
        rep = check_product(expr.summands.front().factors, c);
    }

    if (format == "json") {
        ordered_json j;
        j["expression"] = expr.name();
        j["c"] = c;
        j["verdict"] = verdict_name(rep.verdict);
        j["obstruction"] = rep.obstruction ? ordered_json(rep.obstruction->str()) : ordered_json(nullptr);
        j["branch"] = !rep.branch ? ordered_json(nullptr)
                      : *rep.branch == Branch::Connected ? ordered_json("connected")
                                                         : ordered_json("periodic");
        j["factor"] = rep.factor ? ordered_json(*rep.factor) : ordered_json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "space: " << expr.name() << "\n";
        std::cout << "c: " << c << "\n";
        std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
        if (rep.obstruction) {
            std::cout << "obstruction: " << rep.obstruction->str();
            if (rep.factor) std::cout << "  [" << *rep.factor << "]";
            std::cout << "\n";
        }
    }
    return verdict_exit(rep.verdict);
}

int run_classify(int c, int max_dim, int max_param, const std::string& format) {
    auto results = classify_irreducibles(c, max_dim, max_param);
    std::vector<std::string> periodic_kinds;
    auto note_kind = [&](const IrreducibleSpace& s) {
        std::string k = s.kind() == SpaceKind::RealGr
                            ? "GrR(" + std::to_string(s.p()) + ",*)"
                            : space_kind_name(s.kind());
        if (std::find(periodic_kinds.begin(), periodic_kinds.end(), k) == periodic_kinds.end())
            periodic_kinds.push_back(k);
    };
    for (const auto& [s, rep] : results)
        if (rep.verdict == Verdict::Periodic) note_kind(s);

    if (format == "json") {
        ordered_json j;
        j["c"] = c;
        j["max_dim"] = max_dim;
        j["max_param"] = max_param;
        j["spaces"] = ordered_json::array();
        for (const auto& [s, rep] : results) {
            ordered_json row;
            row["space"] = s.name();
            row["dim"] = s.dimension();
            row["verdict"] = verdict_name(rep.verdict);
            row["obstruction"] =
                rep.obstruction ? ordered_json(rep.obstruction->str()) : ordered_json(nullptr);
            j["spaces"].push_back(row);
        }
        j["periodic_kinds"] = periodic_kinds;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::ostream& os = std::cout;
    if (format == "csv") {
        auto esc = [](const std::string& s) {
            if (s.find(',') == std::string::npos) return s;
            return "\"" + s + "\"";
        };
        os << "space,dim,verdict,obstruction\n";
        for (const auto& [s, rep] : results)
            os << esc(s.name()) << "," << s.dimension() << "," << verdict_name(rep.verdict) << ","
               << (rep.obstruction ? rep.obstruction->str() : "") << "\n";
        return 0;
    }
    for (const auto& [s, rep] : results) {
        os << s.name();
        for (size_t pad = s.name().size(); pad < 20; ++pad) os << ' ';
        os << " dim " << s.dimension() << "\t" << verdict_name(rep.verdict);
        if (rep.obstruction) os << "  " << rep.obstruction->str();
        os << "\n";
    }
    os << "periodic kinds:";
    for (const auto& k : periodic_kinds) os << " " << k;
    os << "\n";
    return 0;
}

int run_codes_verify(int r_max, int m_max, const std::string& format) {
    GriesmerVerifyResult res = verify_griesmer_exhaustive(r_max, m_max);
    if (format == "json") {
        ordered_json j;
        j["r_max"] = r_max;
        j["m_max"] = m_max;
        j["codes_checked"] = res.codes_checked;
        j["violations"] = res.violations;
        j["equalities"] = ordered_json::array();
        for (const auto& e : res.equalities) {
            ordered_json row;
            row["m"] = e.m;
            row["r"] = e.r;
            row["w"] = e.min_weight;
            row["codes"] = e.codes;
            row["uniform_codes"] = e.uniform_codes;
            j["equalities"].push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "codes checked: " << res.codes_checked << "\n";
        std::cout << "violations: " << res.violations << "\n";
        std::cout << (res.ok() ? "bound holds" : "BOUND VIOLATED") << "\n";
        for (const auto& e : res.equalities) {
            std::cout << "equality witnesses [" << e.m << "," << e.r << "," << e.min_weight
                      << "]: " << e.codes;
            if (e.uniform_codes)
                std::cout << " (" << e.uniform_codes << " with all nonzero weights " << e.min_weight
                          << (e.r == 3 && e.m == 7 && e.min_weight == 4 ? "; simplex" : "") << ")";
            std::cout << "\n";
        }
    }
    return res.ok() ? 0 : 1;
}

void print_certificate(const char* label, const InvolutionCertificate& cert, bool tau_flags) {
    std::cout << label << ": element " << cert.element.to_string() << "\n";
    std::cout << "image: " << cert.image.to_string() << "\n";
    std::cout << "weight: " << cert.weight << "\n";
    std::cout << "codim: " << cert.codim << "\n";
    std::cout << "even_weight: " << (cert.even_weight ? "true" : "false") << "\n";
    std::cout << "within_bound: " << (cert.within_bound ? "true" : "false") << "\n";
    if (tau_flags) {
        std::cout << "escapes_sigma: " << (cert.escapes_sigma ? "true" : "false") << "\n";
        std::cout << "even_weight_outside_sigma: "
                  << (cert.even_weight_outside_sigma ? "true" : "false") << "\n";
    }
}

int run_codes_involution(bool want_tau, const std::string& matrix_file, int trials, uint64_t seed,
                         int r, int m, int n, int c) {
    if (!matrix_file.empty()) {
        std::ifstream in(matrix_file);
        if (!in) throw CodesError("cannot open matrix file: " + matrix_file);
        LinearEmbedding e = read_generator_matrix(in);
        InvolutionCertificate sigma = find_sigma(e, n, c);
        if (!want_tau) {
            print_certificate("sigma", sigma, false);
            return sigma.within_bound ? 0 : 1;
        }
        InvolutionCertificate tau = find_tau(e, sigma, n, c);
        print_certificate("sigma", sigma, false);
        print_certificate("tau", tau, true);
        return tau.within_bound ? 0 : 1;
    }
    TrialSummary s = want_tau ? tau_trials(trials, seed, r, m, n, c)
                              : sigma_trials(trials, seed, r, m, n, c);
    std::cout << (want_tau ? "tau" : "sigma") << " trials: " << s.trials << "\n";
    std::cout << "seed: " << s.seed << "\n";
    std::cout << "failures: " << s.failures << "\n";
    return s.ok() ? 0 : 1;
}

int run_thresholds(int64_t n, int64_t c, int64_t rank, const std::string& format) {
    HypothesisReport r = hypothesis_report({n, c, rank});
    if (format == "json") {
        ordered_json j;
        j["n"] = r.n;
        j["c"] = r.c;
        j["rank"] = r.rank;
        j["f_c"] = r.fc_value;
        j["meets_2log2n_plus_c_half_minus_1"] = r.bc_met;
        j["meets_2log2n_plus_7"] = r.log7_met;
        j["berger_reduced_rank"] = r.berger_reduced;
        j["berger_meets_f_c"] = r.berger_meets_fc;
        j["sigma_threshold_met"] = r.sigma_threshold_met;
        j["tau_threshold_met"] = r.tau_threshold_met;
        j["max_symrank"] = r.max_rank;
        j["vacuous"] = r.any_vacuous;
        j["chern_regime"] = r.chern_regime;
        j["wilking_linear_bound"] = r.wilking_linear;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "n=" << r.n << " c=" << r.c << " rank=" << r.rank << "\n";
    std::cout << "f_c(n) = " << r.fc_value << "\n";
    std::cout << "rank >= 2log2(n)+c/2-1: " << (r.bc_met ? "met" : "not met") << "\n";
    std::cout << "rank >= 2log2(n)+7: " << (r.log7_met ? "met" : "not met") << "\n";
    std::cout << "Berger-reduced rank: " << r.berger_reduced
              << (r.berger_meets_fc ? " (meets f_c)" : " (below f_c)") << "\n";
    std::cout << "first involution threshold (f_c): "
              << (r.sigma_threshold_met ? "met" : "not met") << "\n";
    std::cout << "second involution threshold: " << (r.tau_threshold_met ? "met" : "not met")
              << "\n";
    std::cout << "max symmetry rank: " << r.max_rank << (r.any_vacuous ? " (vacuous regime)" : "")
              << "\n";
    if (r.chern_regime) std::cout << "cyclic-fundamental-group regime: yes\n";
    std::cout << "linear comparison bound n/6+1: " << r.wilking_linear << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti and periodicity toolkit for compact symmetric spaces"};
    app.require_subcommand(1);

    // tables
    auto* tables_cmd = app.add_subcommand("tables", "render a reference table");
    int table_id = 1;
    std::string format = "text";
    tables_cmd->add_option("id", table_id, "table id (1, 2 or 3)")->required();
    tables_cmd->add_option("--format", format, "text|csv|json");

    // check
    auto* check_cmd = app.add_subcommand("check", "4-periodicity check of a space expression");
    std::string expr_text;
    int check_c = 16;
    std::string check_format = "text";
    check_cmd->add_option("expr", expr_text, "space expression, e.g. \"group:E8 x HP^3\"")->required();
    check_cmd->add_option("--c", check_c, "degree bound (default 16)");
    check_cmd->add_option("--format", check_format, "text|json");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "sweep the catalog of irreducible spaces");
    int cls_c = 16, cls_dim = 64, cls_param = 20;
    std::string cls_format = "text";
    classify_cmd->add_option("--c", cls_c, "degree bound (default 16)");
    classify_cmd->add_option("--max-dim", cls_dim, "dimension bound (default 64)");
    classify_cmd->add_option("--max-param", cls_param, "family parameter bound (default 20)");
    classify_cmd->add_option("--format", cls_format, "text|csv|json");

    // codes
    auto* codes_cmd = app.add_subcommand("codes", "GF(2) code machinery");
    codes_cmd->require_subcommand(1);

    auto* gr_cmd = codes_cmd->add_subcommand("griesmer", "evaluate the length bound");
    int gr_r = 1, gr_w = 1;
    gr_cmd->add_option("--r", gr_r, "code dimension")->required();
    gr_cmd->add_option("--w", gr_w, "minimum weight")->required();

    auto* alg_cmd = codes_cmd->add_subcommand("alg-lemma", "ceiling-sum inequality sweep");
    int alg_nmax = 256;
    alg_cmd->add_option("--n-max", alg_nmax, "sweep bound (default 256)");

    auto* verify_cmd = codes_cmd->add_subcommand("verify", "exhaustive bound verification");
    int v_rmax = 3, v_mmax = 7;
    std::string v_format = "text";
    verify_cmd->add_option("--r-max", v_rmax, "max code dimension (<= 4)");
    verify_cmd->add_option("--m-max", v_mmax, "max length (<= 12)");
    verify_cmd->add_option("--format", v_format, "text|json");

    std::string matrix_file;
    int inv_trials = 1000, inv_r = 12, inv_m = 32, inv_n = 64, inv_c = 2;
    uint64_t inv_seed = 24682;
    auto* sigma_cmd = codes_cmd->add_subcommand("sigma", "first involution search");
    auto* tau_cmd = codes_cmd->add_subcommand("tau", "second involution search");
    for (auto* cmd : {sigma_cmd, tau_cmd}) {
        cmd->add_option("--matrix", matrix_file, "generator matrix file (rows of 0/1)");
        cmd->add_option("--trials", inv_trials, "randomized trials when no matrix is given");
        cmd->add_option("--seed", inv_seed, "seed for randomized trials");
        cmd->add_option("--r", inv_r, "code dimension for random embeddings");
        cmd->add_option("--m", inv_m, "ambient length for random embeddings");
        cmd->add_option("--n", inv_n, "manifold dimension")->required();
        cmd->add_option("--c", inv_c, "degree bound");
    }

    // thresholds
    auto* thr_cmd = app.add_subcommand("thresholds", "symmetry-rank threshold report");
    int64_t thr_n = 0, thr_c = 2, thr_rank = 0;
    std::string thr_format = "text";
    thr_cmd->add_option("--n", thr_n, "manifold dimension")->required();
    thr_cmd->add_option("--c", thr_c, "degree bound (default 2)");
    thr_cmd->add_option("--rank", thr_rank, "symmetry rank")->required();
    thr_cmd->add_option("--format", thr_format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (tables_cmd->parsed()) {
            if (table_id < 1 || table_id > 3) throw ParseError("table id must be 1, 2 or 3");
            std::cout << render_table(table_id, parse_format(format));
            return 0;
        }
        if (check_cmd->parsed()) return run_check(expr_text, check_c, check_format);
        if (classify_cmd->parsed()) return run_classify(cls_c, cls_dim, cls_param, cls_format);
        if (codes_cmd->parsed()) {
            if (gr_cmd->parsed()) {
                std::cout << griesmer_min_length(gr_r, gr_w) << "\n";
                return 0;
            }
            if (alg_cmd->parsed()) {
                AlgLemmaSweep s = alg_lemma_sweep(alg_nmax);
                std::cout << s.violations << " violations / " << s.cases << " cases\n";
                return s.ok() ? 0 : 1;
            }
            if (verify_cmd->parsed()) return run_codes_verify(v_rmax, v_mmax, v_format);
            if (sigma_cmd->parsed())
                return run_codes_involution(false, matrix_file, inv_trials, inv_seed, inv_r, inv_m,
                                            inv_n, inv_c);
            if (tau_cmd->parsed())
                return run_codes_involution(true, matrix_file, inv_trials, inv_seed, inv_r, inv_m,
                                            inv_n, inv_c);
        }
        if (thr_cmd->parsed()) return run_thresholds(thr_n, thr_c, thr_rank, thr_format);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CodesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;  // malformed matrix and friends
    } catch (const UnknownBetti& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const BettiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

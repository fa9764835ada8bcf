#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "echelons/acceptance.hpp"
#include "echelons/gabrielov.hpp"
#include "echelons/json_io.hpp"

namespace {

using namespace echelons;
namespace gab = gabrielov;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

int default_max_rounds() {
    if (const char* env = std::getenv("ECHELON_MAX_ROUNDS")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw schema_error("ECHELON_MAX_ROUNDS is not an integer");
        }
    }
    return 10000;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw schema_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

Exponent parse_exponent(const std::string& s, int nvars) {
    Exponent e;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            e.push_back(std::stoi(item));
        } catch (...) {
            throw schema_error("malformed exponent component: " + item);
        }
        if (e.back() < 0) throw schema_error("negative exponent component");
    }
    if (static_cast<int>(e.size()) != nvars)
        throw schema_error("exponent needs " + std::to_string(nvars) + " components");
    return e;
}

const std::vector<std::string> kXyz = {"x", "y", "z"};

void print_series_table(const Series& s, const std::vector<std::string>& vars) {
    if (s.is_zero()) {
        std::cout << "0  (prec " << s.prec() << ")\n";
        return;
    }
    for (auto& [e, c] : s.terms()) {
        std::cout << "  " << c.str();
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (e[v] == 0) continue;
            std::cout << "*" << vars[v];
            if (e[v] > 1) std::cout << "^" << e[v];
        }
        std::cout << "\n";
    }
    std::cout << "  (prec " << s.prec() << ", " << s.size() << " terms)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"echelons of power series: division, standard bases, and the "
                 "Gabrielov counterexample"};
    app.require_subcommand(1);

    // divide
    auto* divide = app.add_subcommand("divide", "echelon power series division");
    std::string div_echelon, div_input, div_out;
    divide->add_option("--echelon", div_echelon, "echelon JSON file")->required();
    divide->add_option("--input", div_input, "series JSON file")->required();
    divide->add_option("--out", div_out, "output JSON file (default: stdout)");

    // stdbasis
    auto* stdb = app.add_subcommand("stdbasis", "standard-basis enlargement");
    std::string sb_echelon, sb_target, sb_trace;
    std::optional<int> sb_cap;
    bool sb_reduce = false;
    std::optional<int> sb_rounds;
    stdb->add_option("--echelon", sb_echelon)->required();
    stdb->add_option("--target-monomial", sb_target, "comma-separated exponent");
    stdb->add_option("--degree-cap", sb_cap);
    stdb->add_flag("--reduce", sb_reduce, "divide S-combinations before insertion");
    stdb->add_option("--max-rounds", sb_rounds);
    stdb->add_option("--trace", sb_trace, "write the full trace JSON here");

    // member
    auto* member = app.add_subcommand("member", "degree-bounded membership");
    std::string mem_echelon, mem_input;
    int mem_degree = 0;
    bool mem_oracle = false;
    std::optional<int> mem_rounds;
    member->add_option("--echelon", mem_echelon)->required();
    member->add_option("--input", mem_input)->required();
    member->add_option("--degree", mem_degree)->required();
    member->add_flag("--oracle", mem_oracle, "use the linear-algebra oracle");
    member->add_option("--max-rounds", mem_rounds);

    // relations
    auto* relations = app.add_subcommand("relations", "truncated relation kernel census");
    std::string rel_echelon;
    int rel_degree = 0;
    relations->add_option("--echelon", rel_echelon)->required();
    relations->add_option("--degree", rel_degree)->required();

    // gabrielov
    auto* gabc = app.add_subcommand("gabrielov", "the Gabrielov counterexample");
    gabc->require_subcommand(1);

    auto* gk = gabc->add_subcommand("gk", "the series g_k");
    int gk_k = 2, gk_prec = 14;
    bool gk_closed = false, gk_algorithmic = false;
    gk->add_option("--k", gk_k)->required();
    gk->add_option("--prec", gk_prec);
    gk->add_flag("--closed", gk_closed);
    gk->add_flag("--algorithmic", gk_algorithmic);

    auto* qtable = gabc->add_subcommand("qtable", "leading coefficients q(k,k)");
    int qt_kmax = 8;
    qtable->add_option("--kmax", qt_kmax);

    auto* abccmd = gabc->add_subcommand("abc", "presentation coefficients a_k, b_k, c_k");
    int abc_k = 8, abc_prec = 20;
    abccmd->add_option("--k", abc_k)->required();
    abccmd->add_option("--prec", abc_prec);

    auto* ecmd = gabc->add_subcommand("e", "the convergent combination e");
    int e_kmax = 8, e_prec = 16;
    bool e_original_flag = false;
    ecmd->add_option("--kmax", e_kmax);
    ecmd->add_option("--prec", e_prec);
    ecmd->add_flag("--original", e_original_flag, "the double-sum form instead");

    auto* witness = gabc->add_subcommand("witness", "divergence/convergence report");
    int w_kmax = 10, w_prec = 24;
    std::string w_out;
    witness->add_option("--kmax", w_kmax);
    witness->add_option("--prec", w_prec);
    witness->add_option("--out", w_out, "JSON output file (default: stdout table + JSON)");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        int max_rounds = default_max_rounds();

        if (divide->parsed()) {
            NamedEchelon ne = load_echelon_file(div_echelon);
            NamedSeries f = load_series_file(div_input);
            if (f.vars != ne.vars)
                throw schema_error("input variables differ from echelon variables");
            DivisionResult r = echelon_divide(f.series, ne.presentation);
            emit(division_result_to_json(r, ne.vars), div_out);
            return kExitOk;
        }

        if (stdb->parsed()) {
            NamedEchelon ne = load_echelon_file(sb_echelon);
            EnlargeTarget target;
            if (!sb_target.empty())
                target.monomial = parse_exponent(sb_target, ne.presentation.nvars);
            target.degree_cap = sb_cap;
            if (!target.monomial && !target.degree_cap)
                throw schema_error("need --target-monomial or --degree-cap");
            int rounds = sb_rounds.value_or(max_rounds);
            EnlargementState st =
                sb_reduce ? enlarge_reduced(ne.presentation, target, rounds)
                          : enlarge(ne.presentation, target, rounds);
            json out = enlargement_to_json(st, ne.vars);
            if (!sb_trace.empty()) {
                std::ofstream tf(sb_trace);
                if (!tf) throw schema_error("cannot write " + sb_trace);
                tf << out["trace"].dump(2) << "\n";
            }
            out.erase("trace");
            emit(out, "");
            return st.status == EnlargeStatus::MaxRounds ? kExitIndeterminate : kExitOk;
        }

        if (member->parsed()) {
            NamedEchelon ne = load_echelon_file(mem_echelon);
            NamedSeries f = load_series_file(mem_input);
            if (f.vars != ne.vars)
                throw schema_error("input variables differ from echelon variables");
            if (mem_oracle) {
                OracleSolution sol = oracle_membership(f.series, ne.presentation, mem_degree);
                json out = {{"member", sol.feasible}, {"degree", mem_degree}};
                if (sol.feasible) {
                    json q = json::array();
                    for (auto& s : sol.quotients) q.push_back(series_to_json(s, ne.vars));
                    out["quotients"] = q;
                }
                emit(out, "");
                std::cout << (sol.feasible ? "true" : "false") << "\n";
                return kExitOk;
            }
            auto mem = membership_mod_degree(f.series, ne.presentation, mem_degree,
                                             mem_rounds.value_or(max_rounds));
            json out = {{"degree", mem_degree},
                        {"witness", division_result_to_json(mem.witness, ne.vars)}};
            if (mem.verdict == MembershipVerdict::Indeterminate) {
                out["member"] = nullptr;
                emit(out, "");
                std::cout << "indeterminate\n";
                return kExitIndeterminate;
            }
            bool is_member = mem.verdict == MembershipVerdict::Member;
            out["member"] = is_member;
            emit(out, "");
            std::cout << (is_member ? "true" : "false") << "\n";
            return kExitOk;
        }

        if (relations->parsed()) {
            NamedEchelon ne = load_echelon_file(rel_echelon);
            auto rep = oracle_relation_order(ne.presentation, rel_degree);
            emit(relation_report_to_json(rep), "");
            return kExitOk;
        }

        if (gabc->parsed()) {
            if (gk->parsed()) {
                if (gk_closed && gk_algorithmic)
                    throw schema_error("--closed and --algorithmic are exclusive");
                Series s = gk_algorithmic ? gab::g_algorithmic(gk_k, gk_prec)
                                          : gab::g_closed(gk_k, gk_prec);
                emit(series_to_json(s, kXyz), "");
                return kExitOk;
            }
            if (qtable->parsed()) {
                std::cout << "k\tq(k,k)\tr_k = 1/q(k,k)\n";
                for (int k = 1; k <= qt_kmax; ++k)
                    std::cout << k << "\t" << gab::q(k, k).str() << "\t"
                              << gab::q(k, k).inv().str() << "\n";
                return kExitOk;
            }
            if (abccmd->parsed()) {
                auto t = gab::abc(abc_k, abc_prec);
                json out = {{"k", abc_k},
                            {"a", series_to_json(t.a, kXyz)},
                            {"b", series_to_json(t.b, kXyz)},
                            {"c", series_to_json(t.c, kXyz)}};
                emit(out, "");
                return kExitOk;
            }
            if (ecmd->parsed()) {
                Series s = e_original_flag ? gab::e_original(e_prec)
                                           : gab::e_combination(e_kmax, e_prec);
                emit(series_to_json(s, kXyz), "");
                return kExitOk;
            }
            if (witness->parsed()) {
                auto rep = gab::divergence_report(w_kmax, w_prec);
                json rows = json::array();
                std::cout << "k\tr_k\t|a: x^2 y^(k-2)|\t|b: y^(k-1)|\t|c: x y^(k-2)|\t"
                             "r_(k+1)/r_k\t4(2k+1)(2k-1)\n";
                for (auto& row : rep.rows) {
                    std::cout << row.k << "\t" << row.r.str() << "\t"
                              << row.a_ray_coeff.abs().str() << "\t"
                              << row.b_ray_coeff.abs().str() << "\t"
                              << row.c_ray_coeff.abs().str() << "\t" << row.ratio.str()
                              << "\t" << row.ratio_formula.str() << "\n";
                    rows.push_back({{"k", row.k},
                                    {"r", row.r.str()},
                                    {"a_ray", row.a_ray_coeff.str()},
                                    {"b_ray", row.b_ray_coeff.str()},
                                    {"c_ray", row.c_ray_coeff.str()},
                                    {"ratio", row.ratio.str()},
                                    {"ratio_formula", row.ratio_formula.str()}});
                }
                json out = {{"rows", rows}, {"super_geometric", rep.super_geometric}};
                std::cout << "verdict: coefficient growth along the rays is "
                          << (rep.super_geometric ? "super-geometric" : "NOT super-geometric")
                          << "\n";
                if (!w_out.empty()) emit(out, w_out);
                return kExitOk;
            }
        }

        if (verify->parsed()) {
            int failures = run_acceptance(std::cout);
            return failures == 0 ? kExitOk : kExitDomain;
        }
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

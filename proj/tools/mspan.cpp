// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
//
// mspan: batch frontend for the multiobjective spanner toolkit.
// Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "mspan/verifiers.hpp"

namespace {

using mspan::io::Json;

struct Common {
    std::string output = "-";
    int jobs = 0;
    int budget = mspan::kDefaultBudget;

    [[nodiscard]] mspan::SolveOptions solve() const { return {budget, jobs}; }
};

void add_output(CLI::App* cmd, Common& common) {
    cmd->add_option("-o,--output", common.output, "Output file, '-' for stdout");
}

void add_solver(CLI::App* cmd, Common& common) {
    cmd->add_option("--jobs", common.jobs, "Worker threads (0 = available parallelism)")
        ->envname("MSPAN_JOBS")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget", common.budget, "Maximum number of free edges to enumerate")
        ->envname("MSPAN_BUDGET")
        ->check(CLI::Range(0, mspan::kMaxBudget));
}

// X.json -> X.meta.json
std::string default_meta_path(const std::string& output) {
    if (output == "-") {
        return {};
    }
    const std::string ext = ".json";
    if (output.size() > ext.size() && output.compare(output.size() - ext.size(), ext.size(), ext) == 0) {
        return output.substr(0, output.size() - ext.size()) + ".meta.json";
    }
    return output + ".meta.json";
}

Json items_json(const std::vector<mspan::ChainItemEdges>& items) {
    Json out = Json::array();
    for (const auto& item : items) {
        Json j{{"v_w", item.direct}, {"v_vp", item.to_mid}, {"vp_w", item.from_mid}};
        if (item.back_arc) {
            j["vp_v"] = *item.back_arc;
        }
        out.push_back(std::move(j));
    }
    return out;
}

Json intractable_meta_json(const mspan::IntractableMetadata& meta) {
    return Json{{"n", meta.n},
                {"s", meta.s},
                {"t", meta.t},
                {"gadget_edges", items_json(meta.items)},
                {"chain_edges", meta.chain_edges},
                {"st_edge", meta.st_edge}};
}

void emit_generated(const mspan::WeightedGraph& g, const Json& meta, const Common& common, std::string meta_path) {
    mspan::io::write_json(mspan::io::to_json(g), common.output);
    if (meta_path.empty()) {
        meta_path = default_meta_path(common.output);
    }
    if (!meta_path.empty()) {
        mspan::io::write_json(meta, meta_path);
    }
}

int emit_report(const mspan::Report& report, const Common& common) {
    mspan::io::write_json(mspan::to_json(report), common.output);
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact biobjective spanner toolkit"};
    app.require_subcommand(1);
    Common common;

    // generate
    auto* generate = app.add_subcommand("generate", "Build instances");
    generate->require_subcommand(1);
    std::string meta_path;
    int n = 0;
    bool directed = false;
    std::string file;

    auto* gen_intr = generate->add_subcommand("intractable", "Exponential-front family");
    gen_intr->add_option("--n", n, "Number of chain items")->required();
    gen_intr->add_flag("--directed", directed, "Orient every edge from s toward t");
    auto* gen_buco = generate->add_subcommand("from-buco", "Reduction from a BUCO instance");
    gen_buco->add_option("FILE", file, "BUCO instance JSON")->required();
    gen_buco->add_flag("--directed", directed, "Directed variant");
    auto* gen_cnf = generate->add_subcommand("from-cnf", "Reduction from a 3-CNF formula");
    gen_cnf->add_option("FILE", file, "DIMACS CNF")->required();
    for (auto* cmd : {gen_intr, gen_buco, gen_cnf}) {
        add_output(cmd, common);
        cmd->add_option("--meta", meta_path, "Sidecar metadata JSON (default: <output>.meta.json)");
    }

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Value vector of one spanner");
    std::string instance_path;
    std::string spanner_path;
    std::string mode = "edge";
    eval_cmd->add_option("INSTANCE", instance_path)->required();
    eval_cmd->add_option("SPANNER", spanner_path)->required();
    eval_cmd->add_option("--mode", mode, "Stretch pairs: edge or all")->check(CLI::IsMember({"edge", "all"}));
    add_output(eval_cmd, common);

    // pareto
    auto* pareto_cmd = app.add_subcommand("pareto", "Exact non-dominated front");
    bool witnesses = false;
    pareto_cmd->add_option("INSTANCE", instance_path)->required();
    pareto_cmd->add_flag("--witnesses", witnesses, "Include one spanner per point");
    add_output(pareto_cmd, common);
    add_solver(pareto_cmd, common);

    // extreme
    auto* extreme_cmd = app.add_subcommand("extreme", "Extreme supported points with weight certificates");
    std::string method = "hull";
    extreme_cmd->add_option("INSTANCE", instance_path)->required();
    extreme_cmd->add_option("--method", method)->check(CLI::IsMember({"hull", "dichotomic"}));
    add_output(extreme_cmd, common);
    add_solver(extreme_cmd, common);

    // buco
    auto* buco_cmd = app.add_subcommand("buco", "Biobjective unconstrained combinatorial optimization");
    buco_cmd->require_subcommand(1);
    auto* buco_solve = buco_cmd->add_subcommand("solve", "Exact BUCO front");
    std::string buco_method = "brute";
    buco_solve->add_option("FILE", file)->required();
    buco_solve->add_option("--method", buco_method)->check(CLI::IsMember({"brute", "dp"}));
    add_output(buco_solve, common);

    // verify
    auto* verify = app.add_subcommand("verify", "Check the hardness constructions");
    verify->require_subcommand(1);
    auto* ver_intr = verify->add_subcommand("intractable", "Exponential-front family");
    ver_intr->add_option("--n", n)->required();
    ver_intr->add_flag("--directed", directed);
    auto* ver_buco = verify->add_subcommand("buco", "BUCO reduction round trip");
    ver_buco->add_option("FILE", file)->required();
    ver_buco->add_flag("--directed", directed);
    auto* ver_cai = verify->add_subcommand("cai", "Weighted-sum separation of the 3-SAT construction");
    std::string assignment_path;
    ver_cai->add_option("FILE", file, "DIMACS CNF")->required();
    ver_cai->add_option("--assignment", assignment_path, "Satisfying assignment JSON")->required();
    auto* ver_unw = verify->add_subcommand("unweighted", "Front size bound for unit weights");
    ver_unw->add_option("INSTANCE", instance_path)->required();
    for (auto* cmd : {ver_intr, ver_buco, ver_cai, ver_unw}) {
        add_output(cmd, common);
        add_solver(cmd, common);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    namespace io = mspan::io;
    try {
        if (gen_intr->parsed()) {
            emit_generated(mspan::gen_intractable(n, directed), intractable_meta_json(mspan::intractable_metadata(n)),
                           common, meta_path);
        } else if (gen_buco->parsed()) {
            const auto red = mspan::gen_from_buco(io::buco_from_json(io::read_json(file)), directed);
            emit_generated(red.graph, io::to_json(red.meta), common, meta_path);
        } else if (gen_cnf->parsed()) {
            const auto red = mspan::gen_cai(mspan::parse_dimacs(io::read_text(file)));
            emit_generated(red.graph, io::to_json(red.meta), common, meta_path);
        } else if (eval_cmd->parsed()) {
            const auto g = io::graph_from_json(io::read_json(instance_path));
            const auto s = io::spanner_from_json(io::read_json(spanner_path), g.edge_count());
            const auto eval_mode = mode == "all" ? mspan::EvalMode::AllPairs : mspan::EvalMode::EdgeRestricted;
            io::write_json(io::to_json(mspan::eval(g, s, eval_mode)), common.output);
        } else if (pareto_cmd->parsed()) {
            auto front = mspan::enumerate_front(io::graph_from_json(io::read_json(instance_path)), common.solve());
            if (!witnesses) {
                front.witnesses.clear();
            }
            io::write_json(io::to_json(front), common.output);
        } else if (extreme_cmd->parsed()) {
            const auto g = io::graph_from_json(io::read_json(instance_path));
            const auto certs = method == "dichotomic" ? mspan::extreme_dichotomic(g, common.solve())
                                                      : mspan::extreme_from_front(mspan::enumerate_front(g, common.solve()));
            io::write_json(io::to_json(certs), common.output);
        } else if (buco_solve->parsed()) {
            const auto inst = io::buco_from_json(io::read_json(file));
            io::write_json(io::to_json(buco_method == "dp" ? mspan::buco_dp(inst) : mspan::buco_brute(inst)),
                           common.output);
        } else if (ver_intr->parsed()) {
            return emit_report(mspan::verify_intractable(n, directed, common.solve()), common);
        } else if (ver_buco->parsed()) {
            return emit_report(
                mspan::verify_buco_reduction(io::buco_from_json(io::read_json(file)), directed, common.solve()),
                common);
        } else if (ver_cai->parsed()) {
            return emit_report(mspan::verify_cai(mspan::parse_dimacs(io::read_text(file)),
                                                 io::assignment_from_json(io::read_json(assignment_path))),
                               common);
        } else if (ver_unw->parsed()) {
            return emit_report(
                mspan::verify_unweighted_bound(io::graph_from_json(io::read_json(instance_path)), common.solve()),
                common);
        }
    } catch (const mspan::Error& e) {
        std::cerr << "mspan: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mspan: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

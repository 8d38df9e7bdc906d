// triflow: generators, structural deciders, exhaustive oracles and
// certificate replay for integer flows on triangle-tree graphs.
//
// Exit codes: 0 ok, 1 input error, 2 cross-check/verification failure,
// 3 oracle size guardrail.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "triflow/analysis.hpp"
#include "triflow/canonical.hpp"
#include "triflow/certify.hpp"
#include "triflow/dot.hpp"
#include "triflow/json_io.hpp"
#include "triflow/tritree.hpp"
#include "triflow/twotrees.hpp"

using namespace triflow;
using nlohmann::json;

namespace {

int oracle_limit_from_env() {
    const char* s = std::getenv("TRIFLOW_ORACLE_EDGE_LIMIT");
    if (!s) return 26;
    try {
        return std::stoi(s);
    } catch (...) {
        return 26;
    }
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cmd_gen(const std::string& family, int k, int n, int steps, uint32_t seed) {
    Multigraph g;
    if (family == "wheel") {
        g = gen_wheel(k > 0 ? k : 3);
    } else if (family == "k4") {
        g = gen_k4();
    } else if (family == "book") {
        g = gen_book(n > 0 ? n : 4);
    } else if (family == "fan") {
        g = gen_fan(n > 0 ? n : 3);
    } else if (family == "crystal") {
        g = gen_crystal(gen_random_tritree_seq(n > 0 ? n : 5, seed, "v", "t"));
    } else if (family == "bullgrown") {
        g = gen_random_bullgrown(steps > 0 ? steps : 1, seed);
    } else if (family == "random2tree") {
        g = gen_random_tritree(n > 0 ? n : 5, seed);
    } else if (family == "double2tree") {
        g = gen_double_tritree(n > 0 ? n : 4, seed).graph;
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 1;
    }
    std::cout << graph_to_json(g).dump(2) << "\n";
    return 0;
}

int cmd_analyze(const std::string& input, const std::string& checks, bool cross, bool timing) {
    Multigraph g;
    try {
        g = graph_from_json(json::parse(slurp(input)));
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    }
    AnalysisOptions opts;
    opts.cross_check = cross;
    opts.include_timing = timing;
    opts.oracle.max_edges = oracle_limit_from_env();
    if (!checks.empty() && checks != "all") {
        opts.check_3nzf = checks.find("3nzf") != std::string::npos;
        opts.check_z3 = checks.find("z3") != std::string::npos;
        opts.check_s3 = checks.find("s3") != std::string::npos;
        opts.check_flow = checks.find("flow") != std::string::npos;
        opts.check_tc = checks.find("tc") != std::string::npos;
    }
    try {
        auto res = run_analysis(g, opts);
        std::cout << res.report.dump(2) << "\n";
        std::cerr << "stages: " << res.timing_note << "\n";
        if (res.mismatch) {
            std::cerr << "decider/oracle disagreement detected\n";
            return 2;
        }
        return 0;
    } catch (const OracleLimitError& ex) {
        std::cerr << "guardrail: " << ex.what() << "\n";
        return 3;
    }
}

int cmd_corpus(int n, int max_edges, const std::string& check, bool as_json) {
    CorpusOptions opts;
    opts.n = n;
    // max_edges caps the total edge count; extras beyond the tree follow
    int tree_edges = 2 * n - 3;
    opts.max_extra = (max_edges > 0) ? std::max(0, max_edges - tree_edges) : 3;
    opts.check = check;
    opts.oracle.max_edges = oracle_limit_from_env();
    try {
        auto res = run_corpus_check(opts);
        if (as_json) {
            json j;
            j["n"] = opts.n;
            j["max_extra"] = opts.max_extra;
            j["check"] = check;
            j["instances"] = res.instances;
            j["positives"] = res.positives;
            j["negatives"] = res.negatives;
            j["skipped"] = res.skipped;
            j["disagreements"] = res.disagreements;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "check        " << check << "\n";
            std::cout << "n            " << opts.n << " (extras <= " << opts.max_extra << ")\n";
            std::cout << "instances    " << res.instances << "\n";
            std::cout << "positive     " << res.positives << "\n";
            std::cout << "negative     " << res.negatives << "\n";
            std::cout << "skipped      " << res.skipped << "\n";
            std::cout << "disagreement " << res.disagreements.size() << "\n";
            for (const auto& f : res.disagreements) std::cout << "  !! " << f << "\n";
        }
        return res.disagreements.empty() ? 0 : 2;
    } catch (const OracleLimitError& ex) {
        std::cerr << "guardrail: " << ex.what() << "\n";
        return 3;
    }
}

int cmd_oracle(const std::string& which, const std::string& input, int k,
               const std::string& boundary_json) {
    Multigraph g;
    try {
        g = graph_from_json(json::parse(slurp(input)));
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    }
    OracleOptions opts;
    opts.max_edges = oracle_limit_from_env();
    json out;
    try {
        if (which == "mod3") {
            Z3Boundary beta = boundary_json.empty()
                                  ? Z3Boundary::zero(g)
                                  : boundary_from_json(json::parse(boundary_json));
            auto d = mod3_orient(g, beta, opts);
            out["verdict"] = d.has_value();
            if (d) out["witness"] = orientation_to_json(*d);
        } else if (which == "nzf") {
            auto f = has_nzf(g, k > 0 ? k : 3, opts);
            out["verdict"] = f.has_value();
            if (f) out["witness"] = flow_to_json(*f);
        } else if (which == "z3") {
            auto rep = z3_connected(g, opts);
            out["verdict"] = rep.verdict;
            if (rep.witness) out["witness"] = orientation_to_json(*rep.witness);
            if (rep.counterexample_boundary)
                out["counterexample_boundary"] = boundary_to_json(*rep.counterexample_boundary);
        } else if (which == "s3") {
            auto rep = s3_member(g, opts);
            out["verdict"] = rep.verdict;
            if (rep.witness) out["witness"] = orientation_to_json(*rep.witness);
            if (rep.counterexample_boundary)
                out["counterexample_boundary"] = boundary_to_json(*rep.counterexample_boundary);
        } else if (which == "flow") {
            auto rep = flow_index_lt3(g, opts);
            out["verdict"] = rep.verdict;
            if (rep.witness) out["witness"] = orientation_to_json(*rep.witness);
        } else if (which == "color") {
            auto c = vertex_3_colorable(g, opts);
            out["verdict"] = c.has_value();
            if (c) {
                json cc = json::object();
                for (const auto& [v, col] : *c) cc[v] = col;
                out["witness"] = cc;
            }
        } else {
            std::cerr << "unknown oracle: " << which << "\n";
            return 1;
        }
    } catch (const OracleLimitError& ex) {
        std::cerr << "guardrail: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_export(const std::string& input, bool dot) {
    json j;
    try {
        j = json::parse(slurp(input));
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    }
    if (!dot) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    try {
        if (j.contains("vertices") && j.contains("edges")) {
            std::cout << dot_graph(graph_from_json(j));
            return 0;
        }
        if (j.contains("base") && j.contains("steps")) {
            // replay the certificate and label edges by creating step
            Certificate c = certificate_from_json(j);
            Multigraph cur;
            size_t base_n = (c.base == "K3") ? 3 : 4;
            for (const auto& v : c.base_vertices) cur.add_vertex(v);
            int eid = 0;
            std::map<std::string, std::string> step_of;
            for (size_t i = 0; i < base_n; ++i)
                for (size_t k = i + 1; k < base_n; ++k) {
                    std::string id = "e" + std::to_string(eid++);
                    cur.add_edge(id, c.base_vertices[i], c.base_vertices[k]);
                    step_of[id] = "base";
                }
            int sno = 0;
            for (const auto& st : c.steps) {
                ++sno;
                std::set<std::string> before;
                for (const auto& e : cur.edges()) before.insert(e.id);
                if (st.kind == CertStep::Kind::BullGrow) {
                    cur = bull_grow(cur, GrowSpec{st.a, st.b, st.w, st.consume, st.u, st.v});
                } else {
                    cur.add_vertex(st.apex);
                    auto ids = fresh_edge_ids(cur, 2);
                    cur.add_edge(ids[0], st.apex, st.su);
                    cur.add_edge(ids[1], st.apex, st.sv);
                }
                for (const auto& e : cur.edges())
                    if (!before.count(e.id)) step_of[e.id] = "s" + std::to_string(sno);
            }
            std::ostringstream os;
            os << "graph C {\n";
            for (const auto& v : cur.vertices()) os << "  \"" << v << "\";\n";
            for (const auto& e : cur.edges())
                os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << step_of[e.id]
                   << ":" << e.id << "\"];\n";
            os << "}\n";
            std::cout << os.str();
            return 0;
        }
        if (j.contains("k") && j.contains("edges")) {
            std::cout << dot_flow(flow_from_json(j));
            return 0;
        }
        // plain orientation object: id -> [tail, head]
        std::cout << dot_orientation(orientation_from_json(j));
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer flows, group connectivity and triangle-tree certificates"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit an instance family member as graph JSON");
    std::string family;
    int k = 0, n = 0, steps = 0;
    uint32_t seed = 1;
    gen->add_option("family", family,
                    "wheel|k4|crystal|book|fan|bullgrown|random2tree|double2tree")
        ->required();
    gen->add_option("--k", k, "wheel rim length");
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--steps", steps, "growth steps");
    gen->add_option("--seed", seed, "random seed");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "run deciders and oracles on a graph");
    std::string input = "-", checks = "all";
    bool cross = false, timing = false;
    analyze->add_option("--input", input, "graph JSON file or - for stdin");
    analyze->add_option("--check", checks, "comma list: 3nzf,z3,s3,flow,tc (default all)");
    analyze->add_flag("--cross-check", cross, "compare deciders against the oracles");
    analyze->add_flag("--timing", timing, "include per-stage timing in the JSON output");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "decider-vs-oracle sweep over small graphs");
    int cn = 6, max_edges = 0;
    std::string check = "3nzf";
    bool as_json = false;
    corpus->add_option("--n", cn, "max vertex count");
    corpus->add_option("--max-edges", max_edges, "total edge cap (default tree + 3)");
    corpus->add_option("--check", check, "3nzf|z3|s3");
    corpus->add_flag("--json", as_json, "JSON summary instead of the table");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "run one exhaustive oracle directly");
    std::string which, oinput = "-", boundary;
    int ok_flow = 0;
    oracle->add_option("which", which, "mod3|nzf|z3|s3|flow|color")->required();
    oracle->add_option("--input", oinput, "graph JSON file or - for stdin");
    oracle->add_option("--k", ok_flow, "flow order for nzf (default 3)");
    oracle->add_option("--boundary", boundary, "boundary JSON object for mod3 (default zero)");

    // export
    auto* exp = app.add_subcommand("export", "render graph/orientation/certificate JSON");
    std::string einput = "-";
    bool dot = false;
    exp->add_option("--input", einput, "JSON file or - for stdin");
    exp->add_flag("--dot", dot, "emit DOT");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, k, n, steps, seed);
        if (analyze->parsed()) return cmd_analyze(input, checks, cross, timing);
        if (corpus->parsed()) return cmd_corpus(cn, max_edges, check, as_json);
        if (oracle->parsed()) return cmd_oracle(which, oinput, ok_flow, boundary);
        if (exp->parsed()) return cmd_export(einput, dot);
    } catch (const OracleLimitError& ex) {
        std::cerr << "guardrail: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

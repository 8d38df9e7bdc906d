#include "triflow/analysis.hpp"

#include <chrono>
#include <sstream>

#include "triflow/canonical.hpp"
#include "triflow/certify.hpp"
#include "triflow/enumerate.hpp"
#include "triflow/json_io.hpp"
#include "triflow/twotrees.hpp"

namespace triflow {

using nlohmann::json;

namespace {

struct StageClock {
    std::map<std::string, long> ms;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    void lap(const std::string& stage) {
        auto t1 = std::chrono::steady_clock::now();
        ms[stage] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        t0 = t1;
    }
};

}  // namespace

AnalysisResult run_analysis(const Multigraph& g, const AnalysisOptions& opts) {
    AnalysisResult res;
    StageClock clock;
    json& rep = res.report;
    rep["fingerprint"] = fingerprint(g);
    rep["vertices"] = g.vertex_count();
    rep["edges"] = g.edge_count();

    auto tree = find_spanning_tritree(g);
    rep["spanning_tritree"]["found"] = tree.has_value();
    if (tree) rep["spanning_tritree"]["seq"] = tritree_to_json(*tree);
    clock.lap("tritree");

    json verdicts = json::object();
    DecideCache cache;

    if (opts.check_3nzf) {
        json v;
        if (tree) {
            auto [has_flow, cert] = decide_3nzf(g, *tree, &cache);
            v["value"] = has_flow;
            v["method"] = "decider";
            if (cert) v["certificate"] = certificate_to_json(*cert);
            if (has_flow) {
                // a positive verdict ships the concrete flow
                auto flow = has_nzf(g, 3, opts.oracle);
                if (flow) v["witness"] = flow_to_json(*flow);
            }
            if (opts.cross_check) {
                bool oracle = has_nzf(g, 3, opts.oracle).has_value();
                v["oracle"] = oracle;
                if (oracle != has_flow) res.mismatch = true;
            }
        } else {
            auto flow = has_nzf(g, 3, opts.oracle);
            v["value"] = flow.has_value();
            v["method"] = "oracle-only";
            if (flow) v["witness"] = flow_to_json(*flow);
        }
        verdicts["3nzf"] = v;
        clock.lap("3nzf");
    }
    if (opts.check_z3) {
        json v;
        if (tree) {
            auto [in_z3, cert] = decide_z3(g, *tree, &cache);
            v["value"] = in_z3;
            v["method"] = "decider";
            if (cert) v["certificate"] = certificate_to_json(*cert);
            if (in_z3) {
                // best-effort replayable proof; fall back to the zero-boundary
                // orientation as a spot witness
                if (auto proof = z3_prove(g))
                    v["proof"] = z3proof_to_json(*proof);
                else if (auto d = mod3_orient(g, Z3Boundary::zero(g), opts.oracle))
                    v["witness"] = orientation_to_json(*d);
            }
            if (opts.cross_check) {
                auto rep_o = z3_connected(g, opts.oracle);
                v["oracle"] = rep_o.verdict;
                if (rep_o.verdict != in_z3) res.mismatch = true;
            }
        } else {
            auto rep_o = z3_connected(g, opts.oracle);
            v["value"] = rep_o.verdict;
            v["method"] = "oracle-only";
            if (rep_o.witness) v["witness"] = orientation_to_json(*rep_o.witness);
            if (rep_o.counterexample_boundary)
                v["counterexample_boundary"] = boundary_to_json(*rep_o.counterexample_boundary);
        }
        verdicts["z3"] = v;
        clock.lap("z3");
    }
    std::optional<S3Certification> s3cert;
    if (opts.check_s3) {
        json v;
        s3cert = certify_s3(g);
        if (s3cert) {
            v["value"] = s3cert->all_ok;
            v["method"] = "constructive";
            v["partition"] = partition_to_json(s3cert->partition);
            v["summary"] = {{"boundaries_checked", s3cert->boundaries_checked},
                            {"all_ok", s3cert->all_ok}};
            if (opts.cross_check) {
                auto rep_o = s3_member(g, opts.oracle);
                v["oracle"] = rep_o.verdict;
                if (rep_o.verdict != s3cert->all_ok) res.mismatch = true;
            }
        } else {
            auto rep_o = s3_member(g, opts.oracle);
            v["value"] = rep_o.verdict;
            v["method"] = "oracle-only";
            if (rep_o.counterexample_boundary)
                v["counterexample_boundary"] = boundary_to_json(*rep_o.counterexample_boundary);
        }
        verdicts["s3"] = v;
        clock.lap("s3");
    }
    if (opts.check_flow) {
        json v;
        if (s3cert && s3cert->all_ok) {
            Orientation d = strong_mod3_orient(g, Z3Boundary::zero(g), s3cert->partition);
            v["value"] = true;
            v["method"] = "constructive";
            v["witness"] = orientation_to_json(d);
        } else {
            auto rep_o = flow_index_lt3(g, opts.oracle);
            v["value"] = rep_o.verdict;
            v["method"] = "oracle-only";
            if (rep_o.witness) v["witness"] = orientation_to_json(*rep_o.witness);
        }
        verdicts["flow_index_lt3"] = v;
        clock.lap("flow_index_lt3");
    }
    if (opts.check_tc) {
        json v;
        v["value"] = triangularly_connected(g);
        v["method"] = "direct";
        verdicts["triangularly_connected"] = v;
        clock.lap("triangularly_connected");
    }
    rep["verdicts"] = verdicts;
    if (opts.include_timing) {
        json t = json::object();
        for (const auto& [k, v] : clock.ms) t[k] = v;
        rep["timing_ms"] = t;
    }
    std::ostringstream note;
    for (const auto& [k, v] : clock.ms) note << k << "=" << v << "ms ";
    res.timing_note = note.str();
    return res;
}

CorpusResult run_corpus_check(const CorpusOptions& opts) {
    CorpusResult res;
    auto corpus = enumerate_corpus(opts.n, opts.max_extra);
    DecideCache cache;
    for (const auto& item : corpus) {
        ++res.instances;
        if (opts.check == "3nzf") {
            auto [has_flow, cert] = decide_3nzf(item.graph, item.tree, &cache);
            bool oracle = has_nzf(item.graph, 3, opts.oracle).has_value();
            (has_flow ? res.positives : res.negatives)++;
            if (has_flow != oracle) res.disagreements.push_back(fingerprint(item.graph));
        } else if (opts.check == "z3") {
            auto [in_z3, cert] = decide_z3(item.graph, item.tree, &cache);
            bool oracle = z3_connected(item.graph, opts.oracle).verdict;
            (in_z3 ? res.positives : res.negatives)++;
            if (in_z3 != oracle) res.disagreements.push_back(fingerprint(item.graph));
        } else if (opts.check == "s3") {
            auto cert = certify_s3(item.graph);
            if (!cert) {
                ++res.skipped;
                continue;
            }
            ++res.positives;
            bool ok = cert->all_ok && s3_member(item.graph, opts.oracle).verdict &&
                      flow_index_lt3(item.graph, opts.oracle).verdict;
            if (!ok) res.disagreements.push_back(fingerprint(item.graph));
        } else {
            throw std::invalid_argument("run_corpus_check: unknown check " + opts.check);
        }
    }
    return res;
}

}  // namespace triflow

#pragma once

#include <json.hpp>

#include "triflow/multigraph.hpp"
#include "triflow/oracles.hpp"

namespace triflow {

struct AnalysisOptions {
    bool check_3nzf = true;
    bool check_z3 = true;
    bool check_s3 = true;
    bool check_flow = true;
    bool check_tc = true;
    bool cross_check = false;
    bool include_timing = false;
    OracleOptions oracle;
};

struct AnalysisResult {
    nlohmann::json report;
    bool mismatch = false;            // decider vs oracle disagreement
    std::string timing_note;          // human summary for stderr
};

/// Run the structural deciders (oracle-only where no spanning triangle-tree
/// exists), optionally cross-checking against the exhaustive oracles.
AnalysisResult run_analysis(const Multigraph& g, const AnalysisOptions& opts);

struct CorpusOptions {
    int n = 6;
    int max_extra = 3;
    std::string check = "3nzf";  // 3nzf | z3 | s3
    OracleOptions oracle;
};

struct CorpusResult {
    long instances = 0;
    long positives = 0;
    long negatives = 0;
    long skipped = 0;  // no-claim cases (s3 without two disjoint trees)
    std::vector<std::string> disagreements;  // fingerprints
};

CorpusResult run_corpus_check(const CorpusOptions& opts);

}  // namespace triflow

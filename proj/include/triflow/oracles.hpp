#pragma once

#include <functional>
#include <map>
#include <optional>

#include "triflow/multigraph.hpp"

namespace triflow {

/// Size guardrail for the exhaustive searches. Oversized inputs are refused
/// with OracleLimitError instead of running unbounded.
struct OracleOptions {
    int max_edges = 26;
};

class OracleLimitError : public std::runtime_error {
public:
    explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleReport {
    bool verdict = false;
    std::optional<Orientation> witness;                // re-verifies under the checkers
    std::optional<Z3Boundary> counterexample_boundary; // first failing boundary, canonical order
};

/// Boundaries in canonical order: values of the lexicographically first n-1
/// vertices run through base-3 tuples ascending, the last vertex is forced by
/// the zero-sum constraint. fn returning true stops; returns true if stopped.
bool for_each_boundary(const Multigraph& g, const std::function<bool(const Z3Boundary&)>& fn);

/// Orientation with per-vertex (out - in) = beta mod 3, or nullopt.
/// Backtracking over edges with residue-feasibility pruning.
std::optional<Orientation> mod3_orient(const Multigraph& g, const Z3Boundary& beta,
                                       const OracleOptions& opts = {});

/// Nowhere-zero k-flow. k = 3 goes through the zero-boundary mod-3
/// orientation and an augmenting conversion; other k by value backtracking.
std::optional<FlowAssignment> has_nzf(const Multigraph& g, int k, const OracleOptions& opts = {});

/// Every boundary realizable by some orientation. Positive witness is the
/// zero-boundary orientation.
OracleReport z3_connected(const Multigraph& g, const OracleOptions& opts = {});

/// Every boundary realizable by a strongly connected orientation. Requires a
/// connected input.
OracleReport s3_member(const Multigraph& g, const OracleOptions& opts = {});

/// Some orientation is simultaneously strongly connected and zero-boundary
/// mod 3. Requires a connected input.
OracleReport flow_index_lt3(const Multigraph& g, const OracleOptions& opts = {});

std::optional<std::map<std::string, int>> vertex_3_colorable(const Multigraph& g,
                                                             const OracleOptions& opts = {});

}  // namespace triflow

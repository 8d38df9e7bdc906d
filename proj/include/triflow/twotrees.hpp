#pragma once

#include "triflow/certify.hpp"
#include "triflow/multigraph.hpp"
#include "triflow/tritree.hpp"

namespace triflow {

/// Edge bipartition of a graph into a Z3-connected spanning part (e1, with a
/// replayable proof) and a 2-edge-connected spanning part (e2).
struct SpanningPartition {
    std::vector<std::string> e1, e2;
    Z3Proof z3_proof;
};

struct PartitionOptions {
    ProveOptions prove;
    int max_removable_tries = 256;  // per tree, fallback enumeration
    int max_prove_calls = 4000;     // exhaustive bipartition budget
};

/// Subgraph holding every vertex of g and exactly the listed edges.
Multigraph subgraph_on_all_vertices(const Multigraph& g, const std::vector<std::string>& edge_ids);

bool validate_partition(const Multigraph& g, const SpanningPartition& p);

/// Split g (= union of the two edge-disjoint spanning triangle-trees plus any
/// extra edges) per the removable-set recipe: move a removable set of one
/// tree onto the other side, prove that side Z3-connected, keep the rest
/// 2-edge-connected. Falls back to enumerating removable sets, swapping the
/// trees' roles, and finally to exhaustive bipartition search.
std::optional<SpanningPartition> two_tree_partition(const Multigraph& g, const TriTreeSeq& t1,
                                                    const TriTreeSeq& t2,
                                                    const PartitionOptions& opts = {});

/// Strongly connected orientation from an ear decomposition (Robbins).
/// Requires a 2-edge-connected graph on >= 2 vertices.
Orientation robbins_orient(const Multigraph& g);

/// Strongly connected orientation realizing beta mod 3: Robbins-orient e2,
/// then solve e1 for the boundary difference.
Orientation strong_mod3_orient(const Multigraph& g, const Z3Boundary& beta,
                               const SpanningPartition& part);

struct S3Certification {
    TriTreeSeq t1, t2;
    SpanningPartition partition;
    int boundaries_checked = 0;
    bool all_ok = false;
};

/// Find two edge-disjoint spanning triangle-trees, build a partition, and run
/// strong_mod3_orient over every boundary. Absent when no such pair of trees
/// is found (no claim made).
std::optional<S3Certification> certify_s3(const Multigraph& g, const PartitionOptions& opts = {});

}  // namespace triflow

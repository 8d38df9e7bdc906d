#pragma once

#include "triflow/multigraph.hpp"
#include "triflow/oracles.hpp"
#include "triflow/tritree.hpp"

namespace triflow {

struct TreeClass {
    Multigraph graph;
    TriTreeSeq seq;
};

/// All isomorphism classes of triangle-trees on exactly n vertices, one
/// construction sequence each (level-wise growth with canonical dedup).
std::vector<TreeClass> enumerate_tritree_classes(int n);

struct CorpusItem {
    Multigraph graph;
    TriTreeSeq tree;  // spanning triangle-tree skeleton
};

/// All isomorphism classes made of a triangle-tree on 3..max_n vertices plus
/// up to max_extra extra edges (any vertex pairs, parallels included).
std::vector<CorpusItem> enumerate_corpus(int max_n, int max_extra);

/// All crystals (triangle-path plus leaf-joining edge) on 4..max_n vertices.
std::vector<Multigraph> enumerate_crystals(int max_n);

/// Triangularly-connected graphs outside Z3: iterated 2-sums of triangles and
/// odd wheels, filtered by the oracle, up to max_n vertices.
std::vector<Multigraph> enumerate_triconn_nonz3(int max_n, const OracleOptions& opts = {});

/// All simple 2-edge-connected graphs on exactly n vertices (n <= 6).
std::vector<Multigraph> enumerate_simple_2ec(int n);

}  // namespace triflow

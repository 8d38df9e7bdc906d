#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "triflow/multigraph.hpp"

namespace triflow {

/// Construction sequence of a triangle-tree (2-tree) realized inside a host
/// graph: a base triangle plus, per added vertex, the pair of adjacent
/// vertices it attaches to. edge_ids lists the realizing host edges in a
/// fixed order: (x1x2, x1x3, x2x3), then (v,y),(v,z) per attachment.
struct TriTreeAttach {
    std::string vertex, y, z;
};

struct TriTreeSeq {
    std::array<std::string, 3> base{};
    std::vector<TriTreeAttach> attach;
    std::vector<std::string> edge_ids;

    size_t vertex_count() const { return 3 + attach.size(); }
    std::vector<std::string> vertices() const;    // sorted
    bool has_vertex(const std::string& v) const;
};

/// Endpoint pairs of the tree edges, aligned with edge_ids.
std::vector<std::pair<std::string, std::string>> tritree_edge_pairs(const TriTreeSeq& t);

/// Structural validity of the sequence itself (fresh vertices, attach pairs
/// already tree-adjacent, id count) without looking at a host graph.
bool tritree_wellformed(const TriTreeSeq& t);

/// Wellformed and every edge id exists in g with the right endpoints;
/// require_spanning additionally demands V(t) == V(g).
bool validate_tritree(const Multigraph& g, const TriTreeSeq& t, bool require_spanning = false);

/// Degree-2 vertices of the tree, sorted.
std::vector<std::string> tritree_leaves(const TriTreeSeq& t);

/// The tree as a standalone graph (its vertices, its edges under its own ids).
Multigraph realize_standalone(const TriTreeSeq& t);

/// One triangle of the tree: three vertices plus the realizing edge ids.
struct TriTriangle {
    std::array<std::string, 3> verts;
    std::array<std::string, 3> eids;
};

/// All triangles of the sequence (base first, then one per attachment).
std::vector<TriTriangle> tritree_triangles(const TriTreeSeq& t);

/// Argument of triangle_path: a vertex name or a tree edge id.
struct Element {
    bool is_edge = false;
    std::string id;
};
inline Element vertex_elem(std::string v) { return {false, std::move(v)}; }
inline Element edge_elem(std::string e) { return {true, std::move(e)}; }

/// The unique minimal triangle-path of t between two nonadjacent elements;
/// a vertex argument ends up a leaf of the result, an edge argument ends up
/// inside the terminal triangle. Throws when the elements are identical,
/// adjacent, or not part of t.
TriTreeSeq triangle_path(const TriTreeSeq& t, const Element& x, const Element& y);

/// Maximum-size removable edge set: largest X with T - X still
/// 2-edge-connected. Ties broken towards lexicographically least id lists.
std::vector<std::string> removable_max(const TriTreeSeq& t);

/// Visit removable sets in decreasing size (lexicographic within a size);
/// fn returning true stops the scan.
void for_each_removable_set_desc(const TriTreeSeq& t,
                                 const std::function<bool(const std::vector<std::string>&)>& fn);

/// Backtracking search for a spanning triangle-tree; deterministic for fixed
/// input. Exponential in the worst case, intended for small n.
std::optional<TriTreeSeq> find_spanning_tritree(const Multigraph& g);
std::optional<TriTreeSeq> find_spanning_tritree(const Multigraph& g,
                                                const std::set<std::string>& banned_edges);

/// Enumerate spanning triangle-trees with distinct edge-id sets; fn returning
/// true stops. Returns true if stopped by fn.
bool for_each_spanning_tritree(const Multigraph& g, const std::set<std::string>& banned_edges,
                               const std::function<bool(const TriTreeSeq&)>& fn,
                               long max_yield = -1);

std::optional<std::pair<TriTreeSeq, TriTreeSeq>> find_two_disjoint_spanning_tritrees(
    const Multigraph& g);

// ---- instance families -----------------------------------------------------

Multigraph gen_wheel(int k);  // k >= 3; W3 is K4
Multigraph gen_k4();
Multigraph gen_book(int n);  // K_{1,1,n-2}, n >= 4
Multigraph gen_fan(int n);   // triangle-path with a common apex, n >= 3
TriTreeSeq fan_seq(int n);
/// Triangle-path plus an edge joining its two leaves. Requires >= 4 vertices
/// and exactly two leaves.
Multigraph gen_crystal(const TriTreeSeq& path);

TriTreeSeq gen_random_tritree_seq(int n, uint32_t seed, const std::string& vertex_prefix = "v",
                                  const std::string& edge_prefix = "t");
Multigraph gen_random_tritree(int n, uint32_t seed);

struct DoubleTriTree {
    Multigraph graph;
    TriTreeSeq t1, t2;
};
/// Union of two independently random spanning triangle-trees on the same
/// vertex set (edge-disjoint by id; parallel edges welcome).
DoubleTriTree gen_double_tritree(int n, uint32_t seed);

}  // namespace triflow

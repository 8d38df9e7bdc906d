#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace triflow {

/// A single edge of a multigraph. Endpoints are always distinct (no loops);
/// parallel edges are told apart by their ids.
struct Edge {
    std::string id;
    std::string u, v;

    bool joins(const std::string& a, const std::string& b) const {
        return (u == a && v == b) || (u == b && v == a);
    }
    std::string other(const std::string& x) const {
        if (x == u) return v;
        if (x == v) return u;
        throw std::invalid_argument("edge " + id + " is not incident to " + x);
    }
};

/// Loop-free multigraph with stable string ids for vertices and edges.
///
/// Vertices and edges are kept sorted (by name resp. id) so that every
/// operation and every serialization is deterministic. Surgery operations
/// are free functions returning new values; a Multigraph is never mutated
/// after it has been handed to an algorithm.
class Multigraph {
public:
    Multigraph() = default;

    void add_vertex(const std::string& name);
    /// Throws if the id is taken, an endpoint is missing, or u == v (loop).
    void add_edge(const std::string& id, const std::string& u, const std::string& v);

    bool has_vertex(const std::string& name) const;
    const Edge* find_edge(const std::string& id) const;
    const Edge& edge(const std::string& id) const;  // throws if absent

    size_t vertex_count() const { return verts_.size(); }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(const std::string& v) const;
    /// Ids of edges incident to v, in id order.
    std::vector<std::string> incident_edges(const std::string& v) const;
    /// Distinct neighbors of v, sorted.
    std::vector<std::string> neighbors(const std::string& v) const;
    /// True if some edge joins a and b.
    bool adjacent(const std::string& a, const std::string& b) const;
    /// All edge ids joining a and b, in id order.
    std::vector<std::string> edges_between(const std::string& a, const std::string& b) const;

    bool operator==(const Multigraph& o) const {
        return verts_ == o.verts_ && ids_equal(o);
    }

private:
    bool ids_equal(const Multigraph& o) const;

    std::vector<std::string> verts_;  // sorted, unique
    std::vector<Edge> edges_;         // sorted by id, unique ids
};

/// Index view used by the algorithm kernels: vertices become 0..n-1 in
/// name order, edges keep the graph's id order.
struct IndexedGraph {
    int n = 0;
    std::vector<std::string> names;
    std::vector<std::string> eids;
    std::vector<std::pair<int, int>> ends;
    std::vector<std::vector<std::pair<int, int>>> inc;  // vertex -> (edge idx, other endpoint)

    explicit IndexedGraph(const Multigraph& g);
    int vindex(const std::string& name) const;
};

/// Direction assignment, edge id -> (tail, head). Self-contained so it can
/// be serialized on its own; covers(g) checks it matches a graph exactly.
class Orientation {
public:
    void set(const std::string& edge_id, const std::string& tail, const std::string& head);
    const std::pair<std::string, std::string>& at(const std::string& edge_id) const;
    bool has(const std::string& edge_id) const { return dir_.count(edge_id) > 0; }
    size_t size() const { return dir_.size(); }
    const std::map<std::string, std::pair<std::string, std::string>>& entries() const { return dir_; }

    bool covers(const Multigraph& g) const;
    /// Every edge oriented u -> v as stored.
    static Orientation all_forward(const Multigraph& g);

    bool operator==(const Orientation& o) const { return dir_ == o.dir_; }

private:
    std::map<std::string, std::pair<std::string, std::string>> dir_;
};

/// Vertex -> {0,1,2} assignment; a valid boundary sums to 0 mod 3.
struct Z3Boundary {
    std::map<std::string, int> beta;

    int at(const std::string& v) const {
        auto it = beta.find(v);
        return it == beta.end() ? 0 : it->second;
    }
    void set(const std::string& v, int r) { beta[v] = ((r % 3) + 3) % 3; }
    bool sums_to_zero() const;

    static Z3Boundary zero(const Multigraph& g);
    /// Componentwise a - b mod 3 over the vertices of g.
    static Z3Boundary diff(const Multigraph& g, const Z3Boundary& a, const Z3Boundary& b);

    bool operator==(const Z3Boundary& o) const { return beta == o.beta; }
    bool operator<(const Z3Boundary& o) const { return beta < o.beta; }
};

/// Orientation plus per-edge magnitude in 1..k-1 (sign folded into the
/// orientation); a nowhere-zero k-flow when conservation holds everywhere.
struct FlowAssignment {
    Orientation orientation;
    std::map<std::string, int> value;
    int k = 0;
};

// ---- surgery -------------------------------------------------------------

/// Merge the endpoints of edge_id. Edges parallel to it would become loops
/// and are deleted; the merged vertex takes the lexicographically smaller name.
Multigraph contract_edge(const Multigraph& g, const std::string& edge_id);

/// Collapse each connected component of the edge-induced subgraph to one
/// vertex (smallest name in the component); resulting loops are deleted.
Multigraph contract_subgraph(const Multigraph& g, const std::vector<std::string>& edge_ids);

/// Replace the two edges ea = va, eb = vb by a single fresh edge ab.
/// Requires a != b. The fresh id is fresh_edge_id of the input graph.
Multigraph lift_pair(const Multigraph& g, const std::string& v,
                     const std::string& ea, const std::string& eb);

/// Endpoint form: lift the least-id edges va and vb.
Multigraph lift_pair_vertices(const Multigraph& g, const std::string& v,
                              const std::string& a, const std::string& b);

/// Replace a simple u..v path (given as consecutive edge ids) by one fresh
/// edge uv. Requires distinct endpoints.
Multigraph lift_path(const Multigraph& g, const std::vector<std::string>& path_edge_ids);

/// Glue a and b along ea/eb: endpoints identified pairwise (sorted endpoint
/// lists matched in order, or crosswise when swap_pairing), the two edges
/// merged into one that keeps the smaller id. Vertex and edge id universes
/// must otherwise be disjoint.
Multigraph two_sum(const Multigraph& a, const Multigraph& b,
                   const std::string& ea, const std::string& eb,
                   bool swap_pairing = false);

// ---- predicates ----------------------------------------------------------

bool is_connected(const Multigraph& g);
/// K1 counts as (degenerately) 2-edge-connected.
bool is_2edge_connected(const Multigraph& g);
/// Requires d to orient g exactly.
bool is_strongly_connected(const Multigraph& g, const Orientation& d);
/// Per-vertex (outdeg - indeg) mod 3; always a valid boundary.
Z3Boundary boundary_of(const Multigraph& g, const Orientation& d);

// ---- witness checkers (re-verification, independent of the searches) -----

bool check_orientation(const Multigraph& g, const Orientation& d);
/// Exact integer conservation with magnitudes in 1..k-1.
bool check_flow_conservation(const Multigraph& g, const FlowAssignment& f);
bool check_coloring(const Multigraph& g, const std::map<std::string, int>& color);

// ---- deterministic fresh ids ----------------------------------------------

/// Smallest "e<k>" not used in g. Ids are chosen against the input graph,
/// so an operation's output id never depends on intermediate removals.
std::string fresh_edge_id(const Multigraph& g);
std::vector<std::string> fresh_edge_ids(const Multigraph& g, int count);
/// Smallest "n<k>" not used in g.
std::vector<std::string> fresh_vertex_ids(const Multigraph& g, int count);

}  // namespace triflow

#pragma once

#include <memory>

#include "triflow/multigraph.hpp"
#include "triflow/oracles.hpp"
#include "triflow/tritree.hpp"

namespace triflow {

/// Adjacent 3-vertices u < v with common neighbor w; a and b are the third
/// neighbors of u resp. v (a = b allowed, and a or b may equal w when the
/// host has the parallel edges to support it). The five concrete edge ids
/// pin the pair down in a multigraph.
struct BullPair {
    std::string u, v, w, a, b;
    std::string e_uv, e_uw, e_vw, e_ua, e_vb;
};

/// One pair per adjacent {u,v}, canonical labeling: least uv edge id, least
/// common neighbor w, then least edge ids.
std::vector<BullPair> bull_pairs(const Multigraph& g);
/// Every labeling (all uv-edge / w-edge choices); the reduction searches
/// need them all.
std::vector<BullPair> bull_pairs_all(const Multigraph& g);

/// Delete u, v and their five edges; add a fresh ab edge unless a == b.
Multigraph bull_reduce(const Multigraph& g, const BullPair& p);

struct GrowSpec {
    std::string a, b, w;
    bool consume = false;        // delete an existing ab edge (requires a != b)
    std::string u_name, v_name;  // optional explicit names for the grown pair
};
/// Add u, v with edges uv, uw, vw, ua, vb; optionally consume an ab edge
/// (the least id joining a and b).
Multigraph bull_grow(const Multigraph& g, const GrowSpec& spec);

Multigraph gen_bullgrown(const Multigraph& seed, const std::vector<GrowSpec>& steps);
/// Random growth chain from K4; consuming steps only, reproducible by seed.
Multigraph gen_random_bullgrown(int steps, uint32_t seed);

// ---- derivation certificates -------------------------------------------------

struct CertStep {
    enum class Kind { BullGrow, TwoSumK3 };
    Kind kind = Kind::BullGrow;
    // BullGrow
    std::string u, v, w, a, b;
    bool consume = false;
    // TwoSumK3: apex glued onto the edge su-sv
    std::string apex, su, sv;
};

struct Certificate {
    std::string base;  // "K3" or "K4"
    std::vector<std::string> base_vertices;
    std::vector<CertStep> steps;
    std::string target_fingerprint;
};

/// Shared memo for the reduction searches (canonical form -> verdict).
struct DecideCache {
    std::map<std::string, bool> nzf3;         // true = reduces to K4
    std::map<std::string, bool> z3;           // true = derivably non-Z3-connected
    std::map<std::string, bool> has_tritree;  // spanning triangle-tree exists
};

/// Structural 3-flow decision for a graph with spanning triangle-tree t.
/// Returns (has 3-flow?, certificate when the answer is no). The certificate
/// replays the graph from K4 by bull growths.
std::pair<bool, std::optional<Certificate>> decide_3nzf(const Multigraph& g, const TriTreeSeq& t,
                                                        DecideCache* cache = nullptr);

/// Structural Z3-connectivity decision. Returns (Z3-connected?, certificate
/// when not). The certificate replays the graph from K3 or K4 by triangle
/// 2-sums and bull growths.
std::pair<bool, std::optional<Certificate>> decide_z3(const Multigraph& g, const TriTreeSeq& t,
                                                      DecideCache* cache = nullptr);

/// Sufficient test: at most three 3-vertices forces a 3-flow. nullopt = no claim.
std::optional<bool> few_3vertices_shortcut(const Multigraph& g, const TriTreeSeq& t);

/// Crystal = spanning triangle-path plus one edge joining its two leaves.
std::optional<TriTreeSeq> recognize_crystal(const Multigraph& g);
/// Has a 3-flow iff some vertex degree is even. Throws if not a crystal.
bool crystal_3nzf(const Multigraph& g);
/// Z3-connected iff vertex-3-colorable. Throws if not a crystal.
bool crystal_z3(const Multigraph& g);

bool verify_certificate(const Multigraph& g, const Certificate& c);

// ---- positive Z3 proofs --------------------------------------------------------

struct Z3Proof;

/// One replay step. The premises mirror the closure rules: contracting a
/// 2-cycle or a proven subgraph, lifting at a 4+-vertex, lifting a path,
/// a spanning triangle-tree plus two extra edges at one leaf, and the 2K2 /
/// K1 terminals.
struct Z3Step {
    enum class Kind {
        Contract2Cycle,
        ContractZ3Subgraph,
        LiftPair,
        LiftPath,
        TreePlus,
        Base2K2,
        BaseK1
    };
    Kind kind = Kind::BaseK1;
    std::vector<std::string> edge_ids;  // 2-cycle pair / subgraph edges / path edges
    std::string v, ea, eb;              // lift_pair: vertex and its two edges
    std::string leaf;                   // tree_plus
    TriTreeSeq tritree;                 // tree_plus
    std::shared_ptr<Z3Proof> subproof;  // contract_z3_subgraph
};

struct Z3Proof {
    std::vector<Z3Step> steps;
};

struct ProveOptions {
    int branch_depth = 4;
    int max_trees = 96;        // spanning-tree enumeration cap per node
    long node_budget = 20000;  // total search nodes
};

/// Best-effort positive proof search. Absence is NOT a disproof.
std::optional<Z3Proof> z3_prove(const Multigraph& g, const ProveOptions& opts = {});

bool verify_z3proof(const Multigraph& g, const Z3Proof& p);

// ---- triangular connectivity ---------------------------------------------------

/// Every edge lies in a triangle and all edges sit in one component of the
/// triangle adjacency structure (triangles linked by shared edges).
bool triangularly_connected(const Multigraph& g);

struct WheelWitness {
    std::string hub;
    std::vector<std::string> rim;         // cycle order
    std::vector<std::string> rim_edges;   // one id per rim pair
    std::vector<std::string> spoke_edges; // one id per spoke
};

/// An odd wheel subgraph each of whose rim edges separates the host as a
/// 2-sum (shared edge exactly that rim edge).
std::optional<WheelWitness> fully_2summed_odd_wheel(const Multigraph& g);

/// Edge-induced standalone subgraph (vertices are the endpoints).
Multigraph edge_induced_subgraph(const Multigraph& g, const std::vector<std::string>& edge_ids);

}  // namespace triflow

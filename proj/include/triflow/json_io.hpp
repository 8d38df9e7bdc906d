#pragma once

#include <json.hpp>

#include "triflow/certify.hpp"
#include "triflow/multigraph.hpp"
#include "triflow/tritree.hpp"
#include "triflow/twotrees.hpp"

namespace triflow {

// Graph interchange schema:
//   {"vertices": ["a", ...], "edges": [["id", "u", "v"], ...]}
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// {"<edge id>": ["tail", "head"], ...}
nlohmann::json orientation_to_json(const Orientation& d);
Orientation orientation_from_json(const nlohmann::json& j);

// {"<vertex>": 0|1|2, ...}
nlohmann::json boundary_to_json(const Z3Boundary& b);
Z3Boundary boundary_from_json(const nlohmann::json& j);

// {"<edge id>": ["tail", "head", value], ...} with "k" alongside
nlohmann::json flow_to_json(const FlowAssignment& f);
FlowAssignment flow_from_json(const nlohmann::json& j);

// {"base": [x1,x2,x3], "attach": [[v,y,z], ...], "edge_ids": [...]}
nlohmann::json tritree_to_json(const TriTreeSeq& t);
TriTreeSeq tritree_from_json(const nlohmann::json& j);

// {"base": "K3"|"K4", "base_vertices": [...], "steps": [...], "target": hash}
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// {"steps": [{"op": ...}, ...]}
nlohmann::json z3proof_to_json(const Z3Proof& p);
Z3Proof z3proof_from_json(const nlohmann::json& j);

// {"e1": [...], "e2": [...], "z3_proof": {...}}
nlohmann::json partition_to_json(const SpanningPartition& p);
SpanningPartition partition_from_json(const nlohmann::json& j);

}  // namespace triflow

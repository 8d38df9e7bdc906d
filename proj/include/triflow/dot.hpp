#pragma once

#include <string>

#include "triflow/multigraph.hpp"

namespace triflow {

/// Undirected DOT; edge ids as labels. Deterministic line order.
std::string dot_graph(const Multigraph& g);
/// Directed DOT for an orientation (standalone; tails/heads carried by it).
std::string dot_orientation(const Orientation& d);
/// Directed DOT with flow values in the labels.
std::string dot_flow(const FlowAssignment& f);

}  // namespace triflow

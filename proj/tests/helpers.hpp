#pragma once

#include <array>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "triflow/multigraph.hpp"
#include "triflow/oracles.hpp"

// Test-side oracles, deliberately dumber than the library: flat enumeration
// over all 2^m orientations with no pruning. They provide the independent
// route for every frozen expected value.
namespace testutil {

inline triflow::Multigraph mk(const std::vector<std::string>& verts,
                              const std::vector<std::array<std::string, 3>>& edges) {
    triflow::Multigraph g;
    for (const auto& v : verts) g.add_vertex(v);
    for (const auto& e : edges) g.add_edge(e[0], e[1], e[2]);
    return g;
}

inline void for_all_orientations(const triflow::Multigraph& g,
                                 const std::function<bool(const triflow::Orientation&)>& fn) {
    const auto& edges = g.edges();
    size_t m = edges.size();
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        triflow::Orientation d;
        for (size_t i = 0; i < m; ++i) {
            if (mask & (1ul << i))
                d.set(edges[i].id, edges[i].u, edges[i].v);
            else
                d.set(edges[i].id, edges[i].v, edges[i].u);
        }
        if (fn(d)) return;
    }
}

inline bool flat_has_mod3(const triflow::Multigraph& g, const triflow::Z3Boundary& beta) {
    bool found = false;
    for_all_orientations(g, [&](const triflow::Orientation& d) {
        if (triflow::boundary_of(g, d) == beta) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

inline bool flat_z3_connected(const triflow::Multigraph& g) {
    bool all = true;
    triflow::for_each_boundary(g, [&](const triflow::Z3Boundary& b) {
        if (!flat_has_mod3(g, b)) {
            all = false;
            return true;
        }
        return false;
    });
    return all;
}

inline bool flat_strong_mod3(const triflow::Multigraph& g, const triflow::Z3Boundary& beta) {
    bool found = false;
    for_all_orientations(g, [&](const triflow::Orientation& d) {
        if (triflow::boundary_of(g, d) == beta && triflow::is_strongly_connected(g, d)) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

inline bool flat_s3(const triflow::Multigraph& g) {
    bool all = true;
    triflow::for_each_boundary(g, [&](const triflow::Z3Boundary& b) {
        if (!flat_strong_mod3(g, b)) {
            all = false;
            return true;
        }
        return false;
    });
    return all;
}

inline triflow::Multigraph relabeled(const triflow::Multigraph& g, uint32_t seed) {
    std::vector<std::string> names = g.vertices();
    std::mt19937 rng(seed);
    std::vector<std::string> shuffled = names;
    for (size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng() % i]);
    std::map<std::string, std::string> vmap;
    for (size_t i = 0; i < names.size(); ++i) vmap[names[i]] = "r_" + shuffled[i];
    triflow::Multigraph out;
    for (const auto& v : names) out.add_vertex(vmap[v]);
    for (const auto& e : g.edges()) out.add_edge(e.id, vmap[e.u], vmap[e.v]);
    return out;
}

}  // namespace testutil

#include "triflow/enumerate.hpp"

#include <algorithm>

#include "triflow/canonical.hpp"
#include "triflow/certify.hpp"

namespace triflow {

std::vector<TreeClass> enumerate_tritree_classes(int n) {
    if (n < 3) return {};
    std::vector<TreeClass> level;
    {
        TreeClass base;
        base.seq.base = {"v0", "v1", "v2"};
        base.seq.edge_ids = {"t0", "t1", "t2"};
        base.graph = realize_standalone(base.seq);
        level.push_back(base);
    }
    for (int j = 4; j <= n; ++j) {
        std::vector<TreeClass> next;
        std::set<std::string> seen;
        std::string nv = "v" + std::to_string(j - 1);
        for (const auto& cls : level) {
            auto pairs = tritree_edge_pairs(cls.seq);
            for (const auto& [y, z] : pairs) {
                TreeClass ext = cls;
                ext.seq.attach.push_back({nv, std::min(y, z), std::max(y, z)});
                int base_id = static_cast<int>(ext.seq.edge_ids.size());
                ext.seq.edge_ids.push_back("t" + std::to_string(base_id));
                ext.seq.edge_ids.push_back("t" + std::to_string(base_id + 1));
                ext.graph = realize_standalone(ext.seq);
                std::string key = canonical_string(ext.graph);
                if (seen.insert(key).second) next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<CorpusItem> enumerate_corpus(int max_n, int max_extra) {
    std::vector<CorpusItem> out;
    std::set<std::string> seen;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto& cls : enumerate_tritree_classes(n)) {
            const auto& vs = cls.graph.vertices();
            std::vector<std::pair<std::string, std::string>> pairs;
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
            // multisets of extra edges, size 0..max_extra
            std::vector<size_t> pick;
            std::function<void(size_t)> rec = [&](size_t from) {
                Multigraph g = cls.graph;
                for (size_t k = 0; k < pick.size(); ++k)
                    g.add_edge("x" + std::to_string(k), pairs[pick[k]].first,
                               pairs[pick[k]].second);
                std::string key = canonical_string(g);
                if (seen.insert(key).second) out.push_back({g, cls.seq});
                if (pick.size() == static_cast<size_t>(max_extra)) return;
                for (size_t p = from; p < pairs.size(); ++p) {
                    pick.push_back(p);
                    rec(p);  // repetition allowed: parallel extras
                    pick.pop_back();
                }
            };
            rec(0);
        }
    }
    return out;
}

std::vector<Multigraph> enumerate_crystals(int max_n) {
    std::vector<Multigraph> out;
    std::set<std::string> seen;
    for (int n = 4; n <= max_n; ++n)
        for (const auto& cls : enumerate_tritree_classes(n)) {
            if (tritree_leaves(cls.seq).size() != 2) continue;
            Multigraph c = gen_crystal(cls.seq);
            std::string key = canonical_string(c);
            if (seen.insert(key).second) out.push_back(c);
        }
    return out;
}

namespace {

struct Renamed {
    Multigraph graph;
    std::map<std::string, std::string> emap;  // old edge id -> new
};

Renamed renamed(const Multigraph& g, const std::string& vprefix, const std::string& eprefix) {
    std::map<std::string, std::string> vmap;
    int i = 0;
    for (const auto& v : g.vertices()) vmap[v] = vprefix + std::to_string(i++);
    Renamed out;
    for (const auto& v : g.vertices()) out.graph.add_vertex(vmap[v]);
    int e = 0;
    for (const Edge& ed : g.edges()) {
        std::string nid = eprefix + std::to_string(e++);
        out.emap[ed.id] = nid;
        out.graph.add_edge(nid, vmap[ed.u], vmap[ed.v]);
    }
    return out;
}

}  // namespace

std::vector<Multigraph> enumerate_triconn_nonz3(int max_n, const OracleOptions& opts) {
    // seed pieces: triangle and odd wheels
    std::vector<Multigraph> seeds;
    {
        Multigraph k3;
        for (int i = 0; i < 3; ++i) k3.add_vertex("v" + std::to_string(i));
        k3.add_edge("e0", "v0", "v1");
        k3.add_edge("e1", "v0", "v2");
        k3.add_edge("e2", "v1", "v2");
        seeds.push_back(k3);
    }
    for (int k = 3; 1 + k <= max_n; k += 2) seeds.push_back(gen_wheel(k));
    // representative edges per seed up to symmetry: triangle/K4 are edge
    // transitive; wheels split into spoke vs rim
    auto seed_edges = [&](const Multigraph& s) {
        std::vector<std::string> reps;
        if (s.find_edge("e0")) reps.push_back("e0");
        if (s.find_edge("r0")) reps.push_back("r0");
        if (s.find_edge("s0")) reps.push_back("s0");
        return reps;
    };
    std::vector<Multigraph> classes = seeds;
    std::set<std::string> seen;
    for (const auto& s : classes) seen.insert(canonical_string(s));
    size_t scan = 0;
    while (scan < classes.size()) {
        Renamed host = renamed(classes[scan++], "h", "g");
        for (const auto& seed : seeds) {
            if (host.graph.vertex_count() + seed.vertex_count() - 2 > static_cast<size_t>(max_n))
                continue;
            Renamed piece = renamed(seed, "w", "y");
            for (const Edge& he : host.graph.edges())
                for (const auto& pe : seed_edges(seed))
                    for (bool swap : {false, true}) {
                        Multigraph g = two_sum(host.graph, piece.graph, he.id, piece.emap.at(pe), swap);
                        std::string key = canonical_string(g);
                        if (seen.insert(key).second) classes.push_back(g);
                    }
        }
    }
    std::vector<Multigraph> out;
    for (const auto& g : classes) {
        if (!triangularly_connected(g)) continue;
        if (z3_connected(g, opts).verdict) continue;
        out.push_back(g);
    }
    return out;
}

std::vector<Multigraph> enumerate_simple_2ec(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("enumerate_simple_2ec: supported for n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Multigraph> out;
    std::set<std::string> seen;
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
        Multigraph g;
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
        int e = 0;
        for (size_t p = 0; p < pairs.size(); ++p)
            if (mask & (1L << p))
                g.add_edge("e" + std::to_string(e++), "v" + std::to_string(pairs[p].first),
                           "v" + std::to_string(pairs[p].second));
        if (!is_2edge_connected(g)) continue;
        std::string key = canonical_string(g);
        if (seen.insert(key).second) out.push_back(g);
    }
    return out;
}

}  // namespace triflow

#include "triflow/tritree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

namespace triflow {

std::vector<std::string> TriTreeSeq::vertices() const {
    std::vector<std::string> out(base.begin(), base.end());
    for (const auto& a : attach) out.push_back(a.vertex);
    std::sort(out.begin(), out.end());
    return out;
}

bool TriTreeSeq::has_vertex(const std::string& v) const {
    if (base[0] == v || base[1] == v || base[2] == v) return true;
    for (const auto& a : attach)
        if (a.vertex == v) return true;
    return false;
}

std::vector<std::pair<std::string, std::string>> tritree_edge_pairs(const TriTreeSeq& t) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back(t.base[0], t.base[1]);
    out.emplace_back(t.base[0], t.base[2]);
    out.emplace_back(t.base[1], t.base[2]);
    for (const auto& a : t.attach) {
        out.emplace_back(a.vertex, a.y);
        out.emplace_back(a.vertex, a.z);
    }
    return out;
}

bool tritree_wellformed(const TriTreeSeq& t) {
    if (t.base[0] == t.base[1] || t.base[0] == t.base[2] || t.base[1] == t.base[2]) return false;
    if (t.edge_ids.size() != 3 + 2 * t.attach.size()) return false;
    std::set<std::string> ids(t.edge_ids.begin(), t.edge_ids.end());
    if (ids.size() != t.edge_ids.size()) return false;
    std::set<std::string> verts(t.base.begin(), t.base.end());
    std::set<std::pair<std::string, std::string>> pairs;
    auto norm = [](std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        return std::make_pair(a, b);
    };
    pairs.insert(norm(t.base[0], t.base[1]));
    pairs.insert(norm(t.base[0], t.base[2]));
    pairs.insert(norm(t.base[1], t.base[2]));
    for (const auto& a : t.attach) {
        if (verts.count(a.vertex)) return false;  // not fresh
        if (!verts.count(a.y) || !verts.count(a.z)) return false;
        if (!pairs.count(norm(a.y, a.z))) return false;  // attach pair must be a tree edge
        verts.insert(a.vertex);
        pairs.insert(norm(a.vertex, a.y));
        pairs.insert(norm(a.vertex, a.z));
    }
    return true;
}

bool validate_tritree(const Multigraph& g, const TriTreeSeq& t, bool require_spanning) {
    if (!tritree_wellformed(t)) return false;
    auto pairs = tritree_edge_pairs(t);
    for (size_t i = 0; i < pairs.size(); ++i) {
        const Edge* e = g.find_edge(t.edge_ids[i]);
        if (!e || !e->joins(pairs[i].first, pairs[i].second)) return false;
    }
    if (require_spanning && t.vertices() != g.vertices()) return false;
    return true;
}

std::vector<std::string> tritree_leaves(const TriTreeSeq& t) {
    std::map<std::string, int> deg;
    for (const auto& [a, b] : tritree_edge_pairs(t)) {
        deg[a]++;
        deg[b]++;
    }
    std::vector<std::string> out;
    for (const auto& [v, d] : deg)
        if (d == 2) out.push_back(v);
    return out;
}

Multigraph realize_standalone(const TriTreeSeq& t) {
    Multigraph g;
    for (const auto& v : t.vertices()) g.add_vertex(v);
    auto pairs = tritree_edge_pairs(t);
    for (size_t i = 0; i < pairs.size(); ++i)
        g.add_edge(t.edge_ids[i], pairs[i].first, pairs[i].second);
    return g;
}

std::vector<TriTriangle> tritree_triangles(const TriTreeSeq& t) {
    std::vector<TriTriangle> out;
    auto norm = [](std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        return std::make_pair(a, b);
    };
    std::map<std::pair<std::string, std::string>, std::string> pair_id;
    pair_id[norm(t.base[0], t.base[1])] = t.edge_ids[0];
    pair_id[norm(t.base[0], t.base[2])] = t.edge_ids[1];
    pair_id[norm(t.base[1], t.base[2])] = t.edge_ids[2];
    out.push_back(TriTriangle{{t.base[0], t.base[1], t.base[2]},
                              {t.edge_ids[0], t.edge_ids[1], t.edge_ids[2]}});
    for (size_t i = 0; i < t.attach.size(); ++i) {
        const auto& a = t.attach[i];
        std::string ey = t.edge_ids[3 + 2 * i], ez = t.edge_ids[4 + 2 * i];
        pair_id[norm(a.vertex, a.y)] = ey;
        pair_id[norm(a.vertex, a.z)] = ez;
        out.push_back(TriTriangle{{a.vertex, a.y, a.z}, {ey, ez, pair_id[norm(a.y, a.z)]}});
    }
    return out;
}

// ---- triangle paths ---------------------------------------------------------

namespace {

// Nodes 0..k-1 are triangles, k..k+m-1 are tree edges. The incidence graph of
// a triangle-tree is itself a tree, which makes the minimal path unique.
struct Skeleton {
    std::vector<TriTriangle> tris;
    std::vector<std::string> eids;               // tree edge ids, index order
    std::map<std::string, int> eid_index;
    std::vector<std::vector<int>> adj;           // over all nodes

    explicit Skeleton(const TriTreeSeq& t) {
        tris = tritree_triangles(t);
        eids = t.edge_ids;
        for (size_t i = 0; i < eids.size(); ++i) eid_index[eids[i]] = static_cast<int>(i);
        int k = static_cast<int>(tris.size());
        adj.assign(k + eids.size(), {});
        for (int i = 0; i < k; ++i)
            for (const auto& id : tris[i].eids) {
                int en = k + eid_index.at(id);
                adj[i].push_back(en);
                adj[en].push_back(i);
            }
    }
    int ecount() const { return static_cast<int>(eids.size()); }
    int tcount() const { return static_cast<int>(tris.size()); }
};

std::vector<int> anchor_nodes(const Skeleton& sk, const TriTreeSeq& t, const Element& el) {
    std::vector<int> out;
    if (el.is_edge) {
        auto it = sk.eid_index.find(el.id);
        if (it == sk.eid_index.end())
            throw std::invalid_argument("triangle_path: edge not in the tree: " + el.id);
        out.push_back(sk.tcount() + it->second);
        return out;
    }
    if (!t.has_vertex(el.id))
        throw std::invalid_argument("triangle_path: vertex not in the tree: " + el.id);
    for (int i = 0; i < sk.tcount(); ++i) {
        const auto& v = sk.tris[i].verts;
        if (v[0] == el.id || v[1] == el.id || v[2] == el.id) out.push_back(i);
    }
    auto pairs = tritree_edge_pairs(t);
    for (size_t j = 0; j < pairs.size(); ++j)
        if (pairs[j].first == el.id || pairs[j].second == el.id)
            out.push_back(sk.tcount() + static_cast<int>(j));
    return out;
}

}  // namespace

TriTreeSeq triangle_path(const TriTreeSeq& t, const Element& x, const Element& y) {
    Skeleton sk(t);
    std::vector<int> ax = anchor_nodes(sk, t, x);
    std::vector<int> ay = anchor_nodes(sk, t, y);
    std::set<int> ayset(ay.begin(), ay.end());
    for (int a : ax)
        if (ayset.count(a))
            throw std::invalid_argument("triangle_path: elements adjacent or identical");

    // multi-source BFS over the incidence tree
    int total = sk.tcount() + sk.ecount();
    std::vector<int> parent(total, -2);
    std::queue<int> q;
    for (int a : ax) {
        parent[a] = -1;
        q.push(a);
    }
    int goal = -1;
    while (!q.empty() && goal < 0) {
        int u = q.front();
        q.pop();
        for (int w : sk.adj[u]) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            if (ayset.count(w)) {
                goal = w;
                break;
            }
            q.push(w);
        }
    }
    if (goal < 0) throw std::invalid_argument("triangle_path: elements not connected in the tree");
    std::vector<int> path;
    for (int u = goal; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());

    std::vector<int> chain;
    for (int u : path)
        if (u < sk.tcount()) chain.push_back(u);
    if (chain.empty()) throw std::invalid_argument("triangle_path: elements adjacent or identical");

    // assemble the sub-tree sequence along the chain
    auto norm = [](std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        return std::make_pair(a, b);
    };
    std::map<std::pair<std::string, std::string>, std::string> pair_id;
    auto pairs = tritree_edge_pairs(t);
    for (size_t i = 0; i < pairs.size(); ++i)
        pair_id[norm(pairs[i].first, pairs[i].second)] = t.edge_ids[i];

    TriTreeSeq seq;
    std::array<std::string, 3> vs = sk.tris[chain[0]].verts;
    std::sort(vs.begin(), vs.end());
    seq.base = vs;
    seq.edge_ids.push_back(pair_id.at(norm(vs[0], vs[1])));
    seq.edge_ids.push_back(pair_id.at(norm(vs[0], vs[2])));
    seq.edge_ids.push_back(pair_id.at(norm(vs[1], vs[2])));
    std::set<std::string> in_seq(vs.begin(), vs.end());
    for (size_t c = 1; c < chain.size(); ++c) {
        const TriTriangle& tr = sk.tris[chain[c]];
        std::string fresh;
        std::vector<std::string> shared;
        for (const auto& v : tr.verts) {
            if (in_seq.count(v))
                shared.push_back(v);
            else
                fresh = v;
        }
        if (shared.size() != 2 || fresh.empty())
            throw std::logic_error("triangle_path: malformed chain");
        std::sort(shared.begin(), shared.end());
        seq.attach.push_back({fresh, shared[0], shared[1]});
        seq.edge_ids.push_back(pair_id.at(norm(fresh, shared[0])));
        seq.edge_ids.push_back(pair_id.at(norm(fresh, shared[1])));
        in_seq.insert(fresh);
    }
    return seq;
}

// ---- removable sets ---------------------------------------------------------

namespace {

std::vector<std::string> removable_candidates(const TriTreeSeq& t) {
    auto leaves = tritree_leaves(t);
    std::set<std::string> leafset(leaves.begin(), leaves.end());
    auto pairs = tritree_edge_pairs(t);
    std::vector<std::string> cand;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (!leafset.count(pairs[i].first) && !leafset.count(pairs[i].second))
            cand.push_back(t.edge_ids[i]);
    std::sort(cand.begin(), cand.end());
    return cand;
}

Multigraph remove_edges(const Multigraph& g, const std::vector<std::string>& ids) {
    std::set<std::string> drop(ids.begin(), ids.end());
    Multigraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const Edge& e : g.edges())
        if (!drop.count(e.id)) out.add_edge(e.id, e.u, e.v);
    return out;
}

}  // namespace

void for_each_removable_set_desc(const TriTreeSeq& t,
                                 const std::function<bool(const std::vector<std::string>&)>& fn) {
    Multigraph tree = realize_standalone(t);
    auto cand = removable_candidates(t);
    int c = static_cast<int>(cand.size());
    for (int s = c; s >= 0; --s) {
        // lexicographic combinations of size s
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<std::string> subset;
            subset.reserve(s);
            for (int i : idx) subset.push_back(cand[i]);
            if (is_2edge_connected(remove_edges(tree, subset))) {
                if (fn(subset)) return;
            }
            // next combination
            int i = s - 1;
            while (i >= 0 && idx[i] == c - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            if (s == 0) break;
        }
        if (s == 0) break;
    }
}

std::vector<std::string> removable_max(const TriTreeSeq& t) {
    std::vector<std::string> best;
    for_each_removable_set_desc(t, [&](const std::vector<std::string>& r) {
        best = r;
        return true;
    });
    return best;
}

// ---- spanning triangle-tree search -------------------------------------------

namespace {

struct TTSearch {
    const Multigraph& g;
    const std::set<std::string>& banned;
    const std::function<bool(const TriTreeSeq&)>& yield;
    long max_yield;
    long yielded = 0;
    bool stopped = false;
    size_t n;

    TriTreeSeq cur;
    std::set<std::string> attached;
    std::map<std::pair<std::string, std::string>, std::string> tree_pairs;
    std::set<std::vector<std::string>> seen;

    TTSearch(const Multigraph& g_, const std::set<std::string>& banned_,
             const std::function<bool(const TriTreeSeq&)>& fn, long cap)
        : g(g_), banned(banned_), yield(fn), max_yield(cap), n(g_.vertex_count()) {}

    std::vector<std::string> avail(const std::string& a, const std::string& b) const {
        std::vector<std::string> out;
        for (const auto& id : g.edges_between(a, b))
            if (!banned.count(id)) out.push_back(id);
        return out;
    }

    static std::pair<std::string, std::string> norm(std::string a, std::string b) {
        if (a > b) std::swap(a, b);
        return {a, b};
    }

    void run() {
        if (n < 3) return;
        const auto& vs = g.vertices();
        for (size_t i = 0; i < vs.size() && !stopped; ++i)
            for (size_t j = i + 1; j < vs.size() && !stopped; ++j)
                for (size_t k = j + 1; k < vs.size() && !stopped; ++k) {
                    auto eij = avail(vs[i], vs[j]);
                    auto eik = avail(vs[i], vs[k]);
                    auto ejk = avail(vs[j], vs[k]);
                    if (eij.empty() || eik.empty() || ejk.empty()) continue;
                    for (const auto& a : eij)
                        for (const auto& b : eik)
                            for (const auto& c : ejk) {
                                if (stopped) return;
                                cur = TriTreeSeq{};
                                cur.base = {vs[i], vs[j], vs[k]};
                                cur.edge_ids = {a, b, c};
                                attached = {vs[i], vs[j], vs[k]};
                                tree_pairs.clear();
                                tree_pairs[norm(vs[i], vs[j])] = a;
                                tree_pairs[norm(vs[i], vs[k])] = b;
                                tree_pairs[norm(vs[j], vs[k])] = c;
                                extend();
                            }
                }
    }

    void extend() {
        if (stopped) return;
        if (attached.size() == n) {
            auto ids = cur.edge_ids;
            std::sort(ids.begin(), ids.end());
            if (!seen.insert(ids).second) return;
            ++yielded;
            if (yield(cur)) {
                stopped = true;
                return;
            }
            if (max_yield >= 0 && yielded >= max_yield) stopped = true;
            return;
        }
        for (const auto& w : g.vertices()) {
            if (attached.count(w)) continue;
            // snapshot pair list: attaching modifies tree_pairs
            std::vector<std::pair<std::pair<std::string, std::string>, std::string>> pl(
                tree_pairs.begin(), tree_pairs.end());
            for (const auto& [pr, id] : pl) {
                (void)id;
                auto ey = avail(w, pr.first);
                auto ez = avail(w, pr.second);
                for (const auto& e1 : ey)
                    for (const auto& e2 : ez) {
                        cur.attach.push_back({w, pr.first, pr.second});
                        cur.edge_ids.push_back(e1);
                        cur.edge_ids.push_back(e2);
                        attached.insert(w);
                        tree_pairs[norm(w, pr.first)] = e1;
                        tree_pairs[norm(w, pr.second)] = e2;
                        extend();
                        tree_pairs.erase(norm(w, pr.first));
                        tree_pairs.erase(norm(w, pr.second));
                        attached.erase(w);
                        cur.edge_ids.pop_back();
                        cur.edge_ids.pop_back();
                        cur.attach.pop_back();
                        if (stopped) return;
                    }
            }
        }
    }
};

}  // namespace

bool for_each_spanning_tritree(const Multigraph& g, const std::set<std::string>& banned_edges,
                               const std::function<bool(const TriTreeSeq&)>& fn, long max_yield) {
    TTSearch s(g, banned_edges, fn, max_yield);
    s.run();
    return s.stopped;
}

std::optional<TriTreeSeq> find_spanning_tritree(const Multigraph& g,
                                                const std::set<std::string>& banned) {
    std::optional<TriTreeSeq> out;
    for_each_spanning_tritree(g, banned, [&](const TriTreeSeq& t) {
        out = t;
        return true;
    });
    return out;
}

std::optional<TriTreeSeq> find_spanning_tritree(const Multigraph& g) {
    return find_spanning_tritree(g, {});
}

std::optional<std::pair<TriTreeSeq, TriTreeSeq>> find_two_disjoint_spanning_tritrees(
    const Multigraph& g) {
    size_t n = g.vertex_count();
    if (n < 3 || g.edge_count() < 2 * (2 * n - 3)) return std::nullopt;
    std::optional<std::pair<TriTreeSeq, TriTreeSeq>> out;
    for_each_spanning_tritree(g, {}, [&](const TriTreeSeq& t1) {
        std::set<std::string> ban(t1.edge_ids.begin(), t1.edge_ids.end());
        auto t2 = find_spanning_tritree(g, ban);
        if (t2) {
            out = std::make_pair(t1, *t2);
            return true;
        }
        return false;
    });
    return out;
}

// ---- instance families --------------------------------------------------------

Multigraph gen_wheel(int k) {
    if (k < 3) throw std::invalid_argument("gen_wheel: k must be >= 3");
    Multigraph g;
    g.add_vertex("c");
    for (int i = 0; i < k; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < k; ++i) {
        g.add_edge("r" + std::to_string(i), "v" + std::to_string(i),
                   "v" + std::to_string((i + 1) % k));
        g.add_edge("s" + std::to_string(i), "c", "v" + std::to_string(i));
    }
    return g;
}

Multigraph gen_k4() {
    Multigraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex("v" + std::to_string(i));
    int e = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            g.add_edge("e" + std::to_string(e++), "v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

Multigraph gen_book(int n) {
    if (n < 4) throw std::invalid_argument("gen_book: n must be >= 4");
    Multigraph g;
    g.add_vertex("s0");
    g.add_vertex("s1");
    g.add_edge("sp", "s0", "s1");
    for (int i = 0; i < n - 2; ++i) {
        std::string p = "p" + std::to_string(i);
        g.add_vertex(p);
        g.add_edge("a" + std::to_string(i), "s0", p);
        g.add_edge("b" + std::to_string(i), "s1", p);
    }
    return g;
}

TriTreeSeq fan_seq(int n) {
    if (n < 3) throw std::invalid_argument("fan_seq: n must be >= 3");
    TriTreeSeq t;
    t.base = {"v0", "v1", "v2"};
    t.edge_ids = {"f0", "f1", "f2"};
    int e = 3;
    for (int j = 3; j < n; ++j) {
        std::string vj = "v" + std::to_string(j);
        t.attach.push_back({vj, "v0", "v" + std::to_string(j - 1)});
        t.edge_ids.push_back("f" + std::to_string(e++));
        t.edge_ids.push_back("f" + std::to_string(e++));
    }
    return t;
}

Multigraph gen_fan(int n) { return realize_standalone(fan_seq(n)); }

Multigraph gen_crystal(const TriTreeSeq& path) {
    if (!tritree_wellformed(path)) throw std::invalid_argument("gen_crystal: malformed sequence");
    if (path.vertex_count() < 4)
        throw std::invalid_argument("gen_crystal: need at least 4 vertices");
    auto lv = tritree_leaves(path);
    if (lv.size() != 2) throw std::invalid_argument("gen_crystal: input is not a triangle-path");
    Multigraph g = realize_standalone(path);
    g.add_edge(fresh_edge_id(g), lv[0], lv[1]);
    return g;
}

TriTreeSeq gen_random_tritree_seq(int n, uint32_t seed, const std::string& vertex_prefix,
                                  const std::string& edge_prefix) {
    if (n < 3) throw std::invalid_argument("gen_random_tritree_seq: n must be >= 3");
    std::mt19937 rng(seed);
    auto vn = [&](int i) { return vertex_prefix + std::to_string(i); };
    TriTreeSeq t;
    t.base = {vn(0), vn(1), vn(2)};
    t.edge_ids = {edge_prefix + "0", edge_prefix + "1", edge_prefix + "2"};
    std::vector<std::pair<std::string, std::string>> pairs = {
        {vn(0), vn(1)}, {vn(0), vn(2)}, {vn(1), vn(2)}};
    int e = 3;
    for (int j = 3; j < n; ++j) {
        auto [y, z] = pairs[rng() % pairs.size()];
        t.attach.push_back({vn(j), y, z});
        t.edge_ids.push_back(edge_prefix + std::to_string(e++));
        t.edge_ids.push_back(edge_prefix + std::to_string(e++));
        pairs.emplace_back(vn(j), y);
        pairs.emplace_back(vn(j), z);
    }
    return t;
}

Multigraph gen_random_tritree(int n, uint32_t seed) {
    return realize_standalone(gen_random_tritree_seq(n, seed));
}

DoubleTriTree gen_double_tritree(int n, uint32_t seed) {
    DoubleTriTree out;
    out.t1 = gen_random_tritree_seq(n, seed, "v", "a");
    out.t2 = gen_random_tritree_seq(n, seed ^ 0x9e3779b9u, "v", "b");
    Multigraph g = realize_standalone(out.t1);
    auto pairs = tritree_edge_pairs(out.t2);
    for (size_t i = 0; i < pairs.size(); ++i)
        g.add_edge(out.t2.edge_ids[i], pairs[i].first, pairs[i].second);
    out.graph = g;
    return out;
}

}  // namespace triflow

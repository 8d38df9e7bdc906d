#include "triflow/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace triflow {

void Multigraph::add_vertex(const std::string& name) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), name);
    if (it != verts_.end() && *it == name) return;
    verts_.insert(it, name);
}

void Multigraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
    if (u == v) throw std::invalid_argument("loop edge rejected: " + id);
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("edge " + id + " references missing vertex");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it != edges_.end() && it->id == id)
        throw std::invalid_argument("duplicate edge id: " + id);
    edges_.insert(it, Edge{id, u, v});
}

bool Multigraph::has_vertex(const std::string& name) const {
    return std::binary_search(verts_.begin(), verts_.end(), name);
}

const Edge* Multigraph::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it != edges_.end() && it->id == id) return &*it;
    return nullptr;
}

const Edge& Multigraph::edge(const std::string& id) const {
    const Edge* e = find_edge(id);
    if (!e) throw std::invalid_argument("unknown edge id: " + id);
    return *e;
}

int Multigraph::degree(const std::string& v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<std::string> Multigraph::incident_edges(const std::string& v) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) out.push_back(e.id);
    return out;
}

std::vector<std::string> Multigraph::neighbors(const std::string& v) const {
    std::set<std::string> nb;
    for (const Edge& e : edges_) {
        if (e.u == v) nb.insert(e.v);
        if (e.v == v) nb.insert(e.u);
    }
    return {nb.begin(), nb.end()};
}

bool Multigraph::adjacent(const std::string& a, const std::string& b) const {
    for (const Edge& e : edges_)
        if (e.joins(a, b)) return true;
    return false;
}

std::vector<std::string> Multigraph::edges_between(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (e.joins(a, b)) out.push_back(e.id);
    return out;
}

bool Multigraph::ids_equal(const Multigraph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = o.edges_[i];
        if (a.id != b.id || !a.joins(b.u, b.v)) return false;
    }
    return true;
}

IndexedGraph::IndexedGraph(const Multigraph& g) {
    names = g.vertices();
    n = static_cast<int>(names.size());
    inc.assign(n, {});
    for (const Edge& e : g.edges()) {
        int ui = vindex(e.u), vi = vindex(e.v);
        int eidx = static_cast<int>(ends.size());
        ends.emplace_back(ui, vi);
        eids.push_back(e.id);
        inc[ui].emplace_back(eidx, vi);
        inc[vi].emplace_back(eidx, ui);
    }
}

int IndexedGraph::vindex(const std::string& name) const {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name)
        throw std::invalid_argument("unknown vertex: " + name);
    return static_cast<int>(it - names.begin());
}

void Orientation::set(const std::string& edge_id, const std::string& tail, const std::string& head) {
    dir_[edge_id] = {tail, head};
}

const std::pair<std::string, std::string>& Orientation::at(const std::string& edge_id) const {
    auto it = dir_.find(edge_id);
    if (it == dir_.end()) throw std::invalid_argument("orientation misses edge: " + edge_id);
    return it->second;
}

bool Orientation::covers(const Multigraph& g) const {
    if (dir_.size() != g.edge_count()) return false;
    for (const Edge& e : g.edges()) {
        auto it = dir_.find(e.id);
        if (it == dir_.end()) return false;
        if (!e.joins(it->second.first, it->second.second)) return false;
    }
    return true;
}

Orientation Orientation::all_forward(const Multigraph& g) {
    Orientation d;
    for (const Edge& e : g.edges()) d.set(e.id, e.u, e.v);
    return d;
}

bool Z3Boundary::sums_to_zero() const {
    int s = 0;
    for (const auto& [v, r] : beta) s = (s + r) % 3;
    return s == 0;
}

Z3Boundary Z3Boundary::zero(const Multigraph& g) {
    Z3Boundary b;
    for (const auto& v : g.vertices()) b.beta[v] = 0;
    return b;
}

Z3Boundary Z3Boundary::diff(const Multigraph& g, const Z3Boundary& a, const Z3Boundary& b) {
    Z3Boundary out;
    for (const auto& v : g.vertices()) out.beta[v] = ((a.at(v) - b.at(v)) % 3 + 3) % 3;
    return out;
}

// ---- surgery ---------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Collapse vertex classes given by root(); drops loops, renames class members
// to the lexicographically smallest name of their class.
Multigraph collapse(const Multigraph& g, const std::map<std::string, std::string>& root) {
    auto name_of = [&](const std::string& v) {
        auto it = root.find(v);
        return it == root.end() ? v : it->second;
    };
    Multigraph out;
    for (const auto& v : g.vertices()) out.add_vertex(name_of(v));
    for (const Edge& e : g.edges()) {
        std::string a = name_of(e.u), b = name_of(e.v);
        if (a == b) continue;  // loop after merge
        out.add_edge(e.id, a, b);
    }
    return out;
}

}  // namespace

Multigraph contract_edge(const Multigraph& g, const std::string& edge_id) {
    const Edge& e = g.edge(edge_id);
    std::string keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    std::map<std::string, std::string> root{{gone, keep}};
    return collapse(g, root);
}

Multigraph contract_subgraph(const Multigraph& g, const std::vector<std::string>& edge_ids) {
    if (edge_ids.empty()) throw std::invalid_argument("contract_subgraph: empty edge set");
    IndexedGraph ig(g);
    UnionFind uf(ig.n);
    for (const auto& id : edge_ids) {
        const Edge& e = g.edge(id);
        uf.unite(ig.vindex(e.u), ig.vindex(e.v));
    }
    // smallest name per class: names are sorted, so the first hit wins
    std::map<int, std::string> cls_name;
    for (int i = 0; i < ig.n; ++i) {
        int r = uf.find(i);
        if (!cls_name.count(r)) cls_name[r] = ig.names[i];
    }
    std::map<std::string, std::string> root;
    for (int i = 0; i < ig.n; ++i) root[ig.names[i]] = cls_name[uf.find(i)];
    return collapse(g, root);
}

Multigraph lift_pair(const Multigraph& g, const std::string& v,
                     const std::string& ea, const std::string& eb) {
    if (ea == eb) throw std::invalid_argument("lift_pair: identical edges");
    const Edge& x = g.edge(ea);
    const Edge& y = g.edge(eb);
    std::string a = x.other(v), b = y.other(v);
    if (a == b) throw std::invalid_argument("lift_pair: would create a loop at " + a);
    std::string nid = fresh_edge_id(g);
    Multigraph out;
    for (const auto& w : g.vertices()) out.add_vertex(w);
    for (const Edge& e : g.edges())
        if (e.id != ea && e.id != eb) out.add_edge(e.id, e.u, e.v);
    out.add_edge(nid, a, b);
    return out;
}

Multigraph lift_pair_vertices(const Multigraph& g, const std::string& v, const std::string& a,
                              const std::string& b) {
    auto ea = g.edges_between(v, a);
    auto eb = g.edges_between(v, b);
    if (ea.empty() || eb.empty())
        throw std::invalid_argument("lift_pair_vertices: missing incident edge");
    return lift_pair(g, v, ea.front(), eb.front());  // a == b rejected there
}

Multigraph lift_path(const Multigraph& g, const std::vector<std::string>& path_edge_ids) {
    if (path_edge_ids.empty()) throw std::invalid_argument("lift_path: empty path");
    // walk the edge sequence, checking it forms a simple path
    std::vector<const Edge*> es;
    for (const auto& id : path_edge_ids) es.push_back(&g.edge(id));
    std::string u, v;
    if (es.size() == 1) {
        u = es[0]->u;
        v = es[0]->v;
    } else {
        // orient the first edge so that it chains into the second
        if (es[0]->v == es[1]->u || es[0]->v == es[1]->v) {
            u = es[0]->u;
            v = es[0]->v;
        } else {
            u = es[0]->v;
            v = es[0]->u;
        }
        std::set<std::string> seen{u, v};
        for (size_t i = 1; i < es.size(); ++i) {
            std::string nxt = es[i]->other(v);  // throws if not incident
            if (seen.count(nxt) && !(i + 1 == es.size() && nxt == u))
                throw std::invalid_argument("lift_path: not a simple path");
            v = nxt;
            seen.insert(nxt);
        }
    }
    if (u == v) throw std::invalid_argument("lift_path: endpoints coincide");
    std::string nid = fresh_edge_id(g);
    std::set<std::string> drop(path_edge_ids.begin(), path_edge_ids.end());
    Multigraph out;
    for (const auto& w : g.vertices()) out.add_vertex(w);
    for (const Edge& e : g.edges())
        if (!drop.count(e.id)) out.add_edge(e.id, e.u, e.v);
    out.add_edge(nid, u, v);
    return out;
}

Multigraph two_sum(const Multigraph& a, const Multigraph& b,
                   const std::string& ea, const std::string& eb,
                   bool swap_pairing) {
    const Edge& xa = a.edge(ea);
    const Edge& xb = b.edge(eb);
    for (const auto& v : b.vertices())
        if (a.has_vertex(v)) throw std::invalid_argument("two_sum: vertex universes overlap at " + v);
    std::string a1 = std::min(xa.u, xa.v), a2 = std::max(xa.u, xa.v);
    std::string b1 = std::min(xb.u, xb.v), b2 = std::max(xb.u, xb.v);
    if (swap_pairing) std::swap(b1, b2);
    std::map<std::string, std::string> ren;  // b-side renames
    ren[b1] = std::min(a1, b1);
    ren[b2] = std::min(a2, b2);
    std::map<std::string, std::string> ren_a;  // a-side renames
    ren_a[a1] = ren[b1];
    ren_a[a2] = ren[b2];

    std::string keep_id = std::min(ea, eb);
    Multigraph out;
    for (const auto& v : a.vertices()) out.add_vertex(ren_a.count(v) ? ren_a[v] : v);
    for (const auto& v : b.vertices()) out.add_vertex(ren.count(v) ? ren[v] : v);
    auto an = [&](const std::string& v) { return ren_a.count(v) ? ren_a.at(v) : v; };
    auto bn = [&](const std::string& v) { return ren.count(v) ? ren.at(v) : v; };
    for (const Edge& e : a.edges()) {
        std::string id = (e.id == ea) ? keep_id : e.id;
        out.add_edge(id, an(e.u), an(e.v));
    }
    for (const Edge& e : b.edges()) {
        if (e.id == eb) continue;  // merged into the shared edge
        if (out.find_edge(e.id)) throw std::invalid_argument("two_sum: edge id collision: " + e.id);
        out.add_edge(e.id, bn(e.u), bn(e.v));
    }
    return out;
}

// ---- predicates -------------------------------------------------------------

bool is_connected(const Multigraph& g) {
    if (g.vertex_count() == 0) return false;
    IndexedGraph ig(g);
    std::vector<char> vis(ig.n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [ei, w] : ig.inc[u])
            if (!vis[w]) {
                vis[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == ig.n;
}

namespace {

// bridge detection skipping the arrival edge index, so parallel edges never
// look like bridges
bool has_bridge(const IndexedGraph& ig) {
    std::vector<int> disc(ig.n, -1), low(ig.n, 0);
    int timer = 0;
    bool bridge = false;
    // iterative DFS
    struct Frame {
        int u, in_edge;
        size_t next;
    };
    std::vector<Frame> st;
    st.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    while (!st.empty()) {
        Frame& f = st.back();
        if (f.next < ig.inc[f.u].size()) {
            auto [ei, w] = ig.inc[f.u][f.next++];
            if (ei == f.in_edge) continue;
            if (disc[w] == -1) {
                disc[w] = low[w] = timer++;
                st.push_back({w, ei, 0});
            } else {
                low[f.u] = std::min(low[f.u], disc[w]);
            }
        } else {
            int u = f.u, in_edge = f.in_edge;
            st.pop_back();
            if (!st.empty()) {
                int p = st.back().u;
                low[p] = std::min(low[p], low[u]);
                if (low[u] > disc[p]) bridge = true;
            }
            (void)in_edge;
        }
    }
    return bridge;
}

}  // namespace

bool is_2edge_connected(const Multigraph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.vertex_count() == 1) return true;
    if (!is_connected(g)) return false;
    IndexedGraph ig(g);
    return !has_bridge(ig);
}

bool is_strongly_connected(const Multigraph& g, const Orientation& d) {
    if (!d.covers(g)) throw std::invalid_argument("orientation does not cover the graph");
    if (g.vertex_count() <= 1) return true;
    IndexedGraph ig(g);
    std::vector<std::vector<int>> fwd(ig.n), bwd(ig.n);
    for (const Edge& e : g.edges()) {
        const auto& [tail, head] = d.at(e.id);
        int t = ig.vindex(tail), h = ig.vindex(head);
        fwd[t].push_back(h);
        bwd[h].push_back(t);
    }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> vis(ig.n, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        return cnt == ig.n;
    };
    return reach_all(fwd) && reach_all(bwd);
}

Z3Boundary boundary_of(const Multigraph& g, const Orientation& d) {
    if (!d.covers(g)) throw std::invalid_argument("orientation does not cover the graph");
    std::map<std::string, int> imbalance;
    for (const auto& v : g.vertices()) imbalance[v] = 0;
    for (const Edge& e : g.edges()) {
        const auto& [tail, head] = d.at(e.id);
        imbalance[tail] += 1;
        imbalance[head] -= 1;
    }
    Z3Boundary b;
    for (const auto& [v, x] : imbalance) b.beta[v] = ((x % 3) + 3) % 3;
    return b;
}

// ---- checkers ---------------------------------------------------------------

bool check_orientation(const Multigraph& g, const Orientation& d) { return d.covers(g); }

bool check_flow_conservation(const Multigraph& g, const FlowAssignment& f) {
    if (f.k < 2) return false;
    if (!f.orientation.covers(g)) return false;
    std::map<std::string, long> net;
    for (const auto& v : g.vertices()) net[v] = 0;
    for (const Edge& e : g.edges()) {
        auto it = f.value.find(e.id);
        if (it == f.value.end()) return false;
        int mag = it->second;
        if (mag < 1 || mag > f.k - 1) return false;
        const auto& [tail, head] = f.orientation.at(e.id);
        net[tail] += mag;
        net[head] -= mag;
    }
    for (const auto& [v, x] : net)
        if (x != 0) return false;
    return true;
}

bool check_coloring(const Multigraph& g, const std::map<std::string, int>& color) {
    for (const auto& v : g.vertices()) {
        auto it = color.find(v);
        if (it == color.end() || it->second < 0 || it->second > 2) return false;
    }
    for (const Edge& e : g.edges())
        if (color.at(e.u) == color.at(e.v)) return false;
    return true;
}

// ---- fresh ids ---------------------------------------------------------------

std::vector<std::string> fresh_edge_ids(const Multigraph& g, int count) {
    std::vector<std::string> out;
    for (long k = 0; static_cast<int>(out.size()) < count; ++k) {
        std::string cand = "e" + std::to_string(k);
        if (!g.find_edge(cand)) out.push_back(cand);
    }
    return out;
}

std::string fresh_edge_id(const Multigraph& g) { return fresh_edge_ids(g, 1)[0]; }

std::vector<std::string> fresh_vertex_ids(const Multigraph& g, int count) {
    std::vector<std::string> out;
    for (long k = 0; static_cast<int>(out.size()) < count; ++k) {
        std::string cand = "n" + std::to_string(k);
        if (!g.has_vertex(cand)) out.push_back(cand);
    }
    return out;
}

}  // namespace triflow

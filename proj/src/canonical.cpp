#include "triflow/canonical.hpp"

#include <algorithm>
#include <array>

namespace triflow {

namespace {

constexpr int kMaxCanonVerts = 16;

// Branch-and-prune search for the lexicographically greatest row encoding.
// cmp_state 0 means the rows built so far equal the best prefix (pruning
// allowed); 1 means the branch already beat the best at some earlier depth,
// so leaves must be compared in full.
struct CanonSearch {
    int n = 0;
    std::array<std::array<uint8_t, kMaxCanonVerts>, kMaxCanonVerts> adj{};
    std::vector<int> deg;
    std::vector<int> order;
    std::vector<char> used;
    std::vector<std::vector<uint8_t>> best;
    bool best_set = false;

    void run() {
        order.assign(n, -1);
        used.assign(n, 0);
        std::vector<std::vector<uint8_t>> rows;
        dfs(0, rows, 0);
    }

    void dfs(int depth, std::vector<std::vector<uint8_t>>& rows, int cmp_state) {
        if (depth == n) {
            if (!best_set || rows > best) {
                best = rows;
                best_set = true;
            }
            return;
        }
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (!used[v]) cand.push_back(v);
        // degree-descending order tends to find a strong first leaf
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return a < b;
        });
        for (int v : cand) {
            std::vector<uint8_t> row(depth);
            for (int i = 0; i < depth; ++i) row[i] = adj[order[i]][v];
            int state = cmp_state;
            if (best_set && state == 0) {
                if (row < best[depth]) continue;
                if (row > best[depth]) state = 1;
            }
            order[depth] = v;
            used[v] = 1;
            rows.push_back(std::move(row));
            dfs(depth + 1, rows, state);
            rows.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

std::string canonical_string(const Multigraph& g) {
    int n = static_cast<int>(g.vertex_count());
    if (n > kMaxCanonVerts)
        throw std::invalid_argument("canonical_string: graph too large (n > 16)");
    std::string out;
    out.push_back(static_cast<char>('0' + n / 10));
    out.push_back(static_cast<char>('0' + n % 10));
    if (n == 0) return out;
    IndexedGraph ig(g);
    CanonSearch cs;
    cs.n = n;
    cs.deg.assign(n, 0);
    for (auto [u, v] : ig.ends) {
        cs.adj[u][v]++;
        cs.adj[v][u]++;
        cs.deg[u]++;
        cs.deg[v]++;
    }
    cs.run();
    out.push_back('|');
    for (const auto& row : cs.best) {
        for (uint8_t x : row) out.push_back(static_cast<char>('a' + x));
        out.push_back('.');
    }
    return out;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (const auto& v : a.vertices()) da.push_back(a.degree(v));
    for (const auto& v : b.vertices()) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_string(a) == canonical_string(b);
}

std::string fingerprint(const Multigraph& g) {
    std::string s = canonical_string(g);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hexd = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hexd[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace triflow

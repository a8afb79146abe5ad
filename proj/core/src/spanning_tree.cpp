#include "treespan/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace treespan {

SpanningTree::SpanningTree(const Graph& host, std::vector<Edge> edges)
    : host_(&host), edges_(std::move(edges)) {
    int n = host.vertex_count();
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (static_cast<int>(edges_.size()) != std::max(0, n - 1))
        throw std::invalid_argument("not a spanning tree: wrong edge count");
    adjacency_.assign(n, {});
    for (const Edge& e : edges_) {
        if (!host.has_edge(e.u, e.v))
            throw std::invalid_argument("not a spanning tree: edge not in host");
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    parent_.assign(n, -1);
    depth_.assign(n, -1);
    if (n == 0) return;
    std::queue<Vertex> q;
    q.push(0);
    depth_[0] = 0;
    int reached = 0;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        ++reached;
        for (Vertex w : adjacency_[u]) {
            if (depth_[w] == -1) {
                depth_[w] = depth_[u] + 1;
                parent_[w] = u;
                q.push(w);
            }
        }
    }
    if (reached != n)
        throw std::invalid_argument("not a spanning tree: disconnected");
}

bool SpanningTree::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::span<const Vertex> SpanningTree::neighbors(Vertex v) const {
    if (v < 0 || v >= static_cast<int>(adjacency_.size()))
        throw std::out_of_range("vertex out of range");
    return adjacency_[v];
}

int SpanningTree::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

int SpanningTree::distance(Vertex u, Vertex v) const {
    int n = static_cast<int>(adjacency_.size());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::out_of_range("vertex out of range");
    int d = 0;
    while (depth_[u] > depth_[v]) {
        u = parent_[u];
        ++d;
    }
    while (depth_[v] > depth_[u]) {
        v = parent_[v];
        ++d;
    }
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
        d += 2;
    }
    return d;
}

int stretch(const SpanningTree& t) {
    const Graph& g = t.host();
    if (g.edge_count() == 0) throw std::invalid_argument("host has no edges");
    int best = 0;
    for (const Edge& e : g.edges()) best = std::max(best, t.distance(e.u, e.v));
    return best;
}

namespace {

std::pair<Vertex, int> farthest(const SpanningTree& t, Vertex from) {
    int n = t.host().vertex_count();
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    q.push(from);
    dist[from] = 0;
    Vertex far = from;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] > dist[far]) far = u;
        for (Vertex w : t.neighbors(u))
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return {far, dist[far]};
}

}  // namespace

int tree_diameter(const SpanningTree& t) {
    if (t.host().vertex_count() == 0) return 0;
    auto [a, _] = farthest(t, 0);
    auto [b, d] = farthest(t, a);
    (void)b;
    return d;
}

std::vector<Vertex> fundamental_cycle(const SpanningTree& t, const Edge& e) {
    if (!t.host().has_edge(e.u, e.v) || t.contains(e))
        throw std::invalid_argument("not a cotree edge");
    // Tree path from the smaller endpoint to the larger one.
    int n = t.host().vertex_count();
    std::vector<Vertex> prev(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(e.u);
    seen[e.u] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (u == e.v) break;
        for (Vertex w : t.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                prev[w] = u;
                q.push(w);
            }
    }
    std::vector<Vertex> path;
    for (Vertex u = e.v; u != -1; u = prev[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> fundamental_cut(const SpanningTree& t, const Edge& e) {
    if (!t.contains(e)) throw std::invalid_argument("not a tree edge");
    int n = t.host().vertex_count();
    std::vector<char> side(n, 0);
    std::queue<Vertex> q;
    q.push(e.u);
    side[e.u] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : t.neighbors(u)) {
            if (u == e.u && w == e.v) continue;
            if (u == e.v && w == e.u) continue;
            if (!side[w]) {
                side[w] = 1;
                q.push(w);
            }
        }
    }
    std::vector<Edge> cut;
    for (const Edge& h : t.host().edges())
        if (side[h.u] != side[h.v]) cut.push_back(h);
    return cut;
}

std::vector<StarSet> star_sets(const SpanningTree& t) {
    int n = t.host().vertex_count();
    std::vector<StarSet> out;
    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) < 2) continue;
        StarSet s;
        s.center = v;
        auto nbrs = t.neighbors(v);
        s.members.assign(nbrs.begin(), nbrs.end());
        s.members.insert(std::lower_bound(s.members.begin(), s.members.end(), v), v);
        for (Vertex u : nbrs)
            if (t.degree(u) >= 2) s.contacts.push_back(u);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<VertexSet> s_branches(const SpanningTree& t, const StarSet& s) {
    int n = t.host().vertex_count();
    std::vector<char> banned(n, 0), seen(n, 0);
    for (Vertex v : s.members) banned[v] = 1;
    std::vector<VertexSet> out;
    for (Vertex start = 0; start < n; ++start) {
        if (banned[start] || seen[start]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex w : t.neighbors(u))
                if (!banned[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace treespan

#include "treespan/graph.hpp"

#include <algorithm>
#include <queue>
#include <stack>
#include <stdexcept>
#include <unordered_map>

namespace treespan {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
        throw std::invalid_argument("label count mismatch");

    edges_ = edges;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("empty edge list");
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.try_emplace(name, static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(name);
        return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) throw std::invalid_argument("self-loop");
        Vertex u = intern(a);
        Vertex v = intern(b);
        edges.emplace_back(u, v);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return adjacency_[v];
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::string Graph::label(Vertex v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

std::optional<Vertex> Graph::vertex_by_label(const std::string& name) const {
    if (labels_.empty()) {
        try {
            size_t pos = 0;
            int v = std::stoi(name, &pos);
            if (pos == name.size() && v >= 0 && v < vertex_count()) return v;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (labels_[v] == name) return v;
    return std::nullopt;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    auto nbrs = g.neighbors(v);
    VertexSet out(nbrs.begin(), nbrs.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    std::vector<char> banned(n, 0), seen(n, 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
        banned[v] = 1;
    }
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s) {
        if (banned[s] || seen[s]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!banned[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // BFS starts from ascending roots, so components come out sorted by
    // smallest member already.
    return out;
}

bool is_vertex_cut(const Graph& g, const VertexSet& s) {
    if (static_cast<int>(s.size()) >= g.vertex_count())
        throw std::invalid_argument("empty remainder");
    return components(g, s).size() >= 2;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components(g).size() == 1;
}

bool is_biconnected(const Graph& g) {
    if (!is_connected(g)) return false;
    int n = g.vertex_count();
    if (n <= 2) return n == 2 ? g.edge_count() == 1 : true;
    for (Vertex v = 0; v < n; ++v)
        if (components(g, {v}).size() >= 2) return false;
    return true;
}

std::vector<Subgraph> blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks: disconnected graph");
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), iter(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> block_edges;
    int counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::stack<Vertex> st;
        st.push(root);
        num[root] = low[root] = counter++;
        while (!st.empty()) {
            Vertex u = st.top();
            auto nbrs = g.neighbors(u);
            if (iter[u] < static_cast<int>(nbrs.size())) {
                Vertex w = nbrs[iter[u]++];
                if (num[w] == -1) {
                    edge_stack.emplace_back(u, w);
                    parent[w] = u;
                    num[w] = low[w] = counter++;
                    st.push(w);
                } else if (w != parent[u] && num[w] < num[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], num[w]);
                }
            } else {
                st.pop();
                Vertex p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= num[p]) {
                        std::vector<Edge> blk;
                        Edge stop(p, u);
                        while (true) {
                            Edge e = edge_stack.back();
                            edge_stack.pop_back();
                            blk.push_back(e);
                            if (e == stop) break;
                        }
                        block_edges.push_back(std::move(blk));
                    }
                }
            }
        }
    }

    std::vector<Subgraph> out;
    out.reserve(block_edges.size());
    for (const auto& blk : block_edges) {
        VertexSet verts;
        for (const Edge& e : blk) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        // Two blocks share at most a cut vertex, so the induced subgraph on a
        // block's vertices contains exactly the block's edges.
        out.push_back(induced_subgraph(g, verts));
    }
    std::sort(out.begin(), out.end(), [](const Subgraph& a, const Subgraph& b) {
        return a.to_host < b.to_host;
    });
    return out;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<Vertex> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int cycle = dist[u] + dist[w] + 1;
                    if (best == -1 || cycle < best) best = cycle;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("empty vertex set");
    VertexSet verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Vertex> to_local(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw std::out_of_range("vertex out of range");
        to_local[verts[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (to_local[e.u] != -1 && to_local[e.v] != -1)
            edges.emplace_back(to_local[e.u], to_local[e.v]);
    std::vector<std::string> labels;
    if (g.has_vertex_labels()) {
        labels.reserve(verts.size());
        for (Vertex v : verts) labels.push_back(g.label(v));
    }
    return Subgraph{Graph(static_cast<int>(verts.size()), edges, std::move(labels)),
                    std::move(verts)};
}

}  // namespace treespan

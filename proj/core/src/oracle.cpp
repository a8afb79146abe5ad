#include "treespan/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>

#include "treespan/spanning_tree.hpp"

namespace treespan {

std::vector<Edge> bfs_tree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> out;
    if (n == 0) return out;
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                out.emplace_back(u, w);
                q.push(w);
            }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over edge include/exclude decisions. Edges are visited
// in sorted order, include branch first. The partial tree is a forest; once
// two vertices share a component their tree distance is final, so every
// graph edge inside one component can be checked against the bound the
// moment the component forms.
class TreeSearch {
public:
    TreeSearch(const Graph& g, const OracleBudget& budget)
        : g_(g), budget_(budget), start_(Clock::now()) {
        n_ = g.vertex_count();
        edges_ = g.edges();  // already sorted
        forest_.assign(n_, {});
        dsu_parent_.resize(n_);
        for (int i = 0; i < n_; ++i) dsu_parent_[i] = i;
        stamp_.assign(n_, 0);
        depth_.assign(n_, 0);
        bfs_parent_.assign(n_, -1);
        scratch_queue_.reserve(n_);
    }

    // bound semantics: prune any state in which a finalized edge distance
    // exceeds `bound()`; `on_tree` sees each surviving complete tree and may
    // tighten the bound or stop the search by returning false.
    bool run(const std::function<int()>& bound,
             const std::function<bool(const std::vector<Edge>&)>& on_tree) {
        bound_ = bound;
        on_tree_ = on_tree;
        stopped_ = false;
        descend(0, 0);
        return !run_.exhausted;
    }

    OracleRun run_stats() const { return run_; }

private:
    int find(int v) {
        while (dsu_parent_[v] != v) v = dsu_parent_[v];
        return v;
    }

    bool over_budget() {
        if (run_.nodes > budget_.max_nodes) return true;
        if ((run_.nodes & 1023) == 0) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
            if (elapsed > budget_.time_limit_seconds) return true;
        }
        return false;
    }

    // After merging along e: root the merged component at e.u, then verify
    // every graph edge with both ends inside it against the bound. These
    // distances never change again along this branch.
    bool merged_component_ok(const Edge& e, int bound) {
        ++stamp_counter_;
        scratch_queue_.clear();
        scratch_queue_.push_back(e.u);
        stamp_[e.u] = stamp_counter_;
        depth_[e.u] = 0;
        bfs_parent_[e.u] = -1;
        for (size_t i = 0; i < scratch_queue_.size(); ++i) {
            Vertex a = scratch_queue_[i];
            for (Vertex b : forest_[a])
                if (stamp_[b] != stamp_counter_) {
                    stamp_[b] = stamp_counter_;
                    depth_[b] = depth_[a] + 1;
                    bfs_parent_[b] = a;
                    scratch_queue_.push_back(b);
                }
        }
        for (const Edge& h : g_.edges()) {
            if (stamp_[h.u] != stamp_counter_ || stamp_[h.v] != stamp_counter_) continue;
            int x = h.u, y = h.v, d = 0;
            while (depth_[x] > depth_[y]) {
                x = bfs_parent_[x];
                ++d;
            }
            while (depth_[y] > depth_[x]) {
                y = bfs_parent_[y];
                ++d;
            }
            while (x != y) {
                x = bfs_parent_[x];
                y = bfs_parent_[y];
                d += 2;
                if (d > bound) break;
            }
            if (d > bound) return false;
        }
        return true;
    }

    // Optimistic relaxation: distances in (forest + undecided edges) only
    // grow as more edges get excluded, and any final tree is a subgraph of
    // that union. Once a graph edge cannot be kept within the bound even
    // here, no completion of this branch can. Disconnection shows up as an
    // unreachable endpoint. Worth checking on exclusions only; inclusions
    // never shrink the union.
    bool relaxation_ok(size_t next, int bound) {
        if (aux_.empty()) aux_.resize(n_);
        for (auto& list : aux_) list.clear();
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : forest_[v])
                if (v < w) {
                    aux_[v].push_back(w);
                    aux_[w].push_back(v);
                }
        for (size_t i = next; i < edges_.size(); ++i) {
            aux_[edges_[i].u].push_back(edges_[i].v);
            aux_[edges_[i].v].push_back(edges_[i].u);
        }
        for (Vertex s = 0; s < n_; ++s) {
            ++stamp_counter_;
            scratch_queue_.clear();
            scratch_queue_.push_back(s);
            stamp_[s] = stamp_counter_;
            depth_[s] = 0;
            for (size_t i = 0; i < scratch_queue_.size(); ++i) {
                Vertex a = scratch_queue_[i];
                if (depth_[a] >= bound) break;
                for (Vertex b : aux_[a])
                    if (stamp_[b] != stamp_counter_) {
                        stamp_[b] = stamp_counter_;
                        depth_[b] = depth_[a] + 1;
                        scratch_queue_.push_back(b);
                    }
            }
            for (Vertex y : g_.neighbors(s))
                if (stamp_[y] != stamp_counter_) return false;
        }
        return true;
    }

    void descend(size_t next, int included_count) {
        if (stopped_ || run_.exhausted) return;
        ++run_.nodes;
        if (over_budget()) {
            run_.exhausted = true;
            return;
        }
        if (included_count == n_ - 1) {
            ++run_.trees_seen;
            // Edges after `next` are implicitly excluded; the visitor checks
            // the full stretch itself.
            if (!on_tree_(included_)) stopped_ = true;
            return;
        }
        if (next >= edges_.size()) return;
        if (static_cast<int>(edges_.size() - next) < n_ - 1 - included_count) return;

        const Edge e = edges_[next];
        int ru = find(e.u), rv = find(e.v);

        if (ru != rv) {
            // include branch
            dsu_parent_[ru] = rv;
            forest_[e.u].push_back(e.v);
            forest_[e.v].push_back(e.u);
            included_.push_back(e);

            if (merged_component_ok(e, bound_())) descend(next + 1, included_count + 1);

            included_.pop_back();
            forest_[e.u].pop_back();
            forest_[e.v].pop_back();
            dsu_parent_[ru] = ru;
        }

        if (stopped_ || run_.exhausted) return;

        // exclude branch: distances were already vetted when the endpoints
        // joined one component; only optimistic feasibility remains.
        if (relaxation_ok(next + 1, bound_())) descend(next + 1, included_count);
    }

    const Graph& g_;
    OracleBudget budget_;
    Clock::time_point start_;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> forest_;
    std::vector<int> dsu_parent_;
    std::vector<Edge> included_;
    std::vector<int> stamp_, depth_, bfs_parent_;
    std::vector<std::vector<Vertex>> aux_;
    std::vector<Vertex> scratch_queue_;
    int stamp_counter_ = 0;
    std::function<int()> bound_;
    std::function<bool(const std::vector<Edge>&)> on_tree_;
    bool stopped_ = false;
    OracleRun run_;
};

int stretch_of(const Graph& g, const std::vector<Edge>& tree_edges) {
    SpanningTree t(g, tree_edges);
    return stretch(t);
}

}  // namespace

ExactSigmaResult exact_sigma(const Graph& g, const OracleBudget& budget) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    ExactSigmaResult result;
    int n = g.vertex_count();
    if (g.edge_count() == n - 1) {
        // A tree host: the only spanning tree is the host itself.
        result.sigma = 1;
        result.tree = g.edges();
        return result;
    }

    std::vector<Edge> incumbent_tree = bfs_tree(g);
    int incumbent = stretch_of(g, incumbent_tree);

    TreeSearch search(g, budget);
    bool complete = search.run(
        [&]() { return incumbent - 1; },
        [&](const std::vector<Edge>& edges) {
            int s = stretch_of(g, edges);
            if (s < incumbent) {
                incumbent = s;
                incumbent_tree = edges;
            }
            return true;
        });
    result.run = search.run_stats();
    if (!complete) {
        result.run.exhausted = true;
        return result;  // unknown
    }
    result.sigma = incumbent;
    result.tree = incumbent_tree;
    return result;
}

SigmaDecision decide_sigma_le(const Graph& g, int k, const OracleBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    SigmaDecision result;
    int n = g.vertex_count();
    if (n <= 1) {
        result.answer = Answer::yes;
        result.tree = std::vector<Edge>{};
        return result;
    }

    std::optional<std::vector<Edge>> found;
    TreeSearch search(g, budget);
    bool complete = search.run(
        [&]() { return k; },
        [&](const std::vector<Edge>& edges) {
            if (stretch_of(g, edges) <= k) {
                found = edges;
                return false;
            }
            return true;
        });
    result.run = search.run_stats();
    if (found) {
        // Hard re-verification of the witness.
        SpanningTree t(g, *found);
        if (stretch(t) > k) throw std::logic_error("oracle witness failed verification");
        result.answer = Answer::yes;
        result.tree = found;
        return result;
    }
    if (!complete) {
        result.answer = Answer::unknown;
        result.run.exhausted = true;
        return result;
    }
    result.answer = Answer::no;
    return result;
}

bool for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const std::vector<Edge>&)>& visit) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    int n = g.vertex_count();
    if (n <= 1) return visit({});
    OracleBudget unlimited;
    unlimited.max_nodes = std::numeric_limits<long long>::max();
    unlimited.time_limit_seconds = 1e18;
    TreeSearch search(g, unlimited);
    bool aborted = false;
    search.run([&]() { return g.vertex_count(); },  // never prunes: distances <= n-1
               [&](const std::vector<Edge>& edges) {
                   if (!visit(edges)) {
                       aborted = true;
                       return false;
                   }
                   return true;
               });
    return !aborted;
}

std::optional<std::vector<Vertex>> ics_bruteforce(const IcsInstance& inst) {
    inst.validate();
    int r = static_cast<int>(inst.fixed_edges.size());
    if (r > 20) throw std::invalid_argument("instance too large for brute force");
    std::vector<Vertex> pick(r);
    // Lexicographic over the selection sequence: edge 0 varies slowest and
    // the smaller endpoint is tried first.
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            const Edge& e = inst.fixed_edges[i];
            pick[i] = (mask >> (r - 1 - i)) & 1 ? e.v : e.u;
            for (int j = 0; j < i && ok; ++j)
                if (inst.conflicts.has_edge(pick[i], pick[j])) ok = false;
        }
        if (ok) return pick;
    }
    return std::nullopt;
}

}  // namespace treespan

#include "treespan/recognizer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace treespan {

namespace {

bool in_set(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<Vertex> invert_map(const std::vector<Vertex>& to_host, int host_n) {
    std::vector<Vertex> inv(host_n, -1);
    for (size_t i = 0; i < to_host.size(); ++i) inv[to_host[i]] = static_cast<Vertex>(i);
    return inv;
}

}  // namespace

std::optional<SpanningTree> basic_procedure(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("graph too small");
    for (const Edge& e : g.edges()) {
        std::vector<Edge> tree{e};
        bool ok = true;
        for (Vertex w = 0; w < n && ok; ++w) {
            if (w == e.u || w == e.v) continue;
            if (g.has_edge(w, e.u))
                tree.emplace_back(w, e.u);
            else if (g.has_edge(w, e.v))
                tree.emplace_back(w, e.v);
            else
                ok = false;
        }
        if (ok) return SpanningTree(g, std::move(tree));
    }
    return std::nullopt;
}

std::vector<NeighborCutDecomposition> find_neighbor_cuts(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    std::vector<NeighborCutDecomposition> out;
    int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        VertexSet x = closed_neighborhood(g, v);
        if (static_cast<int>(x.size()) >= n) continue;
        auto parts = components(g, x);
        if (parts.size() < 2) continue;
        NeighborCutDecomposition d;
        d.center = v;
        d.x = std::move(x);
        d.parts = std::move(parts);
        for (const auto& part : d.parts) {
            VertexSet verts;
            std::merge(d.x.begin(), d.x.end(), part.begin(), part.end(),
                       std::back_inserter(verts));
            d.x_components.push_back(induced_subgraph(g, verts));
        }
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

// Pattern behind the reduction: part index and the neighbor of the center
// adjacent to the whole part, if any. Requires exactly two parts.
std::optional<std::pair<int, Vertex>> reduction_pattern(
    const Graph& g, const NeighborCutDecomposition& cut) {
    if (cut.parts.size() != 2) return std::nullopt;
    for (int i = 0; i < 2; ++i) {
        for (Vertex u : g.neighbors(cut.center)) {
            bool covers = true;
            for (Vertex w : cut.parts[i])
                if (!g.has_edge(u, w)) {
                    covers = false;
                    break;
                }
            if (covers) return std::make_pair(i, u);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Graph> apply_reduction(const Graph& g, const NeighborCutDecomposition& cut) {
    auto pattern = reduction_pattern(g, cut);
    if (!pattern) return std::nullopt;
    const VertexSet& removed = cut.parts[pattern->first];
    VertexSet keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!in_set(removed, v)) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

FixedSubtree fixed_subtree(const Graph& g_i, const SpanningTree& t_i,
                           const VertexSet& x, Vertex v) {
    if (&t_i.host() != &g_i) throw std::invalid_argument("tree/graph mismatch");
    int n = g_i.vertex_count();
    std::vector<char> in_x(n, 0);
    for (Vertex w : x) {
        if (w < 0 || w >= n) throw std::out_of_range("cut vertex out of range");
        in_x[w] = 1;
    }
    if (!in_x[v]) throw std::invalid_argument("center not in cut");

    std::vector<Edge> outside, pool;
    for (const Edge& e : t_i.edges()) {
        if (in_x[e.u] && in_x[e.v]) {
            if (e.u != v && e.v != v) pool.push_back(e);
        } else {
            outside.push_back(e);
        }
    }

    FixedSubtree out;
    if (outside.empty()) return out;  // tree lives inside G[X]: nothing is fixed

    out.attachments.clear();
    for (const Edge& e : outside) {
        if (in_x[e.u]) out.attachments.push_back(e.u);
        if (in_x[e.v]) out.attachments.push_back(e.v);
    }
    std::sort(out.attachments.begin(), out.attachments.end());
    out.attachments.erase(std::unique(out.attachments.begin(), out.attachments.end()),
                          out.attachments.end());

    // Components of the outside forest.
    std::vector<int> comp(n, -1);
    {
        std::vector<std::vector<Vertex>> adj(n);
        for (const Edge& e : outside) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        int c = 0;
        for (const Edge& e : outside) {
            if (comp[e.u] != -1) continue;
            std::queue<Vertex> q;
            q.push(e.u);
            comp[e.u] = c;
            while (!q.empty()) {
                Vertex a = q.front();
                q.pop();
                for (Vertex b : adj[a])
                    if (comp[b] == -1) {
                        comp[b] = c;
                        q.push(b);
                    }
            }
            ++c;
        }
        int pieces = c;
        if (pieces == 1) {
            out.support_edges = outside;
            out.vertices = out.attachments;
            if (out.attachments.size() == 1) out.anchor = out.attachments[0];
            return out;
        }
    }

    // Several outside pieces: connect them inside G[X] - v along t_i. The
    // connector is the pruned subtree of (outside + pool) edges keeping every
    // outside endpoint.
    std::vector<std::vector<Edge>> incident(n);
    std::vector<char> required(n, 0);
    for (const Edge& e : outside) {
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
        required[e.u] = required[e.v] = 1;
    }
    for (const Edge& e : pool) {
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
    }

    // All outside pieces must share one component of t_i - v.
    {
        std::vector<char> seen(n, 0);
        std::queue<Vertex> q;
        Vertex start = outside.front().u;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (const Edge& e : incident[a]) {
                Vertex b = a == e.u ? e.v : e.u;
                if (!seen[b]) {
                    seen[b] = 1;
                    q.push(b);
                }
            }
        }
        for (const Edge& e : outside)
            if (!seen[e.u] || !seen[e.v])
                throw std::runtime_error("disconnected-fixed-subtree");
    }

    // Peel pendant pool edges whose endpoint is not needed.
    std::vector<int> degree(n, 0);
    std::vector<char> removed_edge_flag;
    std::vector<Edge> all_edges = outside;
    all_edges.insert(all_edges.end(), pool.begin(), pool.end());
    std::map<Edge, int> edge_index;
    for (size_t i = 0; i < all_edges.size(); ++i) edge_index[all_edges[i]] = static_cast<int>(i);
    removed_edge_flag.assign(all_edges.size(), 0);
    // Restrict to the reachable component first.
    {
        std::vector<char> seen(n, 0);
        std::queue<Vertex> q;
        q.push(outside.front().u);
        seen[outside.front().u] = 1;
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (const Edge& e : incident[a]) {
                Vertex b = a == e.u ? e.v : e.u;
                if (!seen[b]) {
                    seen[b] = 1;
                    q.push(b);
                }
            }
        }
        for (size_t i = 0; i < all_edges.size(); ++i)
            if (!seen[all_edges[i].u]) removed_edge_flag[i] = 1;
    }
    for (size_t i = 0; i < all_edges.size(); ++i)
        if (!removed_edge_flag[i]) {
            ++degree[all_edges[i].u];
            ++degree[all_edges[i].v];
        }
    bool peeled = true;
    while (peeled) {
        peeled = false;
        for (size_t i = outside.size(); i < all_edges.size(); ++i) {
            if (removed_edge_flag[i]) continue;
            const Edge& e = all_edges[i];
            Vertex leaf = -1;
            if (degree[e.u] == 1 && !required[e.u]) leaf = e.u;
            else if (degree[e.v] == 1 && !required[e.v]) leaf = e.v;
            if (leaf == -1) continue;
            removed_edge_flag[i] = 1;
            --degree[e.u];
            --degree[e.v];
            peeled = true;
        }
    }

    for (size_t i = 0; i < all_edges.size(); ++i) {
        if (removed_edge_flag[i]) continue;
        out.support_edges.push_back(all_edges[i]);
        if (i >= outside.size()) out.edges.push_back(all_edges[i]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.support_edges.begin(), out.support_edges.end());

    out.vertices = out.attachments;
    for (const Edge& e : out.edges) {
        out.vertices.push_back(e.u);
        out.vertices.push_back(e.v);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
}

namespace {

// One placement choice for a unit: the vertex wired to the center, optional
// connection edges beyond that spoke, and the exact depth every vertex of
// the unit (X-side and outside alike) takes in the assembled tree.
struct UnitOption {
    Vertex contact = -1;      // receives the spoke from the center
    std::vector<Edge> extra;  // connection edges beyond the spoke
    std::vector<std::pair<Vertex, int>> placed;
    VertexSet covers;         // X-vertices this option accounts for
};

struct UnitChoices {
    std::vector<UnitOption> options;
    bool free_single_edge = false;  // both endpoints of one fixed edge viable
};

// Two placements clash when adjacent vertices of different branches would
// sit at combined depth four or more (their tree path runs through the
// center), or when a shared vertex gets two different depths. Options that
// share a vertex live in one branch; the assembly validator has the final
// say there.
bool options_conflict(const Graph& g, const UnitOption& a, const UnitOption& b) {
    bool shared = false;
    for (const auto& [wa, da] : a.placed)
        for (const auto& [wb, db] : b.placed)
            if (wa == wb) {
                if (da != db) return true;
                shared = true;
            }
    if (shared) return false;
    for (const auto& [wa, da] : a.placed)
        for (const auto& [wb, db] : b.placed)
            if (da + db >= 4 && g.has_edge(wa, wb)) return true;
    return false;
}

// Depths over the unit's support subtree from `root`, root at depth `base`.
std::vector<std::pair<Vertex, int>> support_depths(const FixedSubtree& s, Vertex root,
                                                   int base, int n) {
    std::vector<std::pair<Vertex, int>> placed{{root, base}};
    if (s.support_edges.empty()) return placed;
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : s.support_edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> depth(n, -1);
    std::queue<Vertex> q;
    q.push(root);
    depth[root] = base;
    while (!q.empty()) {
        Vertex a = q.front();
        q.pop();
        for (Vertex b : adj[a])
            if (depth[b] == -1) {
                depth[b] = depth[a] + 1;
                placed.emplace_back(b, depth[b]);
                q.push(b);
            }
    }
    return placed;
}

// Paper-shaped options: a contact inside the unit wired straight to the
// center. Valid contacts keep every X-side vertex of the unit within depth
// three (the center is adjacent to all of X), which is the radius-two
// condition; candidates come out sorted by eccentricity, centers first.
void add_direct_options(const FixedSubtree& s, int n, std::vector<UnitOption>& out) {
    std::vector<std::pair<int, Vertex>> ranked;
    std::vector<std::vector<std::pair<Vertex, int>>> layouts;
    for (Vertex c : s.vertices) {
        auto placed = support_depths(s, c, 1, n);
        int ecc = 0;
        size_t seen = 0;
        for (const auto& [w, d] : placed)
            if (in_set(s.vertices, w)) {
                ecc = std::max(ecc, d - 1);
                ++seen;
            }
        if (seen != s.vertices.size() || ecc > 2) continue;
        ranked.emplace_back(ecc, c);
        layouts.push_back(std::move(placed));
    }
    std::vector<size_t> order(ranked.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return ranked[a] < ranked[b];
    });
    for (size_t i : order) {
        UnitOption o;
        o.contact = ranked[i].second;
        o.placed = layouts[i];
        o.covers = s.vertices;
        out.push_back(std::move(o));
    }
}

// Extended options: the whole unit hangs one level deeper through an
// X-vertex z adjacent to one of its vertices; z takes the spoke, the unit
// vertex t links to z. Still bounded by the depth-three limit on X-side
// vertices.
void add_via_options(const Graph& g, const VertexSet& x, Vertex v, const FixedSubtree& s,
                     std::vector<UnitOption>& out) {
    int n = g.vertex_count();
    VertexSet support_verts = s.vertices;
    for (const Edge& e : s.support_edges) {
        support_verts.push_back(e.u);
        support_verts.push_back(e.v);
    }
    std::sort(support_verts.begin(), support_verts.end());
    support_verts.erase(std::unique(support_verts.begin(), support_verts.end()),
                        support_verts.end());
    for (Vertex t : support_verts) {
        for (Vertex z : x) {
            if (z == v || in_set(s.vertices, z) || !g.has_edge(z, t)) continue;
            auto placed = support_depths(s, t, 2, n);
            bool ok = true;
            size_t seen = 0;
            for (const auto& [w, d] : placed)
                if (in_set(s.vertices, w)) {
                    ++seen;
                    if (d > 3) ok = false;
                }
            if (!ok || seen != s.vertices.size()) continue;
            placed.emplace_back(z, 1);
            UnitOption o;
            o.contact = z;
            o.extra = {Edge(z, t)};
            o.placed = std::move(placed);
            o.covers = s.vertices;
            o.covers.insert(std::lower_bound(o.covers.begin(), o.covers.end(), z), z);
            out.push_back(std::move(o));
        }
    }
}

}  // namespace

std::optional<CfeSolution> solve_cfe(const Graph& g, const VertexSet& x, Vertex v,
                                     const std::vector<FixedSubtree>& subtrees,
                                     const std::vector<char>& remainder_forbidden,
                                     std::string* fail_reason) {
    auto fail = [&](const char* why) -> std::optional<CfeSolution> {
        if (fail_reason) *fail_reason = why;
        return std::nullopt;
    };
    if (!in_set(x, v)) throw std::invalid_argument("center not in cut");
    int n = g.vertex_count();
    int k = static_cast<int>(subtrees.size());
    auto parts = components(g, x);
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < parts.size(); ++p)
        for (Vertex w : parts[p]) part_of[w] = static_cast<int>(p);

    // Build the option lists.
    std::vector<UnitChoices> units(k);
    for (int i = 0; i < k; ++i) {
        const FixedSubtree& s = subtrees[i];
        if (s.vertices.empty()) continue;  // no constraint from this child
        if (s.vertices.size() == 1) {
            UnitOption o;
            o.contact = s.vertices[0];
            o.placed = {{s.vertices[0], 1}};
            units[i].options.push_back(std::move(o));
            continue;
        }
        // Distances among the unit's X-side vertices along the support tree.
        std::vector<std::vector<Vertex>> adj(n);
        for (const Edge& e : s.support_edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<std::vector<int>> dist(s.vertices.size());
        for (size_t a = 0; a < s.vertices.size(); ++a) {
            std::vector<int> d(n, -1);
            std::queue<Vertex> q;
            q.push(s.vertices[a]);
            d[s.vertices[a]] = 0;
            while (!q.empty()) {
                Vertex w = q.front();
                q.pop();
                for (Vertex z : adj[w])
                    if (d[z] == -1) {
                        d[z] = d[w] + 1;
                        q.push(z);
                    }
            }
            dist[a].resize(s.vertices.size());
            for (size_t b = 0; b < s.vertices.size(); ++b) dist[a][b] = d[s.vertices[b]];
        }
        int best_ecc = -1;
        std::vector<std::pair<int, size_t>> by_ecc;
        for (size_t a = 0; a < s.vertices.size(); ++a) {
            int ecc = 0;
            for (size_t b = 0; b < s.vertices.size(); ++b) {
                if (dist[a][b] < 0) return fail("radius");  // defensive
                ecc = std::max(ecc, dist[a][b]);
            }
            by_ecc.emplace_back(ecc, a);
            if (best_ecc == -1 || ecc < best_ecc) best_ecc = ecc;
        }
        // A contact must see every X-side vertex of its unit within depth
        // three of the center, i.e. within distance two.
        if (best_ecc > 2) return fail("radius");
        std::sort(by_ecc.begin(), by_ecc.end());
        for (const auto& [ecc, a] : by_ecc) {
            if (ecc > 2) break;
            UnitOption o;
            o.contact = s.vertices[a];
            for (size_t b = 0; b < s.vertices.size(); ++b)
                o.placed.emplace_back(s.vertices[b], 1 + dist[a][b]);
            units[i].options.push_back(std::move(o));
        }
        if (s.edges.size() == 1 && units[i].options.size() == 2)
            units[i].free_single_edge = true;
    }

    // An option is dead when a vertex it places below the contact touches
    // another child's outside part, or a banned vertex sits below the contact.
    auto unary_ok = [&](int i, const UnitOption& o) {
        for (const auto& [w, depth] : o.placed) {
            if (depth < 2) continue;
            if (!remainder_forbidden.empty() && remainder_forbidden[w]) return false;
            for (Vertex z : g.neighbors(w)) {
                int p = part_of[z];
                if (p != -1 && p != subtrees[i].owner_index) return false;
            }
        }
        return true;
    };
    for (int i = 0; i < k; ++i) {
        auto& opts = units[i].options;
        opts.erase(std::remove_if(opts.begin(), opts.end(),
                                  [&](const UnitOption& o) { return !unary_ok(i, o); }),
                   opts.end());
        if (!subtrees[i].vertices.empty() && opts.empty()) return fail("conflict");
    }

    // Fixpoint: options clashing with a fully forced unit die; a unit left
    // with one option becomes forced itself.
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < k; ++i) {
                if (units[i].options.size() != 1) continue;
                for (int j = 0; j < k; ++j) {
                    if (j == i || units[j].options.size() <= 1) continue;
                    auto& opts = units[j].options;
                    size_t before = opts.size();
                    opts.erase(std::remove_if(opts.begin(), opts.end(),
                                              [&](const UnitOption& o) {
                                                  return options_conflict(
                                                      g, units[i].options[0], o);
                                              }),
                               opts.end());
                    if (opts.empty()) return fail("conflict");
                    if (opts.size() != before) changed = true;
                }
            }
        }
    }

    std::vector<int> open;  // units still offering a choice
    for (int i = 0; i < k; ++i)
        if (units[i].options.size() >= 2) open.push_back(i);

    CfeSolution solution;
    solution.contacts.assign(k, -1);
    for (int i = 0; i < k; ++i)
        if (units[i].options.size() == 1) solution.contacts[i] = units[i].options[0].contact;

    if (open.empty()) {
        // Forced layout; verify pairwise consistency.
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (units[i].options.empty() || units[j].options.empty()) continue;
                if (options_conflict(g, units[i].options[0], units[j].options[0]))
                    return fail("conflict");
            }
        return solution;
    }

    bool all_single_edges = std::all_of(open.begin(), open.end(), [&](int i) {
        return units[i].free_single_edge && units[i].options.size() == 2;
    });
    if (all_single_edges) {
        // The cover solver needs a matching; overlapping endpoints go through
        // the general path instead.
        VertexSet ends;
        for (int i : open) {
            ends.push_back(subtrees[i].edges[0].u);
            ends.push_back(subtrees[i].edges[0].v);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
            all_single_edges = false;
    }

    if (all_single_edges) {
        // The open part is exactly an independent-cover instance over the
        // free fixed edges; the cover picks the non-contact endpoints.
        IcsInstance inst;
        inst.conflicts = g;
        for (int i : open) inst.fixed_edges.push_back(subtrees[i].edges[0]);
        solution.used_ics = true;
        auto cover = solve_ics(inst);
        if (!cover) return fail("ics");
        for (size_t idx = 0; idx < open.size(); ++idx) {
            const Edge& e = subtrees[open[idx]].edges[0];
            Vertex remainder = (*cover)[idx];
            solution.contacts[open[idx]] = remainder == e.u ? e.v : e.u;
        }
        return solution;
    }

    // General residue: at most two options per unit go through the shared
    // binary-choice core; wider units are enumerated outermost.
    std::vector<int> wide, binary;
    for (int i : open)
        (units[i].options.size() > 2 ? wide : binary).push_back(i);

    long long combos = 1;
    for (int i : wide) {
        combos *= static_cast<long long>(units[i].options.size());
        if (combos > 256) break;
    }
    if (combos > 256) {
        // Trim to the two best-ranked options per unit; flagged by the caller.
        for (int i : wide) units[i].options.resize(2);
        binary.insert(binary.end(), wide.begin(), wide.end());
        wide.clear();
        combos = 1;
    }

    std::vector<size_t> pick(wide.size(), 0);
    while (true) {
        // Forced units plus the current wide picks become fixed obstacles.
        bool compatible = true;
        std::vector<const UnitOption*> fixed;
        for (int i = 0; i < k; ++i)
            if (units[i].options.size() == 1) fixed.push_back(&units[i].options[0]);
        for (size_t w = 0; w < wide.size(); ++w)
            fixed.push_back(&units[wide[w]].options[pick[w]]);
        for (size_t a = 0; a < fixed.size() && compatible; ++a)
            for (size_t b = a + 1; b < fixed.size() && compatible; ++b)
                if (options_conflict(g, *fixed[a], *fixed[b])) compatible = false;

        if (compatible) {
            int m = static_cast<int>(binary.size());
            std::vector<std::vector<char>> conflict(2 * m, std::vector<char>(2 * m, 0));
            std::vector<char> dead(2 * m, 0);
            for (int a = 0; a < m; ++a)
                for (int oa = 0; oa < 2; ++oa) {
                    const UnitOption& A = units[binary[a]].options[oa];
                    for (const UnitOption* f : fixed)
                        if (options_conflict(g, A, *f)) dead[2 * a + oa] = 1;
                    for (int b = a + 1; b < m; ++b)
                        for (int ob = 0; ob < 2; ++ob)
                            if (options_conflict(g, A, units[binary[b]].options[ob]))
                                conflict[2 * a + oa][2 * b + ob] =
                                    conflict[2 * b + ob][2 * a + oa] = 1;
                }
            auto choice = detail::solve_binary_choices(m, conflict, dead);
            if (choice) {
                for (int a = 0; a < m; ++a)
                    solution.contacts[binary[a]] = units[binary[a]].options[(*choice)[a]].contact;
                for (size_t w = 0; w < wide.size(); ++w)
                    solution.contacts[wide[w]] = units[wide[w]].options[pick[w]].contact;
                return solution;
            }
        }

        // Next wide combination.
        size_t idx = 0;
        while (idx < wide.size()) {
            if (++pick[idx] < units[wide[idx]].options.size()) break;
            pick[idx] = 0;
            ++idx;
        }
        if (idx >= wide.size()) break;
    }
    return fail("choices");
}

SpanningTree assemble_tree(const Graph& g, const NeighborCutDecomposition& cut,
                           const std::vector<SpanningTree>& child_trees,
                           const std::vector<FixedSubtree>& subtrees,
                           const CfeSolution& contacts) {
    if (child_trees.size() != cut.x_components.size())
        throw std::invalid_argument("one child tree per X-component expected");

    std::vector<char> in_x(g.vertex_count(), 0);
    for (Vertex w : cut.x) in_x[w] = 1;

    std::vector<Edge> tree;
    // Child edges outside G[X], mapped back to host coordinates.
    for (size_t i = 0; i < child_trees.size(); ++i) {
        const Subgraph& sub = cut.x_components[i];
        for (const Edge& e : child_trees[i].edges()) {
            Edge h = sub.host_edge(e);
            if (!(in_x[h.u] && in_x[h.v])) tree.push_back(h);
        }
    }
    // Fixed subtree edges and contact spokes.
    std::vector<char> covered(g.vertex_count(), 0);
    for (const FixedSubtree& s : subtrees) {
        tree.insert(tree.end(), s.edges.begin(), s.edges.end());
        for (Vertex w : s.vertices) covered[w] = 1;
    }
    for (size_t i = 0; i < subtrees.size() && i < contacts.contacts.size(); ++i)
        if (contacts.contacts[i] != -1) tree.emplace_back(cut.center, contacts.contacts[i]);
    // Star over the untouched part of X.
    for (Vertex w : cut.x)
        if (w != cut.center && !covered[w]) tree.emplace_back(cut.center, w);

    std::sort(tree.begin(), tree.end());
    tree.erase(std::unique(tree.begin(), tree.end()), tree.end());

    try {
        SpanningTree t(g, std::move(tree));
        if (stretch(t) > 3) throw std::runtime_error("assembly-verification-failed");
        return t;
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("assembly-verification-failed");
    }
}

// ---------------------------------------------------------------------------
// Recognition driver
// ---------------------------------------------------------------------------

namespace {

struct DriverCtx {
    const Graph* root = nullptr;
    RecognitionTrace* trace = nullptr;
    // Recognized subgraphs keyed by their root-coordinate vertex set; the
    // stored certificate is in root coordinates too.
    std::map<VertexSet, std::optional<std::vector<Edge>>> memo;
    std::string witness;
    bool saw_cfe_failure = false;
    bool saw_child_failure = false;
};

int add_node(DriverCtx& ctx, int parent, int level, VertexSet root_verts,
             std::string status) {
    TraceNode node;
    node.id = static_cast<int>(ctx.trace->nodes.size());
    node.parent = parent;
    node.level = level;
    node.vertices = std::move(root_verts);
    node.status = std::move(status);
    ctx.trace->nodes.push_back(std::move(node));
    return ctx.trace->nodes.back().id;
}

std::optional<std::vector<Edge>> recognize_connected(DriverCtx& ctx, const Graph& g,
                                                     const std::vector<Vertex>& to_root,
                                                     int level, int parent_node);

// One 2-connected block (or a single edge). Returns a certificate in the
// block's local coordinates.
std::optional<std::vector<Edge>> recognize_block(DriverCtx& ctx, const Graph& b,
                                                 const std::vector<Vertex>& to_root,
                                                 int level, int node_id,
                                                 bool reductions_ok) {
    int n = b.vertex_count();

    if (auto t = basic_procedure(b)) {
        ctx.trace->nodes[node_id].status = "terminal";
        return t->edges();
    }

    auto cuts = find_neighbor_cuts(b);
    if (cuts.empty()) {
        ctx.trace->nodes[node_id].status = "failed";
        if (ctx.witness.empty()) ctx.witness = "no-neighbor-cut";
        return std::nullopt;
    }

    if (reductions_ok) {
        for (const auto& cut : cuts) {
            auto pattern = reduction_pattern(b, cut);
            if (!pattern) continue;
            auto [side, u] = *pattern;
            const VertexSet& removed = cut.parts[side];
            VertexSet keep;
            for (Vertex w = 0; w < n; ++w)
                if (!in_set(removed, w)) keep.push_back(w);
            Subgraph reduced = induced_subgraph(b, keep);
            ReductionRecord rec;
            rec.node_id = node_id;
            rec.center = to_root[cut.center];
            rec.attachment = to_root[u];
            for (Vertex w : removed) rec.removed.push_back(to_root[w]);
            ctx.trace->reductions.push_back(rec);

            std::vector<Vertex> sub_to_root(reduced.to_host.size());
            for (size_t i = 0; i < reduced.to_host.size(); ++i)
                sub_to_root[i] = to_root[reduced.to_host[i]];
            auto sub = recognize_connected(ctx, reduced.graph, sub_to_root, level + 1, node_id);
            if (sub) {
                std::vector<Edge> kept;
                for (const Edge& e : *sub) kept.push_back(reduced.host_edge(e));
                // First the direct extension, then the variant replacing the
                // G[X] part of the kept tree by the spanning star of G[X].
                std::vector<char> in_x(n, 0);
                for (Vertex w : cut.x) in_x[w] = 1;
                std::vector<Edge> starred;
                for (const Edge& e : kept)
                    if (!(in_x[e.u] && in_x[e.v])) starred.push_back(e);
                for (Vertex w : cut.x)
                    if (w != cut.center) starred.emplace_back(cut.center, w);
                for (auto* base : {&kept, &starred}) {
                    std::vector<Edge> tree = *base;
                    for (Vertex w : removed) tree.emplace_back(u, w);
                    std::sort(tree.begin(), tree.end());
                    tree.erase(std::unique(tree.begin(), tree.end()), tree.end());
                    try {
                        SpanningTree t(b, tree);
                        if (stretch(t) <= 3) {
                            ctx.trace->nodes[node_id].status = "internal";
                            ctx.trace->nodes[node_id].cut_center = to_root[cut.center];
                            return t.edges();
                        }
                    } catch (const std::invalid_argument&) {
                    }
                }
                ctx.trace->flags.push_back("reduction-extension-failed");
            }
            // Either the reduced side said no or the extension did not
            // verify; fall back to the full cut search on this block.
            ctx.trace->flags.push_back("rerun-without-reductions");
            return recognize_block(ctx, b, to_root, level, node_id, false);
        }
    }

    for (const auto& cut : cuts) {
        ctx.trace->eta += static_cast<long long>(cut.x_components.size());

        // Recognize every X-component first.
        std::vector<SpanningTree> child_trees;
        std::vector<std::vector<Vertex>> child_to_root;
        bool children_ok = true;
        for (const Subgraph& child : cut.x_components) {
            std::vector<Vertex> ctr(child.to_host.size());
            for (size_t i = 0; i < child.to_host.size(); ++i)
                ctr[i] = to_root[child.to_host[i]];
            int child_node = add_node(ctx, node_id, level + 1, ctr, "pending");
            auto sub = recognize_connected(ctx, child.graph, ctr, level + 1, child_node);
            if (!sub) {
                children_ok = false;
                ctx.saw_child_failure = true;
                break;
            }
            child_trees.emplace_back(child.graph, *sub);
            child_to_root.push_back(std::move(ctr));
        }
        if (!children_ok) continue;

        // Fixed subtrees, mapped into block coordinates.
        std::vector<FixedSubtree> units;
        bool extraction_ok = true;
        for (size_t i = 0; i < cut.x_components.size(); ++i) {
            const Subgraph& child = cut.x_components[i];
            auto inv = invert_map(child.to_host, n);
            VertexSet x_local;
            for (Vertex w : cut.x) x_local.push_back(inv[w]);
            std::sort(x_local.begin(), x_local.end());
            try {
                FixedSubtree f =
                    fixed_subtree(child.graph, child_trees[i], x_local, inv[cut.center]);
                FixedSubtree mapped;
                mapped.owner_index = static_cast<int>(i);
                for (const Edge& e : f.edges) mapped.edges.push_back(child.host_edge(e));
                if (f.anchor) mapped.anchor = child.host_vertex(*f.anchor);
                for (Vertex w : f.vertices) mapped.vertices.push_back(child.host_vertex(w));
                for (Vertex w : f.attachments)
                    mapped.attachments.push_back(child.host_vertex(w));
                for (const Edge& e : f.support_edges)
                    mapped.support_edges.push_back(child.host_edge(e));
                std::sort(mapped.edges.begin(), mapped.edges.end());
                std::sort(mapped.vertices.begin(), mapped.vertices.end());
                std::sort(mapped.attachments.begin(), mapped.attachments.end());
                std::sort(mapped.support_edges.begin(), mapped.support_edges.end());
                units.push_back(std::move(mapped));
            } catch (const std::runtime_error&) {
                ctx.trace->flags.push_back("fixed-subtree-disconnected");
                extraction_ok = false;
                break;
            }
        }
        if (!extraction_ok) continue;

        ++ctx.trace->cfe_calls;
        std::string reason;
        auto cfe = solve_cfe(b, cut.x, cut.center, units, {}, &reason);
        if (cfe && cfe->used_ics) ++ctx.trace->ics_calls;

        CfeAttemptRecord rec;
        rec.node_id = node_id;
        rec.center = to_root[cut.center];
        for (const FixedSubtree& s : units) {
            CfeAttemptUnit u;
            u.owner = s.owner_index;
            if (s.anchor) u.anchor = to_root[*s.anchor];
            for (const Edge& e : s.edges) u.edges.emplace_back(to_root[e.u], to_root[e.v]);
            rec.units.push_back(std::move(u));
        }
        rec.success = cfe.has_value();
        rec.reason = cfe ? "" : reason;
        if (!cfe && reason == "ics") ++ctx.trace->ics_calls;
        ctx.trace->cfe_attempts.push_back(std::move(rec));

        if (!cfe) {
            ctx.saw_cfe_failure = true;
            continue;
        }

        try {
            SpanningTree assembled = assemble_tree(b, cut, child_trees, units, *cfe);
            auto report = check_theorem_32(b, assembled);
            if (!report.holds) ctx.trace->flags.push_back("certificate-condition-mismatch");
            ctx.trace->nodes[node_id].status = "internal";
            ctx.trace->nodes[node_id].cut_center = to_root[cut.center];
            return assembled.edges();
        } catch (const std::runtime_error&) {
            ctx.trace->flags.push_back("assembly-verification-failed");
            ctx.saw_cfe_failure = true;
            continue;
        }
    }

    ctx.trace->nodes[node_id].status = "failed";
    if (ctx.witness.empty())
        ctx.witness = ctx.saw_cfe_failure ? "CFE-fail"
                                          : (ctx.saw_child_failure ? "child-fail"
                                                                   : "no-neighbor-cut");
    return std::nullopt;
}

std::optional<std::vector<Edge>> recognize_connected(DriverCtx& ctx, const Graph& g,
                                                     const std::vector<Vertex>& to_root,
                                                     int level, int parent_node) {
    if (g.vertex_count() <= 1) return std::vector<Edge>{};

    auto hit = ctx.memo.find(to_root);
    if (hit != ctx.memo.end()) {
        if (parent_node >= 0 && parent_node < static_cast<int>(ctx.trace->nodes.size()))
            ctx.trace->nodes[parent_node].status = hit->second ? "terminal" : "failed";
        if (!hit->second) return std::nullopt;
        auto inv = invert_map(to_root, ctx.root->vertex_count());
        std::vector<Edge> local;
        for (const Edge& e : *hit->second) local.emplace_back(inv[e.u], inv[e.v]);
        return local;
    }

    std::optional<std::vector<Edge>> result = std::vector<Edge>{};
    auto block_list = blocks(g);
    for (const Subgraph& block : block_list) {
        std::vector<Vertex> block_to_root(block.to_host.size());
        for (size_t i = 0; i < block.to_host.size(); ++i)
            block_to_root[i] = to_root[block.to_host[i]];
        int node_id;
        if (block_list.size() == 1 && parent_node >= 0) {
            node_id = parent_node;  // 2-connected graph: the block is the node
        } else {
            node_id = add_node(ctx, parent_node, level, block_to_root, "block");
        }
        auto sub = recognize_block(ctx, block.graph, block_to_root, level, node_id, true);
        if (!sub) {
            result = std::nullopt;
            break;
        }
        for (const Edge& e : *sub) result->push_back(block.host_edge(e));
    }
    if (parent_node >= 0 && ctx.trace->nodes[parent_node].status == "pending")
        ctx.trace->nodes[parent_node].status = result ? "terminal" : "failed";

    // Memoize in root coordinates.
    std::optional<std::vector<Edge>> rooted;
    if (result) {
        rooted = std::vector<Edge>{};
        for (const Edge& e : *result) rooted->emplace_back(to_root[e.u], to_root[e.v]);
        std::sort(rooted->begin(), rooted->end());
    }
    ctx.memo[to_root] = rooted;
    return result;
}

}  // namespace

RecognitionOutcome recognize_sigma3(const Graph& g, RecognitionTrace* trace) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    if (g.vertex_count() < 2) throw std::invalid_argument("graph too small");

    RecognitionTrace local;
    DriverCtx ctx;
    ctx.root = &g;
    ctx.trace = trace ? trace : &local;
    ctx.trace->nodes.clear();
    ctx.trace->cfe_attempts.clear();
    ctx.trace->reductions.clear();

    std::vector<Vertex> identity(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    VertexSet all = identity;
    int root_node = add_node(ctx, -1, 0, all, "pending");

    auto result = recognize_connected(ctx, g, identity, 0, root_node);

    RecognitionOutcome out;
    if (result) {
        SpanningTree t(g, *result);
        if (stretch(t) > 3) throw std::logic_error("assembly-verification-failed");
        if (ctx.trace->nodes[root_node].status == "pending")
            ctx.trace->nodes[root_node].status = "terminal";
        out.admits = true;
        out.certificate = std::move(t);
    } else {
        ctx.trace->nodes[root_node].status = "failed";
        out.admits = false;
        out.witness = ctx.witness.empty() ? "child-fail" : ctx.witness;
    }
    return out;
}

}  // namespace treespan

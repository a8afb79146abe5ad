#include "treespan/verifier.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace treespan {

namespace {

void require_spanning(const Graph& g, const SpanningTree& t) {
    if (&t.host() != &g) throw std::invalid_argument("tree/graph mismatch");
}

bool in_set(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// Contacts of star-set s inside T restricted to the vertex set `h_mask`:
// members other than the center that are non-pendant there, i.e. have tree
// degree at least two within the restriction.
int contacts_within(const SpanningTree& t, const StarSet& s,
                    const std::vector<char>& h_mask) {
    int count = 0;
    for (Vertex u : s.members) {
        if (u == s.center) continue;
        int degree = 0;
        for (Vertex w : t.neighbors(u))
            if (h_mask[w]) ++degree;
        if (degree >= 2) ++count;
    }
    return count;
}

}  // namespace

ConditionReport check_theorem_31(const Graph& g, const SpanningTree& t) {
    require_spanning(g, t);
    ConditionReport report;
    if (tree_diameter(t) <= 2) {
        report.holds = true;
        report.condition = ConditionId::T31a;
        return report;
    }
    report.condition = ConditionId::T31b;
    for (const Edge& e : t.edges()) {
        if (t.degree(e.u) < 2 || t.degree(e.v) < 2) continue;  // outer edge
        VertexSet pair{e.u, e.v};
        auto parts = components(g, pair);
        if (parts.size() < 2) {
            report.violated_at = ConditionWitness{e, std::nullopt, pair,
                                                  "not-a-cut", {}, std::nullopt};
            return report;
        }
        for (const auto& part : parts) {
            std::vector<char> world(g.vertex_count(), 0);
            for (Vertex v : part) world[v] = 1;
            // uv is outer in T cap H iff u or v has no tree neighbor in the part.
            auto busy = [&](Vertex a, Vertex other) {
                for (Vertex w : t.neighbors(a))
                    if (w != other && world[w]) return true;
                return false;
            };
            if (busy(e.u, e.v) && busy(e.v, e.u)) {
                report.violated_at = ConditionWitness{
                    e, std::nullopt, pair, "not-outer-in-component", part, std::nullopt};
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

ConditionReport check_theorem_32(const Graph& g, const SpanningTree& t) {
    require_spanning(g, t);
    ConditionReport report;
    if (tree_diameter(t) <= 3) {
        report.holds = true;
        report.condition = ConditionId::T32I;
        return report;
    }
    report.condition = ConditionId::T32II;
    for (const StarSet& s : star_sets(t)) {
        if (!s.inner()) continue;
        if (static_cast<int>(s.members.size()) >= g.vertex_count() ||
            components(g, s.members).size() < 2) {
            report.violated_at = ConditionWitness{std::nullopt, s.center, s.members,
                                                  "not-a-cut", {}, std::nullopt};
            return report;
        }
        // No graph edge may join S-branches led from different contacts.
        // Branches hanging off one contact meet at distance two through it.
        std::vector<int> lead_contact(g.vertex_count(), -1);
        for (Vertex u : s.contacts) {
            for (Vertex w : t.neighbors(u)) {
                if (in_set(s.members, w)) continue;
                std::queue<Vertex> q;
                q.push(w);
                lead_contact[w] = u;
                while (!q.empty()) {
                    Vertex a = q.front();
                    q.pop();
                    for (Vertex b2 : t.neighbors(a))
                        if (!in_set(s.members, b2) && lead_contact[b2] == -1) {
                            lead_contact[b2] = u;
                            q.push(b2);
                        }
                }
            }
        }
        for (const Edge& e : g.edges()) {
            int cu = lead_contact[e.u], cv = lead_contact[e.v];
            if (cu != -1 && cv != -1 && cu != cv) {
                report.violated_at = ConditionWitness{std::nullopt, s.center, s.members,
                                                      "branch-adjacency", {}, e};
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

bool check_prop_33_equivalence(const Graph& g, const SpanningTree& t, const StarSet& s) {
    require_spanning(g, t);
    auto parts = components(g, s.members);
    if (parts.size() < 2) throw std::invalid_argument("star-set is not a cut");

    // (IIa) outer in T cap H for every S-component H = G[S u V_i].
    bool iia = true;
    for (const auto& part : parts) {
        std::vector<char> h_mask(g.vertex_count(), 0);
        for (Vertex v : part) h_mask[v] = 1;
        for (Vertex v : s.members) h_mask[v] = 1;
        if (contacts_within(t, s, h_mask) >= 2) {
            iia = false;
            break;
        }
    }

    // (IIb) tree neighborhoods of any two contacts, minus S, lie in
    // different components of g - S.
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (size_t c = 0; c < parts.size(); ++c)
        for (Vertex v : parts[c]) comp_of[v] = static_cast<int>(c);
    bool iib = true;
    std::vector<std::vector<int>> contact_comps;
    for (Vertex u : s.contacts) {
        std::vector<int> comps;
        for (Vertex w : t.neighbors(u))
            if (!in_set(s.members, w) && comp_of[w] != -1) comps.push_back(comp_of[w]);
        std::sort(comps.begin(), comps.end());
        comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
        contact_comps.push_back(std::move(comps));
    }
    for (size_t i = 0; i < contact_comps.size() && iib; ++i)
        for (size_t j = i + 1; j < contact_comps.size() && iib; ++j)
            for (int c : contact_comps[i])
                if (std::binary_search(contact_comps[j].begin(),
                                       contact_comps[j].end(), c)) {
                    iib = false;
                    break;
                }

    // (IIc) vertices in S-branches led from different contacts are
    // independent.
    std::vector<int> lead_contact(g.vertex_count(), -1);
    for (Vertex u : s.contacts) {
        for (Vertex w : t.neighbors(u)) {
            if (in_set(s.members, w)) continue;
            std::queue<Vertex> q;
            q.push(w);
            lead_contact[w] = u;
            while (!q.empty()) {
                Vertex a = q.front();
                q.pop();
                for (Vertex b2 : t.neighbors(a))
                    if (!in_set(s.members, b2) && lead_contact[b2] == -1) {
                        lead_contact[b2] = u;
                        q.push(b2);
                    }
            }
        }
    }
    bool iic = true;
    for (const Edge& e : g.edges()) {
        int cu = lead_contact[e.u], cv = lead_contact[e.v];
        if (cu != -1 && cv != -1 && cu != cv) {
            iic = false;
            break;
        }
    }

    return iia == iib && iib == iic;
}

namespace {

// Spanning tree with stretch <= 2 of H that contains every edge in
// `required`, or nullopt. H is 2-connected (or a single edge) throughout the
// recursion; every 2-vertex cut of H must be a tree edge of any such tree,
// which both splits the problem and propagates the requirement.
std::optional<std::vector<Edge>> sigma2_constrained(const Graph& h,
                                                    std::vector<Edge> required) {
    int n = h.vertex_count();
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());
    if (n <= 2) return h.edges();

    std::optional<std::pair<Vertex, Vertex>> cut;
    for (Vertex u = 0; u < n && !cut; ++u)
        for (Vertex v = u + 1; v < n && !cut; ++v)
            if (components(h, {u, v}).size() >= 2) cut = {u, v};

    if (!cut) {
        // No 2-vertex cut: only spanning stars qualify. The center must cover
        // every required edge and dominate H.
        for (Vertex c = 0; c < n; ++c) {
            if (h.degree(c) != n - 1) continue;
            bool covers = true;
            for (const Edge& r : required)
                if (r.u != c && r.v != c) {
                    covers = false;
                    break;
                }
            if (!covers) continue;
            std::vector<Edge> star;
            for (Vertex v = 0; v < n; ++v)
                if (v != c) star.emplace_back(c, v);
            return star;
        }
        return std::nullopt;
    }

    auto [p, q] = *cut;
    if (!h.has_edge(p, q)) return std::nullopt;
    Edge pq(p, q);
    auto parts = components(h, {p, q});
    std::vector<Edge> tree;
    for (const auto& part : parts) {
        VertexSet verts = part;
        verts.insert(std::lower_bound(verts.begin(), verts.end(), p), p);
        verts.insert(std::lower_bound(verts.begin(), verts.end(), q), q);
        Subgraph piece = induced_subgraph(h, verts);
        std::vector<Vertex> to_local(n, -1);
        for (size_t i = 0; i < piece.to_host.size(); ++i)
            to_local[piece.to_host[i]] = static_cast<Vertex>(i);
        std::vector<Edge> piece_required{Edge(to_local[p], to_local[q])};
        for (const Edge& r : required)
            if (to_local[r.u] != -1 && to_local[r.v] != -1)
                piece_required.emplace_back(to_local[r.u], to_local[r.v]);
        auto sub = sigma2_constrained(piece.graph, std::move(piece_required));
        if (!sub) return std::nullopt;
        for (const Edge& e : *sub) tree.push_back(piece.host_edge(e));
    }
    std::sort(tree.begin(), tree.end());
    tree.erase(std::unique(tree.begin(), tree.end()), tree.end());
    (void)pq;
    return tree;
}

}  // namespace

RecognitionOutcome recognize_sigma2(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    RecognitionOutcome out;
    int n = g.vertex_count();
    if (n <= 1) {
        out.admits = true;
        out.certificate.emplace(g, std::vector<Edge>{});
        return out;
    }
    std::vector<Edge> tree;
    for (const Subgraph& block : blocks(g)) {
        auto sub = sigma2_constrained(block.graph, {});
        if (!sub) {
            out.admits = false;
            out.witness = "block-admits-no-2-spanner";
            return out;
        }
        for (const Edge& e : *sub) tree.push_back(block.host_edge(e));
    }
    SpanningTree t(g, tree);
    if (stretch(t) > 2) throw std::logic_error("assembly-verification-failed");
    out.admits = true;
    out.certificate = std::move(t);
    return out;
}

}  // namespace treespan

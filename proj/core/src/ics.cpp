#include "treespan/ics.hpp"

#include <algorithm>
#include <stdexcept>

namespace treespan {

void IcsInstance::validate() const {
    std::vector<Vertex> seen;
    for (const Edge& e : fixed_edges) {
        if (e.u < 0 || e.v >= conflicts.vertex_count())
            throw std::invalid_argument("fixed edge endpoint out of range");
        seen.push_back(e.u);
        seen.push_back(e.v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("fixed edges are not a matching");
}

namespace detail {
namespace {

// Option x of some unit; its negation is the sibling option of the same unit.
inline int sibling(int x) { return x ^ 1; }

// Tarjan strongly connected components, iterative. Component ids come out in
// reverse topological order (sinks first).
std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1), low(n), num(n, -1), stk, frame_v, frame_i;
    int counter = 0, comps = 0;
    std::vector<char> on_stack(n, 0);
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        frame_v.push_back(root);
        frame_i.push_back(0);
        num[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = 1;
        while (!frame_v.empty()) {
            int v = frame_v.back();
            if (frame_i.back() < static_cast<int>(adj[v].size())) {
                int w = adj[v][frame_i.back()++];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    frame_v.push_back(w);
                    frame_i.push_back(0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                frame_v.pop_back();
                frame_i.pop_back();
                if (!frame_v.empty()) {
                    int p = frame_v.back();
                    low[p] = std::min(low[p], low[v]);
                }
            }
        }
    }
    return comp;
}

// Decision procedure for one binary-choice system. `alive` marks options
// still available; the vector is consumed by the internal propagation.
bool feasible(int unit_count, const std::vector<std::vector<char>>& conflict,
              std::vector<char> alive) {
    int k = unit_count;
    // Reduced options: an option clashing with every remaining option of some
    // other unit can never be picked, so it is deleted; deletions cascade.
    // A unit losing both options settles the answer.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < k; ++i) {
            if (!alive[2 * i] && !alive[2 * i + 1]) return false;
            for (int o = 0; o < 2; ++o) {
                int x = 2 * i + o;
                if (!alive[x]) continue;
                for (int j = 0; j < k; ++j) {
                    if (j == i) continue;
                    bool a0 = alive[2 * j] && conflict[x][2 * j];
                    bool a1 = alive[2 * j + 1] && conflict[x][2 * j + 1];
                    bool blocked;
                    if (alive[2 * j] && alive[2 * j + 1])
                        blocked = a0 && a1;
                    else
                        blocked = a0 || a1;
                    if (blocked) {
                        alive[x] = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    // Remaining relations pairwise touch at most one live option per side.
    // A parallel pair contributes implications both ways (its two conflicts
    // identify the independent diagonals), a serial conflict a one-way
    // implication, unrelated units none. Consistency is an implication-graph
    // condition: no unit may have its two options in one strongly connected
    // component.
    int n = 2 * k;
    std::vector<std::vector<int>> adj(n);
    for (int x = 0; x < n; ++x) {
        if (!alive[x]) {
            adj[x].push_back(sibling(x));
            continue;
        }
        for (int y = x + 1; y < n; ++y) {
            if (!alive[y] || (x >> 1) == (y >> 1)) continue;
            if (conflict[x][y]) {
                adj[x].push_back(sibling(y));
                adj[y].push_back(sibling(x));
            }
        }
    }
    std::vector<int> comp = scc(adj);
    for (int i = 0; i < k; ++i)
        if (comp[2 * i] == comp[2 * i + 1]) return false;
    return true;
}

}  // namespace

std::optional<std::vector<int>> solve_binary_choices(
    int unit_count, const std::vector<std::vector<char>>& conflict,
    const std::vector<char>& dead) {
    std::vector<char> alive(2 * unit_count, 1);
    for (int x = 0; x < 2 * unit_count && x < static_cast<int>(dead.size()); ++x)
        if (dead[x]) alive[x] = 0;
    if (!feasible(unit_count, conflict, alive)) return std::nullopt;
    std::vector<int> choice(unit_count, 0);
    for (int i = 0; i < unit_count; ++i) {
        bool take_first = false;
        if (alive[2 * i]) {
            auto trial = alive;
            trial[2 * i + 1] = 0;
            take_first = feasible(unit_count, conflict, trial);
        }
        if (take_first) {
            choice[i] = 0;
            alive[2 * i + 1] = 0;
        } else {
            choice[i] = 1;
            alive[2 * i] = 0;
        }
    }
    return choice;
}

}  // namespace detail

std::optional<std::vector<Vertex>> solve_ics(const IcsInstance& inst) {
    inst.validate();
    int r = static_cast<int>(inst.fixed_edges.size());
    if (r == 0) return std::vector<Vertex>{};
    auto end_of = [&](int i, int o) {
        const Edge& e = inst.fixed_edges[i];
        return o == 0 ? e.u : e.v;
    };
    std::vector<std::vector<char>> conflict(2 * r, std::vector<char>(2 * r, 0));
    for (int i = 0; i < r; ++i)
        for (int o = 0; o < 2; ++o)
            for (int j = 0; j < r; ++j)
                for (int p = 0; p < 2; ++p) {
                    if (i == j) continue;
                    if (inst.conflicts.has_edge(end_of(i, o), end_of(j, p)))
                        conflict[2 * i + o][2 * j + p] = 1;
                }
    auto choice = detail::solve_binary_choices(r, conflict, {});
    if (!choice) return std::nullopt;
    std::vector<Vertex> cover(r);
    for (int i = 0; i < r; ++i) cover[i] = end_of(i, (*choice)[i]);
    return cover;
}

}  // namespace treespan

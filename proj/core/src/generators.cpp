#include "treespan/generators.hpp"

#include <random>
#include <stdexcept>

namespace treespan {

namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

LabelPairs fig4_edges() {
    LabelPairs e;
    const char* core[6] = {"v1", "v2", "v3", "v4", "v5", "v6"};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) e.emplace_back(core[i], core[j]);
    // top path a-b-c-d hanging off v1, v2
    e.insert(e.end(), {{"a", "b"}, {"b", "c"}, {"c", "d"},
                       {"v1", "a"}, {"v1", "b"}, {"v1", "c"},
                       {"v2", "b"}, {"v2", "c"}, {"v2", "d"}});
    // bottom path e-f-g-h hanging off v3, v4
    e.insert(e.end(), {{"e", "f"}, {"f", "g"}, {"g", "h"},
                       {"v3", "e"}, {"v3", "f"}, {"v3", "g"},
                       {"v4", "f"}, {"v4", "g"}, {"v4", "h"}});
    // left path i-j-k-l hanging off v5, v6
    e.insert(e.end(), {{"i", "j"}, {"j", "k"}, {"k", "l"},
                       {"v5", "i"}, {"v5", "j"}, {"v5", "k"},
                       {"v6", "j"}, {"v6", "k"}, {"v6", "l"}});
    return e;
}

Graph numbered(int n, const std::vector<Edge>& edges) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Graph(n, edges, std::move(labels));
}

int param(const NamedGraphSpec& spec, size_t idx, int least) {
    if (spec.params.size() <= idx)
        throw std::invalid_argument("missing parameter for generator " + spec.name);
    int v = spec.params[idx];
    if (v < least)
        throw std::invalid_argument("parameter out of range for generator " + spec.name);
    return v;
}

}  // namespace

Graph generate(const NamedGraphSpec& spec) {
    if (spec.name == "petersen") {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);          // outer cycle
            e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
            e.emplace_back(i, 5 + i);                // spokes
        }
        return numbered(10, e);
    }
    if (spec.name == "fig4") return Graph::from_edge_list(fig4_edges());
    if (spec.name == "fig5") {
        LabelPairs e = fig4_edges();
        std::erase_if(e, [](const auto& p) {
            return (p.first == "v4" && p.second == "v5") ||
                   (p.first == "v5" && p.second == "v4");
        });
        return Graph::from_edge_list(e);
    }
    if (spec.name == "cycle") {
        int n = param(spec, 0, 3);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return numbered(n, e);
    }
    if (spec.name == "complete") {
        int n = param(spec, 0, 1);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return numbered(n, e);
    }
    if (spec.name == "complete_bipartite") {
        int a = param(spec, 0, 1), b = param(spec, 1, 1);
        std::vector<Edge> e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
        return numbered(a + b, e);
    }
    if (spec.name == "path") {
        int n = param(spec, 0, 1);
        std::vector<Edge> e;
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return numbered(n, e);
    }
    if (spec.name == "two_blocks_demo") {
        // K4 sharing a cut vertex with a 5-cycle: block stretches 2 and 4.
        std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                            {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}};
        return numbered(8, e);
    }
    throw std::invalid_argument("unknown generator: " + spec.name);
}

const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names{
        "petersen", "fig4",  "fig5",           "cycle",
        "complete", "path",  "complete_bipartite", "two_blocks_demo"};
    return names;
}

Graph random_2connected(int n, int extra_edges, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("need at least three vertices");
    long long capacity = static_cast<long long>(n) * (n - 1) / 2 - n;
    if (extra_edges < 0 || extra_edges > capacity)
        throw std::invalid_argument("extra_edges exceeds capacity");

    std::mt19937_64 rng(seed);
    auto next_below = [&rng](std::uint64_t k) {
        return static_cast<int>(rng() % k);  // deterministic across platforms
    };

    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[next_below(i + 1)]);

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
    std::sort(edges.begin(), edges.end());

    std::vector<Edge> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Edge e(i, j);
            if (!std::binary_search(edges.begin(), edges.end(), e)) chords.push_back(e);
        }
    for (size_t i = chords.size(); i > 1; --i)
        std::swap(chords[i - 1], chords[next_below(i)]);
    edges.insert(edges.end(), chords.begin(), chords.begin() + extra_edges);

    return numbered(n, edges);
}

}  // namespace treespan

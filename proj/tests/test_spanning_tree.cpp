#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/generators.hpp"
#include "treespan/spanning_tree.hpp"

using namespace treespan;

namespace {

SpanningTree path_tree(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < g.vertex_count(); ++v) edges.emplace_back(v, v + 1);
    return SpanningTree(g, edges);
}

SpanningTree star_tree(const Graph& g, Vertex center) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != center) edges.emplace_back(center, v);
    return SpanningTree(g, edges);
}

}  // namespace

TEST_CASE("spanning tree invariants are validated") {
    Graph c4 = generate({"cycle", {4}});
    CHECK_THROWS_AS(SpanningTree(c4, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SpanningTree(c4, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
    Graph k4 = generate({"complete", {4}});
    CHECK_NOTHROW(SpanningTree(k4, {{0, 1}, {0, 2}, {0, 3}}));
}

TEST_CASE("tree distances") {
    Graph p4 = generate({"path", {4}});
    SpanningTree t = path_tree(p4);
    CHECK(t.distance(0, 3) == 3);
    CHECK(t.distance(2, 2) == 0);

    Graph k5 = generate({"complete", {5}});
    SpanningTree star = star_tree(k5, 0);
    CHECK(star.distance(1, 2) == 2);
}

TEST_CASE("stretch of simple trees") {
    Graph c5 = generate({"cycle", {5}});
    CHECK(stretch(path_tree(c5)) == 4);

    Graph k4 = generate({"complete", {4}});
    CHECK(stretch(star_tree(k4, 0)) == 2);
}

TEST_CASE("stretch of the listed tree on the second X-component of figure 4") {
    Graph fig4 = generate({"fig4", {}});
    auto at = [&](const char* L) { return *fig4.vertex_by_label(L); };
    VertexSet verts = closed_neighborhood(fig4, at("v1"));
    for (const char* L : {"e", "f", "g", "h"}) verts.push_back(at(L));
    std::sort(verts.begin(), verts.end());
    Subgraph g2 = induced_subgraph(fig4, verts);
    auto local = [&](const char* L) {
        for (Vertex v = 0; v < g2.graph.vertex_count(); ++v)
            if (g2.graph.label(v) == L) return v;
        REQUIRE(false);
        return -1;
    };
    std::vector<std::pair<const char*, const char*>> t2 = {
        {"v3", "v2"}, {"v3", "v1"}, {"v3", "v6"}, {"v3", "v5"}, {"v3", "v4"},
        {"v3", "e"},  {"v3", "f"},  {"v4", "g"},  {"v4", "h"},
        {"v1", "a"},  {"v1", "b"},  {"v1", "c"}};
    std::vector<Edge> edges;
    for (auto [a, b] : t2) edges.emplace_back(local(a), local(b));
    SpanningTree t(g2.graph, edges);
    CHECK(stretch(t) == 3);
}

TEST_CASE("tree diameter of stars, double stars and paths") {
    Graph k5 = generate({"complete", {5}});
    CHECK(tree_diameter(star_tree(k5, 0)) == 2);

    // double star: centers 0,1 with two leaves each
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(tree_diameter(SpanningTree(g, g.edges())) == 3);

    Graph p6 = generate({"path", {6}});
    CHECK(tree_diameter(path_tree(p6)) == 5);
}

TEST_CASE("fundamental cycles") {
    Graph c5 = generate({"cycle", {5}});
    auto cyc = fundamental_cycle(path_tree(c5), Edge(0, 4));
    CHECK(cyc == std::vector<Vertex>{0, 1, 2, 3, 4});

    Graph k4 = generate({"complete", {4}});
    SpanningTree star = star_tree(k4, 0);
    CHECK(fundamental_cycle(star, Edge(1, 2)) == std::vector<Vertex>{1, 0, 2});
    CHECK_THROWS_WITH_AS(fundamental_cycle(star, Edge(0, 1)), "not a cotree edge",
                         std::invalid_argument);

    Graph k22 = generate({"complete_bipartite", {2, 2}});
    // path tree 0-2-1-3; the one cotree edge closes the 4-cycle
    SpanningTree t(k22, {{0, 2}, {1, 2}, {1, 3}});
    CHECK(fundamental_cycle(t, Edge(0, 3)).size() == 4);
}

TEST_CASE("fundamental cuts") {
    Graph c4 = generate({"cycle", {4}});
    SpanningTree t = path_tree(c4);
    CHECK(fundamental_cut(t, Edge(1, 2)) == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});

    Graph k3 = generate({"complete", {3}});
    SpanningTree star = star_tree(k3, 2);
    CHECK(fundamental_cut(star, Edge(0, 2)) == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});

    // a bridge's cut is itself
    Graph two_tri(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    SpanningTree bt(two_tri, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}});
    CHECK(fundamental_cut(bt, Edge(2, 3)) == std::vector<Edge>{Edge(2, 3)});

    CHECK_THROWS_WITH_AS(fundamental_cut(t, Edge(0, 3)), "not a tree edge",
                         std::invalid_argument);
}

TEST_CASE("cycle/cut duality on seeded random graphs") {
    int pairs_checked = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);  // up to 8
        int cap = n * (n - 1) / 2 - n;
        Graph g = random_2connected(n, static_cast<int>(seed % (cap + 1)), seed);
        SpanningTree t = testutil::random_spanning_tree(g, seed * 11);
        for (const Edge& tree_edge : t.edges()) {
            auto cut = fundamental_cut(t, tree_edge);
            for (const Edge& e : g.edges()) {
                if (t.contains(e)) continue;
                auto cyc = fundamental_cycle(t, e);
                bool on_cycle = false;
                for (size_t i = 0; i + 1 < cyc.size(); ++i)
                    if (Edge(cyc[i], cyc[i + 1]) == tree_edge) on_cycle = true;
                bool in_cut = std::binary_search(cut.begin(), cut.end(), e);
                CHECK(on_cycle == in_cut);
                ++pairs_checked;
            }
        }
    }
    CHECK(pairs_checked > 200);
}

TEST_CASE("stretch equals longest fundamental cycle minus one") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = testutil::random_graph(seed, 5, 8);
        SpanningTree t = testutil::random_spanning_tree(g, seed * 7);
        int longest = 0;
        for (const Edge& e : g.edges())
            if (!t.contains(e))
                longest = std::max(longest, static_cast<int>(fundamental_cycle(t, e).size()));
        if (longest > 0) CHECK(stretch(t) == longest - 1);
        auto gi = girth(g);
        REQUIRE(gi.has_value());
        CHECK(stretch(t) >= *gi - 1);
        if (tree_diameter(t) <= 3) CHECK(stretch(t) <= 3);
    }
}

TEST_CASE("star-sets of simple trees") {
    Graph k5 = generate({"complete", {5}});
    auto stars = star_sets(star_tree(k5, 0));
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].center == 0);
    CHECK(stars[0].contacts.empty());
    CHECK(stars[0].outer());

    Graph ds(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    auto two = star_sets(SpanningTree(ds, ds.edges()));
    REQUIRE(two.size() == 2);
    CHECK(two[0].contacts == VertexSet{1});
    CHECK(two[1].contacts == VertexSet{0});
    CHECK(two[0].outer());

    Graph p5 = generate({"path", {5}});
    auto mids = star_sets(path_tree(p5));
    REQUIRE(mids.size() == 3);
    CHECK(mids[1].center == 2);
    CHECK(mids[1].inner());
    CHECK(mids[1].contacts == VertexSet{1, 3});
}

TEST_CASE("S-branches") {
    Graph p5 = generate({"path", {5}});
    SpanningTree t = path_tree(p5);
    auto stars = star_sets(t);
    auto branches = s_branches(t, stars[1]);  // center 2
    REQUIRE(branches.size() == 2);
    CHECK(branches[0] == VertexSet{0});
    CHECK(branches[1] == VertexSet{4});

    Graph k4 = generate({"complete", {4}});
    SpanningTree star = star_tree(k4, 0);
    CHECK(s_branches(star, star_sets(star)[0]).empty());

    // spider: center 0, three legs of length two
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    SpanningTree st(spider, spider.edges());
    auto spider_stars = star_sets(st);
    REQUIRE(!spider_stars.empty());
    CHECK(spider_stars[0].center == 0);
    auto legs = s_branches(st, spider_stars[0]);
    REQUIRE(legs.size() == 3);
    for (const auto& leg : legs) CHECK(leg.size() == 1);
}

TEST_CASE("branches plus star-set members partition the vertices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = testutil::random_graph(seed, 6, 8);
        SpanningTree t = testutil::random_spanning_tree(g, seed);
        for (const StarSet& s : star_sets(t)) {
            VertexSet all = s.members;
            for (const auto& b : s_branches(t, s)) all.insert(all.end(), b.begin(), b.end());
            std::sort(all.begin(), all.end());
            VertexSet expect(g.vertex_count());
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(all == expect);
        }
    }
}

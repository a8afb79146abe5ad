#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/generators.hpp"
#include "treespan/oracle.hpp"
#include "treespan/verifier.hpp"

using namespace treespan;

namespace {

SpanningTree star_tree(const Graph& g, Vertex center) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != center) edges.emplace_back(center, v);
    return SpanningTree(g, edges);
}

// heavy-line optimal tree of the figure-5 graph
SpanningTree fig5_heavy_tree(const Graph& g) {
    auto at = [&](const char* L) { return *g.vertex_by_label(L); };
    std::vector<std::pair<const char*, const char*>> edges = {
        {"v1", "v2"}, {"v1", "v3"}, {"v1", "v6"}, {"v1", "a"}, {"v1", "b"},
        {"v1", "c"},  {"v2", "d"},  {"v3", "v4"}, {"v3", "e"}, {"v3", "f"},
        {"v4", "g"},  {"v4", "h"},  {"v5", "v6"}, {"v5", "i"}, {"v5", "j"},
        {"v6", "k"},  {"v6", "l"}};
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.emplace_back(at(a), at(b));
    return SpanningTree(g, out);
}

}  // namespace

TEST_CASE("2-spanner condition: spanning star holds via the diameter clause") {
    Graph k4 = generate({"complete", {4}});
    auto report = check_theorem_31(k4, star_tree(k4, 0));
    CHECK(report.holds);
    CHECK(report.condition == ConditionId::T31a);
}

TEST_CASE("2-spanner condition fails on the 4-cycle path tree") {
    Graph c4 = generate({"cycle", {4}});
    SpanningTree t(c4, {{0, 1}, {1, 2}, {2, 3}});
    auto report = check_theorem_31(c4, t);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violated_at.has_value());
    CHECK(report.violated_at->inner_edge == Edge(1, 2));
    CHECK(report.violated_at->reason == "not-a-cut");
    // the witness re-checks: {1,2} leaves a connected remainder
    CHECK(components(c4, report.violated_at->set_members).size() == 1);
}

TEST_CASE("2-spanner condition holds via the cut clause on glued cliques") {
    // two 4-cliques sharing the edge u=0, v=1
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
    SpanningTree t(g, {{0, 2}, {0, 3}, {0, 1}, {1, 4}, {1, 5}});
    auto report = check_theorem_31(g, t);
    CHECK(report.holds);
    CHECK(report.condition == ConditionId::T31b);
    CHECK(exact_sigma(g).sigma == 2);
}

TEST_CASE("3-spanner condition: double stars hold via the diameter clause") {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}});
    SpanningTree t(g, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    auto report = check_theorem_32(g, t);
    CHECK(report.holds);
    CHECK(report.condition == ConditionId::T32I);
}

TEST_CASE("3-spanner condition holds for the figure-5 heavy-line tree") {
    Graph g = generate({"fig5", {}});
    SpanningTree t = fig5_heavy_tree(g);
    CHECK(stretch(t) == 3);
    auto report = check_theorem_32(g, t);
    CHECK(report.holds);
    CHECK(report.condition == ConditionId::T32II);
}

TEST_CASE("3-spanner condition fails on the 6-cycle path tree") {
    Graph c6 = generate({"cycle", {6}});
    SpanningTree t(c6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto report = check_theorem_32(c6, t);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violated_at.has_value());
}

TEST_CASE("both conditions match the stretch on every spanning tree, small sweep") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = testutil::random_graph(seed, 4, 6);
        for_each_spanning_tree(g, [&](const std::vector<Edge>& edges) {
            SpanningTree t(g, edges);
            int s = stretch(t);
            CHECK(check_theorem_31(g, t).holds == (s <= 2));
            CHECK(check_theorem_32(g, t).holds == (s <= 3));
            return true;
        });
    }
}

TEST_CASE("the three separator phrasings agree on the figure-5 tree") {
    Graph g = generate({"fig5", {}});
    SpanningTree t = fig5_heavy_tree(g);
    Vertex v1 = *g.vertex_by_label("v1");
    for (const StarSet& s : star_sets(t)) {
        if (s.center != v1) continue;
        REQUIRE(s.inner());
        CHECK(check_prop_33_equivalence(g, t, s));
    }
}

TEST_CASE("the three separator phrasings agree on a hand-padded star-set") {
    Graph c6 = generate({"cycle", {6}});
    SpanningTree t(c6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    // the star-set at 2 is {1,2,3}, not a cut of the 6-cycle; padding with 5
    // makes it one while keeping the contacts
    StarSet padded;
    padded.center = 2;
    padded.members = {1, 2, 3, 5};
    padded.contacts = {1, 3};
    CHECK(check_prop_33_equivalence(c6, t, padded));

    StarSet narrow;
    narrow.center = 2;
    narrow.members = {1, 2, 3};
    narrow.contacts = {1, 3};
    CHECK_THROWS_AS(check_prop_33_equivalence(c6, t, narrow), std::invalid_argument);
}

TEST_CASE("the three separator phrasings agree across a random sweep") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = testutil::random_graph(seed, 5, 8);
        SpanningTree t = testutil::random_spanning_tree(g, seed * 3);
        for (const StarSet& s : star_sets(t)) {
            if (!s.inner()) continue;
            if (static_cast<int>(s.members.size()) >= g.vertex_count()) continue;
            if (components(g, s.members).size() < 2) continue;
            CHECK(check_prop_33_equivalence(g, t, s));
        }
    }
}

TEST_CASE("2-spanner recognition on small fixtures") {
    Graph k4g = generate({"complete", {4}});
    auto k4 = recognize_sigma2(k4g);
    CHECK(k4.admits);
    CHECK(stretch(*k4.certificate) <= 2);

    Graph c4g = generate({"cycle", {4}});
    auto c4 = recognize_sigma2(c4g);
    CHECK_FALSE(c4.admits);

    Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto diamond = recognize_sigma2(k4_minus);
    CHECK(diamond.admits);

    // two 4-cliques glued on an edge admit stretch two
    Graph glued(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                    {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
    CHECK(recognize_sigma2(glued).admits);
}

TEST_CASE("2-spanner recognition agrees with the exact oracle") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);  // up to 8
        int extra = static_cast<int>(seed % (n * (n - 1) / 2 - n + 1));
        Graph g = random_2connected(n, extra, seed);
        auto exact = exact_sigma(g);
        REQUIRE(exact.sigma.has_value());
        auto rec = recognize_sigma2(g);
        CHECK(rec.admits == (*exact.sigma <= 2));
        if (rec.admits) CHECK(stretch(*rec.certificate) <= 2);
    }
}

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/generators.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognizer.hpp"

using namespace treespan;

TEST_CASE("exact stretch of the classics") {
    auto petersen = exact_sigma(generate({"petersen", {}}));
    CHECK(petersen.sigma == 4);

    for (int n : {4, 5, 6, 7}) {
        auto cyc = exact_sigma(generate({"cycle", {n}}));
        CHECK(cyc.sigma == n - 1);
    }
    for (int n : {3, 4, 5, 6}) {
        auto comp = exact_sigma(generate({"complete", {n}}));
        CHECK(comp.sigma == 2);
    }
}

TEST_CASE("exact stretch of a tree host is one") {
    auto r = exact_sigma(generate({"path", {6}}));
    CHECK(r.sigma == 1);
}

TEST_CASE("decision runs on the worked examples") {
    auto yes = decide_sigma_le(generate({"fig5", {}}), 3);
    CHECK(yes.answer == Answer::yes);
    REQUIRE(yes.tree.has_value());

    auto no = decide_sigma_le(generate({"fig4", {}}), 3);
    CHECK(no.answer == Answer::no);

    Graph p5 = generate({"path", {5}});
    auto trivial = decide_sigma_le(p5, 1);
    CHECK(trivial.answer == Answer::yes);
    CHECK(*trivial.tree == p5.edges());
}

TEST_CASE("budget exhaustion yields unknown, never a guess") {
    OracleBudget tiny;
    tiny.max_nodes = 5;
    auto r = exact_sigma(generate({"petersen", {}}), tiny);
    CHECK_FALSE(r.sigma.has_value());
    CHECK(r.run.exhausted);

    auto d = decide_sigma_le(generate({"petersen", {}}), 3, tiny);
    CHECK(d.answer == Answer::unknown);
}

TEST_CASE("spanning tree enumeration counts") {
    int count = 0;
    for_each_spanning_tree(generate({"complete", {4}}), [&](const std::vector<Edge>&) {
        ++count;
        return true;
    });
    CHECK(count == 16);

    count = 0;
    for_each_spanning_tree(generate({"cycle", {6}}), [&](const std::vector<Edge>&) {
        ++count;
        return true;
    });
    CHECK(count == 6);
}

TEST_CASE("stretch decomposes over blocks") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph a = random_2connected(5, static_cast<int>(seed % 4), seed);
        Graph b = random_2connected(4, static_cast<int>(seed % 2), seed + 50);
        std::vector<Edge> edges = a.edges();
        int offset = a.vertex_count() - 1;
        for (const Edge& e : b.edges())
            edges.emplace_back(e.u == 0 ? offset : e.u + offset,
                               e.v == 0 ? offset : e.v + offset);
        Graph glued(a.vertex_count() + b.vertex_count() - 1, edges);
        auto whole = exact_sigma(glued);
        auto left = exact_sigma(a);
        auto right = exact_sigma(b);
        REQUIRE(whole.sigma.has_value());
        CHECK(*whole.sigma == std::max(*left.sigma, *right.sigma));
    }
}

TEST_CASE("exact stretch respects the girth and tree-diameter bounds") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = testutil::random_graph(seed, 5, 8);
        auto r = exact_sigma(g);
        REQUIRE(r.sigma.has_value());
        auto gi = girth(g);
        REQUIRE(gi.has_value());
        CHECK(*r.sigma >= *gi - 1);
        // a witness tree is optimal, so it re-verifies
        SpanningTree t(g, *r.tree);
        CHECK(stretch(t) == *r.sigma);
        // any double-star found by the basic procedure caps the stretch
        if (auto ds = basic_procedure(g)) {
            CHECK(tree_diameter(*ds) <= 3);
            CHECK(*r.sigma <= std::max(stretch(*ds), 1));
        }
    }
}

TEST_CASE("decision and exact value agree") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = testutil::random_graph(seed, 4, 8);
        auto exact = exact_sigma(g);
        REQUIRE(exact.sigma.has_value());
        for (int k = 1; k <= 5; ++k) {
            auto d = decide_sigma_le(g, k);
            REQUIRE(d.answer != Answer::unknown);
            CHECK((d.answer == Answer::yes) == (*exact.sigma <= k));
            if (d.tree) CHECK(stretch(SpanningTree(g, *d.tree)) <= k);
        }
    }
}

#include <fstream>
#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "treespan/generators.hpp"
#include "treespan/io.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognizer.hpp"

using namespace treespan;

#ifndef TREESPAN_DATA_DIR
#define TREESPAN_DATA_DIR "."
#endif

namespace {

Vertex at(const Graph& g, const char* label) {
    auto v = g.vertex_by_label(label);
    REQUIRE(v.has_value());
    return *v;
}

}  // namespace

TEST_CASE("petersen generator") {
    Graph g = generate({"petersen", {}});
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(girth(g) == 5);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("figure-4 generator passes its cross-checks") {
    Graph g = generate({"fig4", {}});
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 42);

    // closed neighborhood of v1
    VertexSet expect;
    for (const char* L : {"v1", "a", "b", "c", "v2", "v3", "v4", "v5", "v6"})
        expect.push_back(at(g, L));
    std::sort(expect.begin(), expect.end());
    CHECK(closed_neighborhood(g, at(g, "v1")) == expect);

    // component partition of the complement
    auto comps = components(g, expect);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].size() == 1);
    CHECK(comps[1].size() == 4);
    CHECK(comps[2].size() == 4);

    // the listed trees use only edges of the graph
    auto check_edges = [&](std::vector<std::pair<const char*, const char*>> list) {
        for (auto [a, b] : list) CHECK(g.has_edge(at(g, a), at(g, b)));
    };
    check_edges({{"v1", "v2"}, {"v1", "a"}, {"v1", "b"}, {"v1", "c"}, {"v2", "d"}});
    check_edges({{"v3", "v2"}, {"v3", "e"}, {"v3", "f"}, {"v4", "g"}, {"v4", "h"}});
    check_edges({{"v6", "v1"}, {"v5", "i"}, {"v5", "j"}, {"v6", "k"}, {"v6", "l"}});

    // {v3,v4,v5,v6} induces a clique
    VertexSet q;
    for (const char* L : {"v3", "v4", "v5", "v6"}) q.push_back(at(g, L));
    std::sort(q.begin(), q.end());
    CHECK(induced_subgraph(g, q).graph.edge_count() == 6);
}

TEST_CASE("figure 5 equals figure 4 minus exactly the edge v4-v5") {
    Graph f4 = generate({"fig4", {}});
    Graph f5 = generate({"fig5", {}});
    CHECK(f5.vertex_count() == 18);
    CHECK(f5.edge_count() == 41);
    Edge gone(at(f4, "v4"), at(f4, "v5"));
    for (const Edge& e : f4.edges())
        CHECK(f5.has_edge(e.u, e.v) == (e != gone));
}

TEST_CASE("generator matches the checked-in golden file") {
    Graph g = generate({"fig4", {}});
    std::ifstream in(std::string(TREESPAN_DATA_DIR) + "/fig4.edges");
    REQUIRE(in.good());
    Graph golden = Graph::from_edge_list(parse_edge_list(in));
    CHECK(golden == g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        CHECK(golden.label(v) == g.label(v));
}

TEST_CASE("parametric generators") {
    Graph c5 = generate({"cycle", {5}});
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    Graph k23 = generate({"complete_bipartite", {2, 3}});
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    Graph demo = generate({"two_blocks_demo", {}});
    CHECK(blocks(demo).size() == 2);
    CHECK_THROWS_AS(generate({"no_such_graph", {}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"cycle", {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"cycle", {}}), std::invalid_argument);
}

TEST_CASE("seeded random graphs are 2-connected and reproducible") {
    Graph base = random_2connected(5, 0, 7);
    CHECK(base.vertex_count() == 5);
    CHECK(base.edge_count() == 5);  // a bare cycle

    Graph g1 = random_2connected(8, 4, 1);
    CHECK(g1.edge_count() == 12);
    Graph g2 = random_2connected(8, 4, 1);
    CHECK(g1 == g2);
    Graph g3 = random_2connected(8, 4, 2);
    CHECK_FALSE(g1 == g3);

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_2connected(6, static_cast<int>(seed % 9), seed);
        CHECK(is_biconnected(g));
    }
    CHECK_THROWS_AS(random_2connected(6, 100, 1), std::invalid_argument);
}

TEST_CASE("edge list round trip is isomorphic by label") {
    for (const std::string& name : generator_names()) {
        NamedGraphSpec spec{name, {}};
        if (name == "cycle" || name == "complete" || name == "path") spec.params = {5};
        if (name == "complete_bipartite") spec.params = {2, 3};
        Graph g = generate(spec);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        Graph back = Graph::from_edge_list(parse_edge_list(in));
        CHECK(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        auto label_edges = [](const Graph& h) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const Edge& e : h.edges()) {
                auto a = h.label(e.u), b = h.label(e.v);
                out.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(label_edges(back) == label_edges(g));
    }
}

TEST_CASE("edge list parsing: comments, blanks, malformed rows") {
    std::istringstream ok("# comment\n\n a b \nb c\n");
    auto pairs = parse_edge_list(ok);
    CHECK(pairs.size() == 2);

    std::istringstream bad("a b c\n");
    CHECK_THROWS_AS(parse_edge_list(bad), std::runtime_error);
}

TEST_CASE("dot export") {
    Graph k3 = generate({"complete", {3}});
    std::string plain = export_dot(k3);
    CHECK(plain.find("\"0\" -- \"1\"") != std::string::npos);
    CHECK(plain.find("style=bold") == std::string::npos);

    Graph fig5 = generate({"fig5", {}});
    auto out = recognize_sigma3(fig5);
    REQUIRE(out.admits);
    std::string dot = export_dot(fig5, &*out.certificate);
    size_t bold = 0, pos = 0;
    while ((pos = dot.find("[style=bold]", pos)) != std::string::npos) {
        ++bold;
        pos += 1;
    }
    CHECK(bold == 17);
}

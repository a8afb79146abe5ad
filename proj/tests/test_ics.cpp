#include <random>

#include <stdexcept>

#include "doctest.h"
#include "treespan/generators.hpp"
#include "treespan/ics.hpp"
#include "treespan/oracle.hpp"

using namespace treespan;

namespace {

IcsInstance instance(int n, std::vector<Edge> fixed, std::vector<Edge> conflicts) {
    IcsInstance inst;
    inst.fixed_edges = std::move(fixed);
    inst.conflicts = Graph(n, conflicts);
    return inst;
}

}  // namespace

TEST_CASE("clique over two fixed edges has no cover") {
    // ends 0,1 / 2,3 pairwise adjacent across the edges
    auto inst = instance(4, {{0, 1}, {2, 3}},
                         {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 1}, {2, 3}});
    CHECK_FALSE(solve_ics(inst).has_value());
    CHECK_FALSE(ics_bruteforce(inst).has_value());
}

TEST_CASE("one missing cross edge leaves exactly one cover") {
    // the figure-5 situation: v3=0, v4=1, v5=2, v6=3; v4v5 not in conflict
    auto inst = instance(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 3}});
    auto cover = solve_ics(inst);
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<Vertex>{1, 2});
    CHECK(*ics_bruteforce(inst) == *cover);
}

TEST_CASE("parallel pair: the diagonal cover comes out first") {
    // a1=0 b1=1 a2=2 b2=3, conflicts a1a2, b1b2
    auto inst = instance(4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
    auto cover = solve_ics(inst);
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<Vertex>{0, 3});
    CHECK(*ics_bruteforce(inst) == *cover);

    // the other orientation
    auto inst2 = instance(4, {{0, 1}, {2, 3}}, {{0, 3}, {1, 2}});
    CHECK(*solve_ics(inst2) == *ics_bruteforce(inst2));
}

TEST_CASE("unrelated edges always admit a cover") {
    auto inst = instance(6, {{0, 1}, {2, 3}, {4, 5}}, {});
    auto cover = solve_ics(inst);
    REQUIRE(cover.has_value());
    CHECK(*cover == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("reduced edge forces the partner endpoint") {
    // end 0 of edge {0,1} clashes with both ends of {2,3}
    auto inst = instance(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}});
    auto cover = solve_ics(inst);
    REQUIRE(cover.has_value());
    CHECK((*cover)[0] == 1);
    // deleting both endpoints settles the answer
    auto dead = instance(6, {{0, 1}, {2, 3}, {4, 5}},
                         {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK_FALSE(solve_ics(dead).has_value());
    CHECK_FALSE(ics_bruteforce(dead).has_value());
}

TEST_CASE("serial chains propagate one-directionally") {
    // choosing an end may force a cascade but not an equivalence: the mixed
    // selection b1,a2 is the only survivor here.
    // edges {0,1},{2,3},{4,5},{6,7}; conflicts kill {a1,a2} and {b1,b2}
    auto inst = instance(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}},
                         {{0, 3}, {0, 4}, {2, 5}, {1, 6}, {3, 7}});
    auto brute = ics_bruteforce(inst);
    REQUIRE(brute.has_value());
    auto cover = solve_ics(inst);
    REQUIRE(cover.has_value());
    CHECK(*cover == *brute);
}

TEST_CASE("all-serial unsatisfiable chain") {
    // picking either end of the first edge cascades into a contradiction
    auto inst = instance(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}},
                         {{0, 3}, {2, 5}, {4, 0}, {1, 6}, {7, 9}, {8, 1}});
    CHECK_FALSE(ics_bruteforce(inst).has_value());
    CHECK_FALSE(solve_ics(inst).has_value());
}

TEST_CASE("solver matches brute force on seeded random instances") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int n = 2 * r;
        std::vector<Edge> fixed;
        for (int i = 0; i < r; ++i) fixed.emplace_back(2 * i, 2 * i + 1);
        std::vector<Edge> conflicts;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 100 < 30) conflicts.emplace_back(a, b);
        auto inst = instance(n, fixed, conflicts);
        auto fast = solve_ics(inst);
        auto slow = ics_bruteforce(inst);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(*fast == *slow);
    }
}

TEST_CASE("matching validation") {
    IcsInstance bad;
    bad.fixed_edges = {{0, 1}, {1, 2}};
    bad.conflicts = Graph(3, {});
    CHECK_THROWS_AS(solve_ics(bad), std::invalid_argument);
}

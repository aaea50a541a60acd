#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zf/graph_io.hpp"
#include "zf/solver.hpp"

using namespace zf;

TEST_CASE("membership checks") {
    Graph p3 = path_graph(3);
    Verdict ok = check_leaky_set(p3, VertexSet(3, {0, 2}), {LeakFlavor::vertex, 1});
    CHECK(ok.holds);
    CHECK_FALSE(ok.counterexample.has_value());
    CHECK(ok.stats.leak_sets_checked == 4);  // empty set + three singletons

    Graph prism = complete_prism(3);
    Verdict bad = check_leaky_set(prism, VertexSet(6, {0, 1, 2}), {LeakFlavor::specified, 2});
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->leaks == LeakSet{Leak::arc(0, 3), Leak::arc(1, 4)});
    CHECK(bad.counterexample->stalled == VertexSet(6, {0, 1, 2, 5}));

    for (LeakFlavor f :
         {LeakFlavor::vertex, LeakFlavor::edge, LeakFlavor::specified, LeakFlavor::mixed})
        CHECK(check_leaky_set(prism, VertexSet::full(6), {f, 2}).holds);
}

TEST_CASE("counterexamples re-verify as stalled fixed points") {
    std::mt19937_64 rng(606);
    int found = 0;
    while (found < 50) {
        Graph g(6);
        std::bernoulli_distribution coin(0.4);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (coin(rng)) g.add_edge(u, v);
        VertexSet b(6);
        for (int v = 0; v < 6; ++v)
            if (coin(rng)) b.insert(v);
        Verdict v = check_leaky_set(g, b, {LeakFlavor::mixed, 1});
        CHECK(v.holds == !v.counterexample.has_value());
        if (v.holds) continue;
        ++found;
        const Counterexample& ce = *v.counterexample;
        REQUIRE_FALSE(ce.stalled.is_full());
        REQUIRE(closure_final(g, ce.stalled, ce.leaks) == ce.stalled);
        REQUIRE(closure_final(g, b, ce.leaks) == ce.stalled);
    }
}

TEST_CASE("leaky numbers") {
    Graph p3 = path_graph(3);
    NumberResult zp3 = leaky_number(p3, {LeakFlavor::vertex, 1});
    CHECK(zp3.value == 2);
    CHECK(zp3.witness == VertexSet(3, {0, 2}));

    Graph paw = paw_graph();
    NumberResult z0 = leaky_number(paw, {LeakFlavor::vertex, 0});
    CHECK(z0.value == 2);
    CHECK(z0.witness == VertexSet(4, {0, 1}));  // colex-first zero forcing set
    CHECK(is_zero_forcing_set(paw, VertexSet(4, {1, 3})));  // the classic witness also works

    NumberResult z1 = leaky_number(paw, {LeakFlavor::vertex, 1});
    CHECK(z1.value == 3);
    CHECK(z1.witness == VertexSet(4, {0, 1, 3}));  // colex-first 1-leaky set
    CHECK(check_leaky_set(paw, VertexSet(4, {1, 2, 3}), {LeakFlavor::vertex, 1}).holds);

    // sequential scan: empty set, four singletons, then {0,1} first at size 2
    CHECK(z0.stats.subsets_checked == 1 + 4 + 1);
    // ell=1 rescans size 2 (all six fail) and stops at {0,1,3}
    CHECK(z1.stats.subsets_checked == z0.stats.subsets_checked + 6 + 2);
}

TEST_CASE("flavor numbers agree on the prism") {
    Graph prism = complete_prism(3);
    for (LeakFlavor f :
         {LeakFlavor::vertex, LeakFlavor::edge, LeakFlavor::specified, LeakFlavor::mixed}) {
        CHECK(leaky_number(prism, {f, 1}).value == 3);
        CHECK(leaky_number(prism, {f, 2}).value == 4);
    }
    CHECK(leaky_number(prism, {LeakFlavor::vertex, 1}).witness == VertexSet(6, {0, 1, 2}));
}

TEST_CASE("numbers are monotone in the budget") {
    for (const Graph& g : {path_graph(4), cycle_graph(5), paw_graph(), star_graph(3)}) {
        for (LeakFlavor f : {LeakFlavor::vertex, LeakFlavor::mixed}) {
            int prev = 0;
            for (int ell = 0; ell <= 2; ++ell) {
                int z = leaky_number(g, {f, ell}).value;
                CHECK(z >= prev);
                prev = z;
            }
        }
    }
}

TEST_CASE("budgets beyond the universe stay total") {
    Graph p3 = path_graph(3);
    CHECK(leaky_number(p3, {LeakFlavor::vertex, 99}).value == 3);
    CHECK(leaky_number(p3, {LeakFlavor::edge, 99}).value == 3);
    CHECK(leaky_number(path_graph(1), {LeakFlavor::mixed, 5}).value == 1);
    CHECK(check_leaky_set(p3, VertexSet::full(3), {LeakFlavor::mixed, 99}).holds);
}

TEST_CASE("pattern membership and numbers") {
    Graph p3 = path_graph(3);
    CHECK(pattern_leaky_number(p3, LeakPattern{}).value == 1);
    NumberResult single = pattern_leaky_number(p3, LeakPattern({{0, 1}}));
    CHECK(single.value == 2);
    CHECK(single.witness == VertexSet(3, {0, 2}));

    // single-arc pattern membership coincides with the specified budget 1
    for (uint64_t mask = 0; mask < 8; ++mask) {
        VertexSet b(3);
        for (int v = 0; v < 3; ++v)
            if (mask >> v & 1) b.insert(v);
        CHECK(check_pattern_leaky_set(p3, b, LeakPattern({{0, 1}})).holds ==
              check_leaky_set(p3, b, {LeakFlavor::specified, 1}).holds);
    }

    Graph prism = complete_prism(3);
    LeakPattern matching({{0, 3}, {1, 4}, {2, 5}});
    Verdict v = check_pattern_leaky_set(prism, VertexSet(6, {0, 1, 2}), matching);
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->leaks == LeakSet{Leak::arc(0, 3), Leak::arc(1, 4)});
    CHECK(v.counterexample->stalled == VertexSet(6, {0, 1, 2, 5}));
    // the identity placement also breaks it, stalling at the blue set itself
    CHECK(closure_final(prism, VertexSet(6, {0, 1, 2}),
                        LeakSet{Leak::arc(0, 3), Leak::arc(1, 4), Leak::arc(2, 5)}) ==
          VertexSet(6, {0, 1, 2}));

    CHECK(pattern_leaky_number(prism, matching).value == 4);
    CHECK(pattern_leaky_number(prism, LeakPattern({{0, 2}, {1, 2}})).value == 3);
    CHECK(pattern_leaky_number(prism, LeakPattern({{0, 1}})).value == 3);
}

TEST_CASE("characterization") {
    Graph prism = complete_prism(3);
    CHECK(check_via_characterization(prism, VertexSet(6, {0, 1, 2}), 1));
    CHECK_FALSE(check_via_characterization(prism, VertexSet(6, {0, 1, 2}), 2));
    CHECK(check_via_characterization(prism, VertexSet::full(6), 5));
    CHECK_THROWS_AS(check_via_characterization(prism, VertexSet(6), -1), ContractError);

    // must agree with brute-force vertex membership
    std::mt19937_64 rng(1312);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g(5);
        std::bernoulli_distribution coin(0.5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (coin(rng)) g.add_edge(u, v);
        for (uint64_t mask = 0; mask < 32; ++mask) {
            VertexSet b(5);
            for (int v = 0; v < 5; ++v)
                if (mask >> v & 1) b.insert(v);
            for (int ell = 1; ell <= 2; ++ell)
                REQUIRE(check_via_characterization(g, b, ell) ==
                        check_leaky_set(g, b, {LeakFlavor::vertex, ell}).holds);
        }
    }
}

TEST_CASE("worker counts do not change results") {
    Graph prism = complete_prism(3);
    Graph paw = paw_graph();
    for (int workers : {1, 4, 8}) {
        NumberResult a = leaky_number(paw, {LeakFlavor::mixed, 2}, workers);
        CHECK(a.value == leaky_number(paw, {LeakFlavor::mixed, 2}, 1).value);
        CHECK(a.witness == leaky_number(paw, {LeakFlavor::mixed, 2}, 1).witness);
        CHECK(a.stats.subsets_checked ==
              leaky_number(paw, {LeakFlavor::mixed, 2}, 1).stats.subsets_checked);

        NumberResult b = leaky_number(prism, {LeakFlavor::specified, 2}, workers);
        CHECK(b.value == 4);
        CHECK(b.witness == leaky_number(prism, {LeakFlavor::specified, 2}, 1).witness);

        NumberResult c = pattern_leaky_number(prism, LeakPattern({{0, 2}, {1, 2}}), workers);
        CHECK(c.value == 3);
        CHECK(c.witness == pattern_leaky_number(prism, LeakPattern({{0, 2}, {1, 2}}), 1).witness);
    }
}

TEST_CASE("empty and tiny graphs") {
    Graph empty(0);
    NumberResult z = leaky_number(empty, {LeakFlavor::vertex, 1});
    CHECK(z.value == 0);
    CHECK(check_leaky_set(empty, VertexSet(0), {LeakFlavor::mixed, 3}).holds);
    CHECK(leaky_number(path_graph(1), {LeakFlavor::vertex, 0}).value == 1);
}

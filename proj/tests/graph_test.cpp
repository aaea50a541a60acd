#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zf/graph_io.hpp"

using namespace zf;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 decodes the reference words") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.has_edge(1, 2));

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(parse_graph6(">>graph6<<Bw") == parse_graph6("Bw"));
    CHECK(parse_graph6("Bw\n") == parse_graph6("Bw"));
}

TEST_CASE("graph6 encodes the reference words") {
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
    CHECK(emit_graph6(path_graph(3)) == "Bg");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK_THROWS_AS(emit_graph6(Graph(63)), ParseError);
}

TEST_CASE("graph6 rejects malformed words") {
    CHECK_THROWS_WITH_AS(parse_graph6("B"), doctest::Contains("malformed length"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6("Bww"), doctest::Contains("malformed length"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("B") + char(31)),
                         doctest::Contains("offset 1"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);  // multi-byte header
    // n=3 uses 3 bits; the low 3 bits of the payload byte are padding
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("B") + char(63 + 1)),
                         doctest::Contains("padding"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(20240117);
    std::uniform_int_distribution<int> size(0, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(size(rng), rng);
        Graph back = parse_graph6(emit_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("n 3\n0 1\n1 2");
    CHECK(p3 == path_graph(3));

    Graph paw = parse_edge_list("n 4\n0 1\n0 2\n1 2\n0 3");
    CHECK(paw == paw_graph());

    Graph k2 = parse_edge_list("n 2\n0 1\n0 1");
    CHECK(k2.edge_count() == 1);

    Graph commented = parse_edge_list("# fixture\nn 3  # order\n0 1\n\n1 2 # last\n");
    CHECK(commented == p3);

    CHECK(parse_edge_list("n 5").edge_count() == 0);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n1 1"), doctest::Contains("self-loop"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 3"), doctest::Contains("out of range"),
                         ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge list and graph6 agree") {
    Graph a = parse_edge_list("n 3\n0 1\n0 2\n1 2");
    CHECK(a == parse_graph6("Bw"));
    CHECK(emit_graph6(parse_edge_list("n 4\n0 1\n0 2\n1 2\n0 3")) ==
          emit_graph6(paw_graph()));
}

TEST_CASE("generators") {
    Graph prism = complete_prism(3);
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4},
                                                 {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    CHECK(prism.edges() == expected);
    for (int k = 1; k <= 5; ++k) {
        Graph p = complete_prism(k);
        for (int v = 0; v < p.vertex_count(); ++v) CHECK(p.degree(v) == k);
    }

    Graph paw = paw_graph();
    CHECK(paw.degree(0) == 3);
    CHECK(paw.degree(1) == 2);
    CHECK(paw.degree(2) == 2);
    CHECK(paw.degree(3) == 1);

    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(cycle_graph(4).edge_count() == 4);
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(generate_family("paw", {}) == paw);
    CHECK(generate_family("complete_prism", {3}) == prism);
    CHECK(generate_family("path", {2}) == path_graph(2));

    CHECK_THROWS_AS(path_graph(0), ContractError);
    CHECK_THROWS_AS(cycle_graph(2), ContractError);
    CHECK_THROWS_AS(complete_graph(-1), ContractError);
    CHECK_THROWS_AS(generate_family("path", {}), ContractError);
    CHECK_THROWS_AS(generate_family("mystery", {1}), ContractError);
}

TEST_CASE("vertex set algebra") {
    VertexSet a(6, {0, 2, 5});
    VertexSet b(6, {2, 3});
    CHECK((a | b).members() == std::vector<int>{0, 2, 3, 5});
    CHECK((a & b).members() == std::vector<int>{2});
    CHECK((a - b).members() == std::vector<int>{0, 5});
    CHECK(a.complement().members() == std::vector<int>{1, 3, 4});
    CHECK(a.count() == 3);
    CHECK(VertexSet(6, {2}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(VertexSet::full(6).is_full());
    CHECK(VertexSet(0).is_full());  // empty universe
    CHECK(a.to_string() == "{0,2,5}");

    // colex order on equal-size sets is bitmask order
    CHECK(VertexSet(4, {0, 1}) < VertexSet(4, {0, 2}));
    CHECK(VertexSet(4, {1, 2}) < VertexSet(4, {0, 3}));

    CHECK_THROWS_AS(a.insert(6), ContractError);
    CHECK_THROWS_AS((VertexSet(3) | VertexSet(4)), ContractError);

    VertexSet big(130, {0, 64, 129});
    CHECK(big.count() == 3);
    CHECK(big.complement().count() == 127);
    CHECK(big.members() == std::vector<int>{0, 64, 129});
    CHECK(big.next_after(0) == 64);
}

TEST_CASE("edge lists accept orders beyond the graph6 cap") {
    std::string big = "n 100\n";
    for (int i = 0; i + 1 < 100; ++i)
        big += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    Graph g = parse_edge_list(big);
    CHECK(g.vertex_count() == 100);
    CHECK(g.edge_count() == 99);
    CHECK_THROWS_AS(emit_graph6(g), ParseError);
}

TEST_CASE("graph basics") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate collapses
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), ContractError);
    CHECK_THROWS_AS(g.add_edge(0, 3), ContractError);
    CHECK(g.neighbors(0).members() == std::vector<int>{1});

    // corpus parsing: comments and blank lines
    auto graphs = parse_graph6_lines("# two graphs\nBw\n\nBg # path\n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == path_graph(3));
}

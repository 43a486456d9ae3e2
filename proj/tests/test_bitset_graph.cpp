#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "minors/bitset.hpp"
#include "minors/blowup.hpp"
#include "minors/graph.hpp"
#include "minors/graph_io.hpp"

using namespace minors;

TEST_CASE("bitset words and basic ops") {
    Bitset b(130);
    REQUIRE(b.size() == 130);
    REQUIRE_FALSE(b.any());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    REQUIRE(b.count() == 4);
    REQUIRE(b.test(63));
    REQUIRE(b.test(64));
    REQUIRE_FALSE(b.test(65));
    b.reset(64);
    REQUIRE_FALSE(b.test(64));
    REQUIRE(b.count() == 3);
    b.clear();
    REQUIRE_FALSE(b.any());
}

TEST_CASE("bitset iteration and next") {
    Bitset b = Bitset::of(70, {3, 64, 69});
    std::vector<int> got;
    b.for_each([&](std::size_t v) { got.push_back(static_cast<int>(v)); });
    REQUIRE(got == std::vector<int>{3, 64, 69});
    REQUIRE(b.next(0) == 3);
    REQUIRE(b.next(4) == 64);
    REQUIRE(b.next(65) == 69);
    REQUIRE(b.next(70) == b.size());
    auto vec = b.to_vector();
    REQUIRE(vec == std::vector<int>{3, 64, 69});
}

TEST_CASE("bitset set algebra") {
    Bitset a = Bitset::of(80, {1, 2, 70});
    Bitset b = Bitset::of(80, {2, 3});
    REQUIRE(a.intersects(b));
    REQUIRE((a & b) == Bitset::of(80, {2}));
    REQUIRE((a | b) == Bitset::of(80, {1, 2, 3, 70}));
    REQUIRE((a - b) == Bitset::of(80, {1, 70}));
    REQUIRE(Bitset::of(80, {2}).is_subset_of(b));
    REQUIRE_FALSE(a.is_subset_of(b));
    Bitset c = a;
    c |= b;
    c -= Bitset::of(80, {70});
    REQUIRE(c == Bitset::of(80, {1, 2, 3}));
}

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(4);
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.add_edge(0, 2));
    REQUIRE(g.add_edge(2, 1));
    REQUIRE_FALSE(g.add_edge(1, 2)); // duplicate, either orientation
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.degree(2) == 2);
    REQUIRE(g.degree(3) == 0);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    REQUIRE_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
}

TEST_CASE("graph factories") {
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE(cycle_graph(4).edge_count() == 4);
    REQUIRE(path_graph(4).edge_count() == 3);
    REQUIRE(cycle_graph(3).edges() == complete_graph(3).edges());
}

TEST_CASE("average degree is exact") {
    REQUIRE(average_degree(cycle_graph(5)) == mpq_class(2));
    REQUIRE(average_degree(complete_graph(4)) == mpq_class(3));
    REQUIRE(average_degree(path_graph(2)) == mpq_class(1));
    Graph single(1);
    REQUIRE(average_degree(single) == 0);
    REQUIRE(average_degree(path_graph(4)) == mpq_class(3, 2));
    REQUIRE_THROWS_AS(average_degree(Graph(0)), std::invalid_argument);
}

TEST_CASE("non-adjacency of vertex sets") {
    Graph c4 = cycle_graph(4);
    REQUIRE(non_adjacent(c4, Bitset::of(4, {0}), Bitset::of(4, {2})));
    REQUIRE_FALSE(non_adjacent(c4, Bitset::of(4, {0}), Bitset::of(4, {1})));
    REQUIRE(non_adjacent(c4, Bitset::of(4, {0, 2}), Bitset::of(4, {})));
    // overlap is ignored: only cross edges between a and b count
    REQUIRE(non_adjacent(c4, std::vector<int>{0, 2}, std::vector<int>{0, 2}));
    REQUIRE_FALSE(non_adjacent(c4, std::vector<int>{0, 1}, std::vector<int>{1, 2}));
}

TEST_CASE("connectivity helpers") {
    Graph p4 = path_graph(4);
    REQUIRE(connected_in(p4, Bitset::of(4, {1, 2, 3})));
    REQUIRE_FALSE(connected_in(p4, Bitset::of(4, {0, 2})));
    REQUIRE(connected_in(p4, Bitset::of(4, {2})));
    REQUIRE(reachable_within(p4, 0, Bitset::of(4, {0, 1, 2})) == Bitset::of(4, {0, 1, 2}));
    REQUIRE(reachable_within(p4, 0, Bitset::of(4, {0, 2})) == Bitset::of(4, {0}));
}

TEST_CASE("graph text round trip") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(2, 4);
    std::string text = graph_to_string(g);
    REQUIRE(text == "5 3\n0 3\n1 2\n2 4\n");
    Graph back = graph_from_string(text);
    REQUIRE(back.vertex_count() == 5);
    REQUIRE(back.edges() == g.edges());
}

TEST_CASE("graph reader rejects malformed input") {
    REQUIRE_NOTHROW(graph_from_string("1 0\n"));
    REQUIRE_THROWS_AS(graph_from_string(""), graph_format_error);
    REQUIRE_THROWS_AS(graph_from_string("2\n"), graph_format_error);
    REQUIRE_THROWS_AS(graph_from_string("x 0\n"), graph_format_error);
    REQUIRE_THROWS_AS(graph_from_string("-1 0\n"), graph_format_error);
    REQUIRE_THROWS_AS(graph_from_string("3 1\n"), graph_format_error);          // truncated
    REQUIRE_THROWS_AS(graph_from_string("3 1\n0 1\n0 2\n"), graph_format_error); // extra edge
    REQUIRE_THROWS_AS(graph_from_string("3 1\n1 1\n"), graph_format_error);      // loop
    REQUIRE_THROWS_AS(graph_from_string("3 1\n1 0\n"), graph_format_error);      // u >= v
    REQUIRE_THROWS_AS(graph_from_string("3 1\n0 3\n"), graph_format_error);      // out of range
    REQUIRE_THROWS_AS(graph_from_string("3 2\n0 2\n0 1\n"), graph_format_error); // unsorted
    REQUIRE_THROWS_AS(graph_from_string("3 2\n0 1\n0 1\n"), graph_format_error); // duplicate
    REQUIRE_THROWS_AS(graph_from_string("3 1\n0 1 9\n"), graph_format_error);    // trailing token
}

TEST_CASE("blowup structure") {
    Graph c4 = cycle_graph(4);
    BlowupGraph bg = blowup(c4, 2);
    REQUIRE(bg.graph.vertex_count() == 8);
    REQUIRE(bg.graph.edge_count() == 4 * 4); // each base edge becomes K_{2,2}
    REQUIRE(bg.class_of(0) == 0);
    REQUIRE(bg.class_of(5) == 2);
    REQUIRE(bg.class_set(1) == Bitset::of(8, {2, 3}));
    // classes are independent sets
    for (int x = 0; x < 4; ++x)
        for (int i = 0; i < 2; ++i)
            for (int j = i + 1; j < 2; ++j)
                REQUIRE_FALSE(bg.graph.neighbors(x * 2 + i).test(static_cast<std::size_t>(x * 2 + j)));
    // base edges become complete bipartite pairs, base non-edges stay empty
    for (auto [x, y] : c4.edges())
        REQUIRE_FALSE(non_adjacent(bg.graph, bg.class_set(x), bg.class_set(y)));
    REQUIRE(non_adjacent(bg.graph, bg.class_set(0), bg.class_set(2)));
}

TEST_CASE("blowup with r=1 is the base graph") {
    Graph g = path_graph(3);
    BlowupGraph bg = blowup(g, 1);
    REQUIRE(bg.graph.edges() == g.edges());
    REQUIRE_THROWS_AS(blowup(g, 0), std::invalid_argument);
}

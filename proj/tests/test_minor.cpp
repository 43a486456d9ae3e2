#include <catch2/catch_amalgamated.hpp>

#include "minors/graph_io.hpp"
#include "minors/minor.hpp"
#include "minors/model.hpp"
#include "minors/rng.hpp"
#include "minors/sample.hpp"
#include "support/oracles.hpp"

using namespace minors;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);             // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);     // inner pentagram
        g.add_edge(i, 5 + i);                   // spokes
    }
    return g;
}

} // namespace

TEST_CASE("model validation accepts and rejects precisely") {
    Graph h = complete_graph(2);
    Graph g = path_graph(4);
    BranchSets good = {Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3})};
    REQUIRE(validate_model(good, h, g));

    BranchSets short_model = {Bitset::of(4, {0})};
    REQUIRE(model_violation(short_model, h, g).value().find("branch sets") != std::string::npos);
    BranchSets overlap = {Bitset::of(4, {0, 1}), Bitset::of(4, {1, 2})};
    REQUIRE(model_violation(overlap, h, g).value().find("overlaps") != std::string::npos);
    BranchSets disconnected = {Bitset::of(4, {0, 2}), Bitset::of(4, {1})};
    REQUIRE(model_violation(disconnected, h, g).value().find("not connected") != std::string::npos);
    BranchSets no_witness = {Bitset::of(4, {0}), Bitset::of(4, {2, 3})};
    REQUIRE(model_violation(no_witness, h, g).value().find("no witness") != std::string::npos);
    BranchSets has_empty = {Bitset::of(4, {0}), Bitset(4)};
    REQUIRE(model_violation(has_empty, h, g).value().find("empty") != std::string::npos);
}

TEST_CASE("quick outs") {
    REQUIRE(find_minor(complete_graph(5), complete_graph(4)).outcome == MinorOutcome::NoMinor);
    // |E(H)| > |E(G)| with equal order
    REQUIRE(find_minor(complete_graph(4), path_graph(4)).outcome == MinorOutcome::NoMinor);
    REQUIRE_THROWS_AS(find_minor(Graph(0), complete_graph(3)), std::invalid_argument);
}

TEST_CASE("single-vertex and identity embeddings") {
    Graph k1(1);
    auto r = find_minor(k1, path_graph(3));
    REQUIRE(r.outcome == MinorOutcome::Model);
    REQUIRE(validate_model(r.model, k1, path_graph(3)));
    auto self = find_minor(petersen(), petersen());
    REQUIRE(self.outcome == MinorOutcome::Model);
    REQUIRE(validate_model(self.model, petersen(), petersen()));
}

TEST_CASE("K5 is a minor of the Petersen graph, K6 is not") {
    Graph p = petersen();
    auto k5 = find_minor(complete_graph(5), p);
    REQUIRE(k5.outcome == MinorOutcome::Model);
    REQUIRE(validate_model(k5.model, complete_graph(5), p));
    REQUIRE(k5.nodes > 0);
    REQUIRE(k5.seconds >= 0.0);

    auto k6 = find_minor(complete_graph(6), p);
    REQUIRE(k6.outcome == MinorOutcome::NoMinor);
    REQUIRE(k6.model.empty());
}

TEST_CASE("contraction cases") {
    // C4 <= K4 (delete an edge), C5 <= Petersen (outer cycle as-is)
    auto c4 = find_minor(cycle_graph(4), complete_graph(4));
    REQUIRE(c4.outcome == MinorOutcome::Model);
    auto c5 = find_minor(cycle_graph(5), petersen());
    REQUIRE(c5.outcome == MinorOutcome::Model);
    // P4 has max degree 2, and minors cannot raise degrees above contractions of paths
    Graph claw(4);
    claw.add_edge(0, 1);
    claw.add_edge(0, 2);
    claw.add_edge(0, 3);
    REQUIRE(find_minor(claw, path_graph(4)).outcome == MinorOutcome::NoMinor);
    // K4 needs a cycle with a chord structure no tree has
    Graph star6(6);
    for (int i = 1; i < 6; ++i) star6.add_edge(0, i);
    REQUIRE(find_minor(complete_graph(3), star6).outcome == MinorOutcome::NoMinor);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    SearchBudget tiny;
    tiny.node_limit = 1;
    auto r = find_minor(complete_graph(5), petersen(), tiny);
    REQUIRE(r.outcome == MinorOutcome::Inconclusive);
    REQUIRE(r.nodes >= 1);
    REQUIRE(r.model.empty());
}

TEST_CASE("naive oracle guard and basics") {
    REQUIRE_THROWS_AS(naive_minor(complete_graph(3), complete_graph(10)), std::invalid_argument);
    REQUIRE_THROWS_AS(naive_minor(complete_graph(5), petersen()), std::invalid_argument);
    REQUIRE(naive_minor(complete_graph(4), complete_graph(9)));
    REQUIRE(naive_minor(cycle_graph(4), complete_graph(4)));
    REQUIRE_FALSE(naive_minor(complete_graph(3), path_graph(9)));
}

TEST_CASE("search agrees with the naive oracle over the n<=5 catalogue") {
    // every pattern against every host on up to 5 vertices, up to isomorphism
    for (int hn = 1; hn <= 5; ++hn) {
        for (const Graph& h : oracles::catalogue(hn)) {
            for (int gn = 1; gn <= 5; ++gn) {
                for (const Graph& g : oracles::catalogue(gn)) {
                    bool expect = naive_minor(h, g);
                    auto got = find_minor(h, g);
                    REQUIRE(got.outcome != MinorOutcome::Inconclusive);
                    bool found = got.outcome == MinorOutcome::Model;
                    INFO("h " << graph_to_string(h) << "g " << graph_to_string(g));
                    REQUIRE(found == expect);
                    if (found) REQUIRE(validate_model(got.model, h, g));
                }
            }
        }
    }
}

TEST_CASE("search agrees with the naive oracle on random pairs") {
    for (int i = 0; i < 500; ++i) {
        Seed base{424242, static_cast<std::uint64_t>(i)};
        Rng rng(base);
        int hn = 2 + static_cast<int>(rng.below(4));  // 2..5
        int gn = hn + static_cast<int>(rng.below(4)); // hn..hn+3, <= 8
        Graph h = sample_gnp(hn, 0.55, base.with_stream(1000 + static_cast<std::uint64_t>(i)));
        Graph g = sample_gnp(gn, 0.45, base.with_stream(2000 + static_cast<std::uint64_t>(i)));
        bool expect = naive_minor(h, g);
        auto got = find_minor(h, g);
        REQUIRE(got.outcome != MinorOutcome::Inconclusive);
        INFO("pair " << i << "\nh " << graph_to_string(h) << "g " << graph_to_string(g));
        REQUIRE((got.outcome == MinorOutcome::Model) == expect);
        if (expect) REQUIRE(validate_model(got.model, h, g));
    }
}

TEST_CASE("graphs with isolated pattern vertices") {
    Graph h2(2); // two isolated vertices: any host with >= 2 vertices hosts it
    auto r = find_minor(h2, complete_graph(2));
    REQUIRE(r.outcome == MinorOutcome::Model);
    REQUIRE(validate_model(r.model, h2, complete_graph(2)));
    Graph g2(2);
    auto r2 = find_minor(h2, g2);
    REQUIRE(r2.outcome == MinorOutcome::Model);
}

#include <catch2/catch_amalgamated.hpp>

#include "minors/blobbing.hpp"
#include "minors/blowup.hpp"
#include "minors/counting.hpp"
#include "minors/graph.hpp"
#include "minors/params.hpp"
#include "support/oracles.hpp"

using namespace minors;

TEST_CASE("binomial coefficients") {
    REQUIRE(binomial(6UL, 3UL) == 20);
    REQUIRE(binomial(0UL, 0UL) == 1);
    REQUIRE(binomial(5UL, 7UL) == 0);
    REQUIRE(binomial(mpz_class(50), 25) == mpz_class("126410606437752"));
    REQUIRE(binomial(mpz_class(4), 2) == 6);
}

TEST_CASE("tuple counting recurrence against brute force") {
    REQUIRE(g_count(2, 1, 1) == 2);
    REQUIRE(g_count(2, 1, 5) == 3);
    REQUIRE(g_count(2, 2, 2) == 4);
    REQUIRE(g_count(2, 2, 3) == 8);
    REQUIRE(g_count(2, 2, 4) == 9);
    for (int d = 1; d <= 4; ++d)
        for (int t = 1; t <= 3; ++t)
            for (int n = 0; n <= 3 * d; ++n)
                REQUIRE(g_count(d, t, n) == oracles::brute_g_count(d, t, n));
}

TEST_CASE("tuple counting edge behavior and cap") {
    REQUIRE(g_count(5, 3, 2) == 0); // n < t leaves some slot empty
    REQUIRE(g_count(3, 3, 3) == 27);
    REQUIRE_THROWS_AS(g_count(0, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g_count(1, 0, 1), std::invalid_argument);
    REQUIRE(four_d_power(3, 2) == 144);
    REQUIRE(four_d_power(5, 0) == 1);
    for (int n = 1; n <= 12; ++n) REQUIRE(g_count(4, 3, n) <= four_d_power(4, n));
    REQUIRE(g_count(10, 8, 40) <= four_d_power(10, 40));
}

TEST_CASE("blobbing invariants") {
    Blobbing bl;
    bl.d = 3;
    bl.capacity = 4;
    bl.r = 2;
    bl.blobs = {Bitset::of(3, {0, 1}), Bitset::of(3, {1, 2})};
    REQUIRE(bl.valid());
    REQUIRE(bl.t() == 2);

    Blobbing wrong_universe = bl;
    wrong_universe.blobs[1] = Bitset::of(4, {1, 2});
    REQUIRE(wrong_universe.violation().value().find("not over") != std::string::npos);

    Blobbing empty_blob = bl;
    empty_blob.blobs[0] = Bitset(3);
    REQUIRE(empty_blob.violation().value().find("empty") != std::string::npos);

    Blobbing over_capacity = bl;
    over_capacity.capacity = 3;
    REQUIRE(over_capacity.violation().value().find("capacity") != std::string::npos);

    Blobbing over_mult = bl;
    over_mult.r = 1;
    REQUIRE(over_mult.violation().value().find("> r blobs") != std::string::npos);
}

TEST_CASE("blobbing text form") {
    Blobbing bl;
    bl.d = 3;
    bl.capacity = 3;
    bl.r = 1;
    bl.blobs = {Bitset::of(3, {0, 1}), Bitset::of(3, {2})};
    REQUIRE(blobbing_to_string(bl) == "0 1\n2\n");
}

TEST_CASE("projecting a model down to the base") {
    BlowupGraph host = blowup(path_graph(2), 2); // K_{2,2}, classes {0,1} and {2,3}
    BranchSets model = {Bitset::of(4, {0}), Bitset::of(4, {2})};
    Blobbing bl = project(model, host);
    REQUIRE(bl.d == 2);
    REQUIRE(bl.capacity == 4);
    REQUIRE(bl.r == 2);
    REQUIRE(bl.blobs == std::vector<Bitset>{Bitset::of(2, {0}), Bitset::of(2, {1})});

    // a branch set spanning both classes projects to both base vertices
    BranchSets wide = {Bitset::of(4, {0, 2}), Bitset::of(4, {3})};
    Blobbing bw = project(wide, host);
    REQUIRE(bw.blobs[0] == Bitset::of(2, {0, 1}));
    REQUIRE(bw.blobs[1] == Bitset::of(2, {1}));

    BranchSets overlapping = {Bitset::of(4, {0, 1}), Bitset::of(4, {1, 2})};
    REQUIRE_THROWS_AS(project(overlapping, host), std::invalid_argument);
    BranchSets has_empty = {Bitset::of(4, {0}), Bitset(4)};
    REQUIRE_THROWS_AS(project(has_empty, host), std::invalid_argument);
    BranchSets bad_universe = {Bitset::of(5, {0}), Bitset::of(5, {2})};
    REQUIRE_THROWS_AS(project(bad_universe, host), std::invalid_argument);
}

TEST_CASE("good pair counting") {
    Graph p3 = path_graph(3);
    Blobbing bl;
    bl.d = 3;
    bl.capacity = 9;
    bl.r = 3;
    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {2}), Bitset::of(3, {1})};
    // only ({0},{2}) is non-adjacent in the path 0-1-2
    REQUIRE(count_good_pairs(bl, p3, 1.0) == 1);

    bl.blobs = {Bitset::of(3, {0, 1}), Bitset::of(3, {2})};
    REQUIRE(count_good_pairs(bl, p3, 2.0) == 0); // adjacent via 1-2
    REQUIRE(count_good_pairs(bl, p3, 1.0) == 0); // first blob oversized, skipped

    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {0})};
    REQUIRE(count_good_pairs(bl, p3, 1.0) == 0); // intersecting pair is not good

    Graph empty3(3);
    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {2}), Bitset::of(3, {1})};
    REQUIRE(count_good_pairs(bl, empty3, 1.0) == 3);

    REQUIRE_THROWS_AS(count_good_pairs(bl, path_graph(4), 1.0), std::invalid_argument);
}

TEST_CASE("pattern compatibility") {
    Graph p3 = path_graph(3);
    Graph k2 = complete_graph(2);
    Blobbing bl;
    bl.d = 3;
    bl.capacity = 9;
    bl.r = 3;

    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {1})};
    REQUIRE(is_h_compatible(bl, p3, k2)); // adjacent blobs serve the edge

    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {2})};
    REQUIRE_FALSE(is_h_compatible(bl, p3, k2)); // disjoint and non-adjacent

    bl.blobs = {Bitset::of(3, {0, 1}), Bitset::of(3, {1})};
    REQUIRE(is_h_compatible(bl, p3, k2)); // intersection also serves the edge

    // the pattern non-edge (0,2) imposes nothing
    Graph h3(3);
    h3.add_edge(0, 1);
    h3.add_edge(1, 2);
    bl.blobs = {Bitset::of(3, {0}), Bitset::of(3, {1}), Bitset::of(3, {2})};
    REQUIRE(is_h_compatible(bl, p3, h3));

    REQUIRE_THROWS_AS(is_h_compatible(bl, p3, k2), std::invalid_argument); // t mismatch
}

TEST_CASE("good pair threshold formula") {
    Params pr = derive_params_custom(0.5, 16, 100, 0.5, 1.0);
    REQUIRE(good_pair_threshold(pr) == Catch::Approx(0.25 / 400.0 / 16.0 * 100.0 * 100.0));
    Params pr2 = derive_params_custom(0.5, 2, 3, 0.5, 1.0);
    REQUIRE(good_pair_threshold(pr2) == Catch::Approx(0.0028125));
}

TEST_CASE("blobbing enumeration against a direct triple loop") {
    // d = 2, t = 3, capacity 4, r = 2 over masks {01, 10, 11}
    long expect = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                auto size = [](int m) { return __builtin_popcount(static_cast<unsigned>(m)); };
                if (size(a) + size(b) + size(c) > 4) continue;
                bool ok = true;
                for (int v = 0; v < 2; ++v) {
                    int mult = ((a >> v) & 1) + ((b >> v) & 1) + ((c >> v) & 1);
                    if (mult > 2) ok = false;
                }
                if (ok) ++expect;
            }
    REQUIRE(expect == 12);
    REQUIRE(count_blobbings(2, 3, 4, 2) == expect);

    std::vector<std::vector<std::uint64_t>> seen;
    mpz_class n = enumerate_blobbings(2, 3, 4, 2, 1e9,
                                      [&](const std::vector<std::uint64_t>& masks) { seen.push_back(masks); });
    REQUIRE(n == expect);
    REQUIRE(static_cast<long>(seen.size()) == expect);
    REQUIRE(std::is_sorted(seen.begin(), seen.end()));
    REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("blobbing counts under tight constraints") {
    REQUIRE(count_blobbings(2, 2, 4, 2) == 9);
    REQUIRE(count_blobbings(2, 2, 2, 2) == 4);  // capacity forces singletons
    REQUIRE(count_blobbings(2, 2, 4, 1) == 2);  // r = 1 forces disjoint blobs
    REQUIRE(count_blobbings(1, 3, 3, 2) == 0);  // multiplicity cannot reach t
    REQUIRE(count_blobbings(1, 3, 3, 3) == 1);
    REQUIRE_THROWS_AS(count_blobbings(63, 2, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(count_blobbings(10, 10, 100, 10, 1e6), budget_error);
    try {
        count_blobbings(10, 10, 100, 10, 1e6);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        REQUIRE(e.estimate > 1e6);
    }
}

TEST_CASE("exhaustive good-pair floor on desk-scale instances") {
    // d = 2, t = 3 fixture: on the empty base every valid blobbing keeps at
    // least one good singleton pair, and one blobbing achieves exactly one
    Params pr = derive_params_custom(0.5, 2, 3, 0.5, 1.0);
    REQUIRE(pr.r == 2);
    REQUIRE(pr.ell_cap() == 1);
    Graph empty2(2);
    GoodPairFloor floor_empty = min_good_pairs_exhaustive(empty2, pr);
    REQUIRE(floor_empty.blobbings == 12);
    REQUIRE(floor_empty.min_good_pairs == 1);
    REQUIRE(floor_empty.threshold == Catch::Approx(0.0028125));

    // adding the edge lets ({0},{1}) pairs be adjacent, so the floor drops to 0
    GoodPairFloor floor_k2 = min_good_pairs_exhaustive(complete_graph(2), pr);
    REQUIRE(floor_k2.blobbings == 12);
    REQUIRE(floor_k2.min_good_pairs == 0);

    REQUIRE_THROWS_AS(min_good_pairs_exhaustive(Graph(3), pr), std::invalid_argument);
}

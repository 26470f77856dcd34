#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "dirminor/coloring.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/generators.hpp"
#include "dirminor/strong_minors.hpp"
#include "oracles.hpp"

using namespace dirminor;

namespace {

StrongMinorModel identity_model(const Digraph& d) {
    StrongMinorModel m;
    m.host = d;
    m.pattern = d;
    for (int v = 0; v < d.vertex_count(); ++v) m.branch_sets.push_back({v});
    return m;
}

}  // namespace

TEST_CASE("model verification on the spelled-out cases") {
    Digraph k3 = bidirected_clique(3);
    CHECK(verify_strong_model(identity_model(k3)));

    // disconnected branch set
    StrongMinorModel bad;
    bad.host = Digraph(3, {{0, 1}, {1, 0}});
    bad.pattern = bidirected_clique(1);
    bad.branch_sets = {{0, 2}};
    CHECK(!verify_strong_model(bad));

    // empty, overlapping and out-of-range branch sets
    StrongMinorModel empty_set = identity_model(k3);
    empty_set.branch_sets[1] = {};
    CHECK(!verify_strong_model(empty_set));
    StrongMinorModel overlap = identity_model(k3);
    overlap.branch_sets[1] = {0};
    CHECK(!verify_strong_model(overlap));
    StrongMinorModel oob = identity_model(k3);
    oob.branch_sets[1] = {7};
    CHECK(!verify_strong_model(oob));

    // missing realized arc
    StrongMinorModel unrealized;
    unrealized.host = Digraph(2, {{0, 1}});
    unrealized.pattern = Digraph(2, {{0, 1}, {1, 0}});
    unrealized.branch_sets = {{0}, {1}};
    CHECK(!verify_strong_model(unrealized));

    // wrong branch-set count
    StrongMinorModel short_list = identity_model(k3);
    short_list.branch_sets.pop_back();
    CHECK(!verify_strong_model(short_list));
}

TEST_CASE("strengthened verification needs two arcs each way") {
    // two digons as branch sets, double arcs both ways between them
    Digraph host(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2},
                     {0, 2}, {1, 3}, {2, 0}, {3, 1}});
    StrongMinorModel m;
    m.host = host;
    m.pattern = bidirected_clique(2);
    m.branch_sets = {{0, 1}, {2, 3}};
    CHECK(verify_strong_model(m));
    CHECK(verify_strong_model(m, true));

    // drop one crossing arc: plain still fine, strengthened fails
    Digraph thin(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {2, 0}, {3, 1}});
    m.host = thin;
    CHECK(verify_strong_model(m));
    CHECK(!verify_strong_model(m, true));
}

TEST_CASE("model search on the spelled-out cases") {
    Digraph path(3, {{0, 1}, {1, 2}});
    auto k1 = find_strong_model(path, bidirected_clique(1));
    REQUIRE(k1.has_value());
    CHECK(verify_strong_model(*k1));
    CHECK(k1->branch_sets.size() == 1);

    // the bidirected 5-cycle has a strong bidirected-K3 model (contract two
    // cycle edges); only the butterfly variant is absent there
    auto c5k3 = find_strong_model(lower_bound_butterfly(3), bidirected_clique(3));
    REQUIRE(c5k3.has_value());
    CHECK(verify_strong_model(*c5k3));

    CHECK(!find_strong_model(path, bidirected_clique(2)).has_value());

    auto k43 = find_strong_model(bidirected_clique(4), bidirected_clique(3));
    REQUIRE(k43.has_value());
    CHECK(verify_strong_model(*k43));

    CHECK_THROWS_AS(find_strong_model(Digraph(21, {}), bidirected_clique(2)),
                    std::invalid_argument);
}

TEST_CASE("model search agrees with the disjoint-pair oracle for order two") {
    Digraph digon(2, {{0, 1}, {1, 0}});
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Digraph d = random_digraph(n, 0.15 + 0.1 * static_cast<double>(seed % 7), seed);
        CAPTURE(seed);
        auto got = find_strong_model(d, digon);
        CHECK(got.has_value() == oracle::strong_k2(d));
        if (got) CHECK(verify_strong_model(*got));
    }
}

TEST_CASE("model search is exact against a partition sweep for order three") {
    // exhaustive cross-check on a few awkward hosts: every way of choosing
    // three disjoint strongly connected sets is swept by the oracle
    std::vector<Digraph> hosts{bidirected_cycle(5), bidirected_cycle(6),
                               lower_bound_butterfly(3),
                               random_digraph(6, 0.5, 5),
                               random_digraph(6, 0.6, 17)};
    Digraph k3 = bidirected_clique(3);
    for (const Digraph& d : hosts) {
        bool expect = false;
        int n = d.vertex_count();
        for (std::uint32_t a = 1; a < (1u << n) && !expect; ++a) {
            if (!oracle::subset_strong(d, a)) continue;
            std::uint32_t rest1 = ((1u << n) - 1) & ~a;
            for (std::uint32_t b = rest1; b && !expect; b = (b - 1) & rest1) {
                if (!oracle::subset_strong(d, b)) continue;
                std::uint32_t rest2 = rest1 & ~b;
                for (std::uint32_t c = rest2; c && !expect; c = (c - 1) & rest2) {
                    if (!oracle::subset_strong(d, c)) continue;
                    auto linked = [&](std::uint32_t x, std::uint32_t y) {
                        bool xy = false, yx = false;
                        for (auto [u, v] : d.arcs()) {
                            if (((x >> u) & 1u) && ((y >> v) & 1u)) xy = true;
                            if (((y >> u) & 1u) && ((x >> v) & 1u)) yx = true;
                        }
                        return xy && yx;
                    };
                    if (linked(a, b) && linked(a, c) && linked(b, c)) expect = true;
                }
            }
        }
        CHECK(find_strong_model(d, k3).has_value() == expect);
    }
}

TEST_CASE("clique minor search on the spelled-out cases") {
    auto ident = find_clique_minor(complete_graph(4), 4);
    REQUIRE(ident.has_value());
    CHECK(verify_undirected_model(*ident));
    for (const auto& s : ident->branch_sets) CHECK(s.size() == 1);

    auto c5 = find_clique_minor(cycle_graph(5), 3);
    REQUIRE(c5.has_value());
    CHECK(verify_undirected_model(*c5));

    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!find_clique_minor(path, 3).has_value());
    CHECK(find_clique_minor(path, 2).has_value());

    // forests never contain a triangle minor
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < 7; ++v)
            edges.emplace_back(static_cast<int>(seed % v), v);
        CHECK(!find_clique_minor(Graph(7, edges), 3).has_value());
    }
}

TEST_CASE("promotion to the biorientation") {
    auto c5 = find_clique_minor(cycle_graph(5), 3);
    REQUIRE(c5.has_value());
    auto promoted = promote_to_bioriented(*c5, biorient(cycle_graph(5)));
    CHECK(verify_strong_model(promoted));
    CHECK(promoted.pattern == bidirected_clique(3));
    CHECK(promoted.branch_sets == c5->branch_sets);

    // an orientation without the digons is rejected
    Digraph oneway(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_AS(promote_to_bioriented(*c5, oneway), std::invalid_argument);

    UndirectedMinorModel ident;
    ident.host = complete_graph(3);
    ident.pattern = complete_graph(3);
    ident.branch_sets = {{0}, {1}, {2}};
    auto pid = promote_to_bioriented(ident, bidirected_clique(3));
    CHECK(verify_strong_model(pid));
}

TEST_CASE("composition of models") {
    Digraph k4 = bidirected_clique(4);
    auto inner = identity_model(k4);
    auto outer = find_strong_model(k4, bidirected_clique(2));
    REQUIRE(outer.has_value());

    CHECK(compose_models(*outer, inner).branch_sets == outer->branch_sets);

    StrongMinorModel outer_id = identity_model(bidirected_clique(2));
    StrongMinorModel inner2 = *outer;
    auto same = compose_models(outer_id, inner2);
    CHECK(same.branch_sets == inner2.branch_sets);
    CHECK(same.host == inner2.host);

    // mismatched middle digraph
    StrongMinorModel wrong = *outer;
    wrong.host = bidirected_clique(5);
    CHECK_THROWS_AS(compose_models(wrong, inner), std::invalid_argument);
}

TEST_CASE("composition verifies and is associative on inflated towers") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Digraph pattern = bidirected_clique(2 + static_cast<int>(seed % 2));
        StrongMinorModel mid = random_inflation(pattern, 2, seed);
        REQUIRE(verify_strong_model(mid));
        StrongMinorModel low = random_inflation(mid.host, 2, seed + 99, false);
        REQUIRE(verify_strong_model(low));

        auto composed = compose_models(mid, low);
        CHECK(verify_strong_model(composed));
        CHECK(composed.pattern == pattern);
        CHECK(composed.host == low.host);

        // associativity: (outer∘mid)∘low == outer∘(mid∘low) on a 3-level tower
        auto outer = identity_model(pattern);
        auto left = compose_models(compose_models(outer, mid), low);
        auto right = compose_models(outer, compose_models(mid, low));
        CHECK(left.branch_sets == right.branch_sets);
        CHECK(left.host == right.host);
        CHECK(left.pattern == right.pattern);
    }
}

TEST_CASE("random inflation plants verified models deterministically") {
    for (std::uint64_t seed = 40; seed < 70; ++seed) {
        Digraph pattern = directed_cycle(2 + static_cast<int>(seed % 3));
        auto a = random_inflation(pattern, 4, seed);
        auto b = random_inflation(pattern, 4, seed);
        CHECK(verify_strong_model(a));
        CHECK(a.host == b.host);
        CHECK(a.branch_sets == b.branch_sets);
        CHECK(a.pattern == pattern);
    }
}

TEST_CASE("chromatic threshold table") {
    for (int t = 1; t <= 6; ++t) CHECK(hadwiger_threshold(t) == t);
    CHECK_THROWS_AS(hadwiger_threshold(7), std::invalid_argument);
    CHECK_THROWS_AS(hadwiger_threshold(0), std::invalid_argument);
}

TEST_CASE("forcing pipeline on the spelled-out cases") {
    auto k5 = force_strong_clique_minor(bidirected_clique(5), 3);
    REQUIRE(k5.has_value());
    CHECK(verify_strong_model(*k5));
    CHECK(k5->pattern == bidirected_clique(3));
    CHECK(k5->host == bidirected_clique(5));

    Digraph acyclic(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!force_strong_clique_minor(acyclic, 2).has_value());
    CHECK(!force_strong_clique_minor(acyclic, 3).has_value());

    // bidirected 5-cycle: dichromatic number 3 < 5, no promise, and in fact
    // no model at all
    CHECK(!force_strong_clique_minor(lower_bound_butterfly(3), 3).has_value());

    CHECK_THROWS_AS(force_strong_clique_minor(acyclic, 7), std::invalid_argument);
}

TEST_CASE("dichromatic strength forces the order-two clique") {
    // every digraph with dichromatic number >= 3 must yield a model of the
    // bidirected 2-clique through the pipeline
    int forced = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        Digraph d = random_digraph(n, 0.5 + 0.05 * static_cast<double>(seed % 5), seed);
        if (dichromatic_number(d).first < 3) continue;
        ++forced;
        auto got = force_strong_clique_minor(d, 2);
        CAPTURE(seed);
        REQUIRE(got.has_value());
        CHECK(verify_strong_model(*got));
        CHECK(got->pattern == bidirected_clique(2));
    }
    CHECK(forced >= 10);
}

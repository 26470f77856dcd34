#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dirminor/coloring.hpp"
#include "dirminor/decomposition.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/generators.hpp"
#include "dirminor/strong_minors.hpp"
#include "oracles.hpp"

using namespace dirminor;

namespace {

MaximalPartition singleton_partition(const Digraph& d) {
    MaximalPartition p;
    for (int v = 0; v < d.vertex_count(); ++v) {
        p.parts.push_back({v});
        p.part_colors.push_back({0});
    }
    return p;
}

std::vector<int> part_sizes(const MaximalPartition& p) {
    std::vector<int> sizes;
    for (const auto& part : p.parts) sizes.push_back(static_cast<int>(part.size()));
    return sizes;
}

void check_full_certificate(const Digraph& d, const DecompositionCertificate& cert) {
    CHECK(cert.host == d);
    check_partition_structure(d, cert.partition);
    CHECK(cert.quotient == quotient_graph(d, cert.partition));
    CHECK(is_valid_proper_coloring(cert.quotient, cert.quotient_coloring));
    CHECK(cert.quotient_coloring.k == chromatic_number(cert.quotient).first);
    CHECK(is_valid_acyclic_coloring(d, cert.lifted));
    CHECK(!find_monochromatic_cycle(d, cert.lifted.color).has_value());
    CHECK(cert.lifted.k <= 2 * cert.quotient_coloring.k);
    CHECK(verify_strong_model(cert.model));
    CHECK(cert.model.host == d);
    CHECK(cert.model.pattern == biorient(cert.quotient));
    CHECK(cert.model.branch_sets == cert.partition.parts);
    CHECK(dichromatic_number(d).first <= 2 * cert.quotient_coloring.k);
}

}  // namespace

TEST_CASE("grow_part on the spelled-out cases") {
    Digraph k5 = bidirected_clique(5);
    auto lone = grow_part(k5, {2}, 2);
    CHECK(lone.part == VertexSet{2});

    Digraph path = biorient(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    for (int seed = 0; seed < 5; ++seed) {
        auto grown = grow_part(path, {0, 1, 2, 3, 4}, seed);
        CHECK(grown.part == VertexSet{0, 1, 2, 3, 4});
        CHECK(is_strongly_connected_subset(path, grown.part));
        // stored coloring is a valid 2-coloring of the grown part
        AcyclicColoring f;
        f.k = 2;
        f.color.assign(5, 0);
        for (std::size_t i = 0; i < grown.part.size(); ++i)
            f.color[grown.part[i]] = grown.colors[i];
        CHECK(is_valid_acyclic_coloring(path, f));
    }

    for (int seed = 0; seed < 5; ++seed) {
        auto grown = grow_part(k5, {0, 1, 2, 3, 4}, seed);
        CHECK(grown.part.size() == 2);  // no 3 vertices of the clique fit two classes
        CHECK(oracle::two_dicolorable_subset(k5, grown.part));
    }

    CHECK_THROWS_AS(grow_part(k5, {0, 1}, 3), std::invalid_argument);
}

TEST_CASE("grown parts are inclusion-maximal in their remainder") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        Digraph d = random_digraph(n, 0.4, seed);
        VertexSet remainder;
        for (int v = 0; v < n; ++v) remainder.push_back(v);
        auto grown = grow_part(d, remainder, 0);
        CHECK(is_strongly_connected_subset(d, grown.part));
        CHECK(oracle::two_dicolorable_subset(d, grown.part));
        // no superset within the remainder stays strongly connected and
        // 2-dicolorable: exhaustive over all supersets
        std::vector<int> outside;
        for (int v : remainder)
            if (!std::binary_search(grown.part.begin(), grown.part.end(), v))
                outside.push_back(v);
        int extra = static_cast<int>(outside.size());
        for (std::uint32_t bits = 1; bits < (1u << extra); ++bits) {
            VertexSet super = grown.part;
            for (int i = 0; i < extra; ++i)
                if ((bits >> i) & 1u) super.push_back(outside[i]);
            std::sort(super.begin(), super.end());
            CAPTURE(seed);
            CHECK(!(is_strongly_connected_subset(d, super) &&
                    oracle::two_dicolorable_subset(d, super)));
        }
    }
}

TEST_CASE("build_partition on the spelled-out cases") {
    Digraph acyclic(4, {{0, 1}, {1, 2}, {0, 3}});
    auto p = build_partition(acyclic);
    CHECK(p.parts.size() == 4);
    for (const auto& part : p.parts) CHECK(part.size() == 1);

    auto pk4 = build_partition(bidirected_clique(4));
    CHECK(part_sizes(pk4) == std::vector<int>{2, 2});

    auto pk5 = build_partition(bidirected_clique(5));
    CHECK(part_sizes(pk5) == std::vector<int>{2, 2, 1});

    CHECK(build_partition(Digraph(0, {})).parts.empty());

    check_partition_structure(acyclic, p);
    check_partition_structure(bidirected_clique(4), pk4);
}

TEST_CASE("quotient graph joins parts with opposing arcs") {
    Digraph acyclic(3, {{0, 1}, {1, 2}});
    auto p = build_partition(acyclic);
    CHECK(quotient_graph(acyclic, p).edge_count() == 0);

    Digraph k5 = bidirected_clique(5);
    auto pk5 = build_partition(k5);
    CHECK(quotient_graph(k5, pk5) == complete_graph(3));

    Digraph cyc = directed_cycle(4);
    MaximalPartition whole;
    whole.parts = {{0, 1, 2, 3}};
    whole.part_colors = {{0, 0, 0, 1}};
    CHECK(quotient_graph(cyc, whole) == complete_graph(1));

    // one-way arcs only: no quotient edge
    Digraph oneway(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
    MaximalPartition two;
    two.parts = {{0, 1}, {2, 3}};
    two.part_colors = {{0, 1}, {0, 1}};
    CHECK(quotient_graph(oneway, two).edge_count() == 0);
}

TEST_CASE("lift_coloring composes quotient and part colors") {
    Digraph cyc = directed_cycle(4);
    MaximalPartition whole;
    whole.parts = {{0, 1, 2, 3}};
    whole.part_colors = {{0, 0, 0, 1}};
    auto lifted = lift_coloring(cyc, whole, {{0}, 1});
    CHECK(lifted.color == std::vector<int>{0, 0, 0, 1});
    CHECK(is_valid_acyclic_coloring(cyc, lifted));

    Digraph acyclic(3, {{0, 1}, {1, 2}});
    auto p = build_partition(acyclic);
    auto qc = chromatic_number(quotient_graph(acyclic, p));
    auto f = lift_coloring(acyclic, p, qc.second);
    CHECK(is_valid_acyclic_coloring(acyclic, f));
    CHECK(!find_monochromatic_cycle(acyclic, f.color).has_value());
    CHECK(f.k == 2 * qc.first);

    // improper quotient coloring is rejected
    Digraph k5 = bidirected_clique(5);
    auto p2 = build_partition(k5);
    REQUIRE(p2.parts.size() == 3);
    CHECK_THROWS_AS(lift_coloring(k5, p2, {{0, 0, 0}, 1}),
                    std::invalid_argument);
}

TEST_CASE("repair loop driven by hand satisfies the exchange invariants") {
    std::vector<Digraph> hosts;
    hosts.push_back(directed_cycle(3));
    hosts.push_back(directed_cycle(5));
    for (std::uint64_t seed = 0; seed < 25; ++seed)
        hosts.push_back(random_tournament(4 + static_cast<int>(seed % 5), seed));
    for (std::uint64_t seed = 50; seed < 70; ++seed)
        hosts.push_back(random_digraph(7, 0.5, seed));
    for (std::uint64_t seed = 100; seed < 112; ++seed)
        hosts.push_back(random_tournament(9, seed));

    int repairs_seen = 0;
    for (const Digraph& d : hosts) {
        MaximalPartition p = singleton_partition(d);
        std::vector<int> prev_sizes = part_sizes(p);
        for (int round = 0;; ++round) {
            // the part-size tuple increases lexicographically, so rounds are
            // bounded by the number of compositions of n
            REQUIRE(round <= (1 << d.vertex_count()));
            auto qc = chromatic_number(quotient_graph(d, p));
            auto lifted = lift_coloring(d, p, qc.second);
            auto cyc = find_monochromatic_cycle(d, lifted.color);
            if (!cyc) break;
            ++repairs_seen;

            RepairContext ctx;
            MaximalPartition next = repair_step(d, p, *cyc, &ctx);

            int i0 = ctx.part_index;
            REQUIRE(i0 >= 0);
            REQUIRE(i0 < static_cast<int>(p.parts.size()));
            const VertexSet& old_part = p.parts[i0];
            CHECK(ctx.cycle == *cyc);
            CHECK(std::binary_search(old_part.begin(), old_part.end(), ctx.u));
            CHECK(std::binary_search(old_part.begin(), old_part.end(), ctx.v));
            CHECK(ctx.s >= 2);
            CHECK(ctx.s <= static_cast<int>(ctx.outside.size()));
            // w_1..w_l avoid every part up to i0
            for (int w : ctx.outside)
                for (int i = 0; i <= i0; ++i)
                    CHECK(!std::binary_search(p.parts[i].begin(), p.parts[i].end(), w));
            // x is an out-neighbour of w_s inside the old part
            CHECK(d.has_arc(ctx.outside[ctx.s - 1], ctx.x));
            CHECK(std::binary_search(old_part.begin(), old_part.end(), ctx.x));
            // absorbed = w_1..w_s in cycle order
            VertexSet expect_absorbed(ctx.outside.begin(), ctx.outside.begin() + ctx.s);
            CHECK(ctx.absorbed == expect_absorbed);
            // the enlarged set is strongly connected and the extended
            // 2-coloring (old colors, w_1..w_{s-1} first class, w_s second)
            // keeps both classes acyclic
            VertexSet enlarged = old_part;
            enlarged.insert(enlarged.end(), ctx.absorbed.begin(), ctx.absorbed.end());
            std::sort(enlarged.begin(), enlarged.end());
            CHECK(is_strongly_connected_subset(d, enlarged));
            VertexSet cls0, cls1;
            for (std::size_t i = 0; i < old_part.size(); ++i)
                (p.part_colors[i0][i] == 0 ? cls0 : cls1).push_back(old_part[i]);
            for (int i = 0; i < ctx.s - 1; ++i) cls0.push_back(ctx.outside[i]);
            cls1.push_back(ctx.outside[ctx.s - 1]);
            std::sort(cls0.begin(), cls0.end());
            std::sort(cls1.begin(), cls1.end());
            CHECK(is_acyclic_set(d, cls0));
            CHECK(is_acyclic_set(d, cls1));

            // parts before i0 untouched, part i0 strictly larger, lex increase
            check_partition_structure(d, next);
            for (int i = 0; i < i0; ++i) CHECK(next.parts[i] == p.parts[i]);
            CHECK(next.parts[i0].size() > old_part.size());
            CHECK(std::includes(next.parts[i0].begin(), next.parts[i0].end(),
                                enlarged.begin(), enlarged.end()));
            std::vector<int> sizes = part_sizes(next);
            CHECK(std::lexicographical_compare(prev_sizes.begin(), prev_sizes.end(),
                                               sizes.begin(), sizes.end()));
            prev_sizes = sizes;
            p = next;
        }
    }
    CHECK(repairs_seen >= 30);
}

TEST_CASE("repair_step rejects bad cycles") {
    Digraph d = directed_cycle(3);
    MaximalPartition p = singleton_partition(d);
    CHECK_THROWS_AS(repair_step(d, p, {0, 1}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(repair_step(d, p, {0, 2, 1}, nullptr), std::invalid_argument);
}

TEST_CASE("certification on the spelled-out cases") {
    auto ck6 = certify_decomposition(bidirected_clique(6));
    check_full_certificate(bidirected_clique(6), ck6);
    CHECK(ck6.quotient == complete_graph(3));
    CHECK(ck6.quotient_coloring.k == 3);
    CHECK(ck6.lifted.k == 6);
    CHECK(dichromatic_number(bidirected_clique(6)).first == 6);

    Digraph acyclic(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
    auto ca = certify_decomposition(acyclic);
    check_full_certificate(acyclic, ca);
    CHECK(ca.quotient.edge_count() == 0);
    CHECK(ca.quotient_coloring.k == 1);

    auto ce = certify_decomposition(Digraph(0, {}));
    CHECK(ce.partition.parts.empty());
    CHECK(ce.quotient.vertex_count() == 0);
    CHECK(ce.quotient_coloring.k == 0);
    CHECK(ce.model.branch_sets.empty());
}

TEST_CASE("certification of random digraphs, bound exact on both sides") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        int n = 1 + static_cast<int>(seed % 10);
        double p = 0.1 + 0.1 * static_cast<double>(seed % 9);
        Digraph d = random_digraph(n, p, seed);
        CAPTURE(seed);
        auto cert = certify_decomposition(d);
        check_full_certificate(d, cert);
        if (n <= 10) CHECK(assert_maximality(d, cert.partition));
        // history tuples strictly lexicographically increasing
        const auto& hist = cert.stats.part_size_history;
        REQUIRE(!hist.empty());
        for (std::size_t i = 1; i < hist.size(); ++i)
            CHECK(std::lexicographical_compare(hist[i - 1].begin(), hist[i - 1].end(),
                                               hist[i].begin(), hist[i].end()));
        CHECK(cert.stats.repair_count + 1 == static_cast<int>(hist.size()));
    }
}

TEST_CASE("certification is deterministic") {
    Digraph d = random_digraph(9, 0.5, 1234);
    auto a = certify_decomposition(d);
    auto b = certify_decomposition(d);
    CHECK(a.partition.parts == b.partition.parts);
    CHECK(a.partition.part_colors == b.partition.part_colors);
    CHECK(a.quotient == b.quotient);
    CHECK(a.quotient_coloring.color == b.quotient_coloring.color);
    CHECK(a.lifted.color == b.lifted.color);
    CHECK(a.stats.repair_count == b.stats.repair_count);
}

TEST_CASE("certification from a degenerate start repairs its way out") {
    std::vector<Digraph> hosts{directed_cycle(3), directed_cycle(6),
                               random_tournament(7, 3),
                               random_tournament(8, 11)};
    for (const Digraph& d : hosts) {
        auto cert = certify_decomposition_from(d, singleton_partition(d));
        check_full_certificate(d, cert);
        if (!is_acyclic(d)) CHECK(cert.stats.repair_count > 0);
    }

    // structurally broken starts are rejected
    Digraph digon(2, {{0, 1}, {1, 0}});
    MaximalPartition bad;
    bad.parts = {{0}};
    bad.part_colors = {{0}};
    CHECK_THROWS_AS(certify_decomposition_from(digon, bad), std::invalid_argument);
}

TEST_CASE("maximality oracle on the spelled-out cases") {
    Digraph acyclic(3, {{0, 1}, {1, 2}});
    CHECK(assert_maximality(acyclic, singleton_partition(acyclic)));

    Digraph k5 = bidirected_clique(5);
    CHECK(assert_maximality(k5, build_partition(k5)));

    Digraph path = biorient(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    MaximalPartition split;
    split.parts = {{0, 1}, {2, 3}};
    split.part_colors = {{0, 1}, {0, 1}};
    check_partition_structure(path, split);
    CHECK(!assert_maximality(path, split));
}

TEST_CASE("partition structure checker rejects malformed partitions") {
    Digraph digon(2, {{0, 1}, {1, 0}});
    MaximalPartition ok;
    ok.parts = {{0, 1}};
    ok.part_colors = {{0, 1}};
    check_partition_structure(digon, ok);

    MaximalPartition not_covering;
    not_covering.parts = {{0}};
    not_covering.part_colors = {{0}};
    CHECK_THROWS_AS(check_partition_structure(digon, not_covering),
                    std::invalid_argument);

    MaximalPartition bad_coloring;
    bad_coloring.parts = {{0, 1}};
    bad_coloring.part_colors = {{0, 0}};  // digon in one class
    CHECK_THROWS_AS(check_partition_structure(digon, bad_coloring),
                    std::invalid_argument);

    Digraph split(3, {{0, 1}, {1, 0}});
    MaximalPartition disconnected;
    disconnected.parts = {{0, 2}, {1}};
    disconnected.part_colors = {{0, 1}, {0}};
    CHECK_THROWS_AS(check_partition_structure(split, disconnected),
                    std::invalid_argument);

    MaximalPartition overlapping;
    overlapping.parts = {{0, 1}, {1, 2}};
    overlapping.part_colors = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(check_partition_structure(split, overlapping),
                    std::invalid_argument);
}

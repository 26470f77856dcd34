#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "dirminor/butterfly.hpp"
#include "dirminor/certificates.hpp"
#include "dirminor/coloring.hpp"
#include "dirminor/decomposition.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/generators.hpp"
#include "dirminor/io.hpp"
#include "dirminor/strong_minors.hpp"
#include "dirminor/subdivision.hpp"
#include "oracles.hpp"

using namespace dirminor;

TEST_CASE("digraph text parsing") {
    Digraph d = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(d == directed_cycle(3));

    // comments and blank lines are skipped, line numbers still count them
    Digraph commented = parse_digraph("# a triangle\n\n3 3\n0 1\n\n1 2\n2 0\n");
    CHECK(commented == directed_cycle(3));

    CHECK(parse_digraph("2 0\n") == Digraph(2, {}));
    CHECK(parse_digraph("0 0\n") == Digraph(0, {}));
}

TEST_CASE("digraph parse errors point at the offending line") {
    try {
        parse_digraph("2 1\n0 0\n");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    try {
        parse_digraph("# intro\n2 1\n0 2\n");
        FAIL("out of range accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    try {
        parse_digraph("2 2\n0 1\n0 1\n");
        FAIL("duplicate accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS(parse_digraph(""), ParseError);
    CHECK_THROWS_AS(parse_digraph("2\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("2 2\n0 1\n"), ParseError);      // too few
    CHECK_THROWS_AS(parse_digraph("2 0\n0 1\n"), ParseError);      // too many
    CHECK_THROWS_AS(parse_digraph("2 1\n0 1 3\n"), ParseError);    // extra token
    CHECK_THROWS_AS(parse_digraph("x y\n"), ParseError);
}

TEST_CASE("serialization round-trips on random digraphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Digraph d = random_digraph(1 + static_cast<int>(seed % 9), 0.4, seed);
        CHECK(parse_digraph(serialize_digraph(d)) == d);
        Graph g = random_graph(1 + static_cast<int>(seed % 9), 0.4, seed);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    CHECK(serialize_digraph(directed_cycle(3)) == "3 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("graph parsing accepts either endpoint order") {
    Graph g = parse_graph("3 2\n2 0\n1 0\n");
    CHECK(g == Graph(3, {{0, 2}, {0, 1}}));
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), ParseError);  // duplicate
}

TEST_CASE("digest freezes to the published test vectors") {
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("dot rendering mentions every arc") {
    Digraph d = directed_cycle(3);
    std::string dot = to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1") != std::string::npos);
    CHECK(dot.find("2 -> 0") != std::string::npos);

    std::vector<VertexSet> parts{{0, 1}, {2}};
    std::string colored = to_dot(d, &parts);
    CHECK(colored.find("fillcolor") != std::string::npos);
}

TEST_CASE("digraph json round-trip") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = random_digraph(1 + static_cast<int>(seed % 7), 0.5, seed);
        CHECK(digraph_from_json(digraph_to_json(d)) == d);
        Graph g = random_graph(1 + static_cast<int>(seed % 7), 0.5, seed);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    CHECK_THROWS_AS(digraph_from_json(Json{{"n", 1}, {"arcs", {{0, 0}}}}),
                    std::invalid_argument);
}

TEST_CASE("dicoloring certificates verify and resist tampering") {
    Digraph d = random_digraph(6, 0.5, 3);
    auto [k, witness] = dichromatic_number(d);
    Json doc = make_dicoloring_certificate(d, witness);
    CHECK(doc.at("format") == "dirminor-certificate");
    CHECK(doc.at("kind") == "dicoloring");
    CHECK(verify_certificate(doc).ok);

    // round-trip through text keeps it verifiable
    CHECK(verify_certificate(Json::parse(doc.dump())).ok);

    Json wrong_k = doc;
    wrong_k["payload"]["k"] = k + 1;  // witness no longer optimal
    CHECK(!verify_certificate(wrong_k).ok);

    Json wrong_color = doc;
    wrong_color["payload"]["colors"][0] = k;  // out of range
    CHECK(!verify_certificate(wrong_color).ok);

    Json wrong_input = doc;
    wrong_input["payload"]["digraph"] = digraph_to_json(directed_cycle(3));
    CHECK(!verify_certificate(wrong_input).ok);  // digest mismatch

    Json wrong_kind = doc;
    wrong_kind["kind"] = "no-such-kind";
    auto out = verify_certificate(wrong_kind);
    CHECK(!out.ok);
    CHECK(!out.message.empty());

    CHECK(!verify_certificate(Json{{"format", "something-else"}}).ok);
    CHECK(!verify_certificate(Json::object()).ok);
    CHECK(!verify_certificate(Json{{"format", "dirminor-certificate"},
                                   {"kind", "dicoloring"}})
               .ok);  // missing payload
}

TEST_CASE("decomposition certificates verify and resist tampering") {
    Digraph d = random_digraph(8, 0.5, 21);
    auto cert = certify_decomposition(d);
    Json doc = make_decomposition_certificate(cert);
    CHECK(doc.at("kind") == "decomposition");
    CHECK(verify_certificate(doc).ok);

    Json broken_parts = doc;
    broken_parts["payload"]["parts"][0][0] = 7;  // breaks the partition
    CHECK(!verify_certificate(broken_parts).ok);

    Json wrong_quotient = doc;
    wrong_quotient["payload"]["quotient"] =
        graph_to_json(complete_graph(cert.quotient.vertex_count() + 1));
    CHECK(!verify_certificate(wrong_quotient).ok);

    Json wasteful = doc;
    wasteful["payload"]["quotient_coloring"]["k"] =
        cert.quotient_coloring.k + 1;  // claims a non-optimal count
    CHECK(!verify_certificate(wasteful).ok);

    Json wrong_lift = doc;
    wrong_lift["payload"]["lifted"]["colors"][0] =
        (cert.lifted.color[0] + 1) % std::max(2, cert.lifted.k);
    CHECK(!verify_certificate(wrong_lift).ok);
}

TEST_CASE("strong model certificates verify and resist tampering") {
    auto model = random_inflation(bidirected_clique(2), 3, 5);
    Json doc = make_strong_model_certificate(model, false);
    CHECK(doc.at("kind") == "strong-model");
    CHECK(verify_certificate(doc).ok);

    Json overlap = doc;
    overlap["payload"]["branch_sets"][0] = doc["payload"]["branch_sets"][1];
    CHECK(!verify_certificate(overlap).ok);

    // claiming the strengthened property needs two arcs per direction;
    // a single-realizing-arc inflation can never satisfy it
    auto plain = random_inflation(bidirected_clique(2), 3, 5, false);
    Json single = make_strong_model_certificate(plain, false);
    CHECK(verify_certificate(single).ok);
    Json inflated_claim = single;
    inflated_claim["payload"]["strengthened"] = true;
    CHECK(!verify_certificate(inflated_claim).ok);

    // and a genuinely doubled host passes with the claim set
    Digraph doubled(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2},
                        {0, 2}, {1, 3}, {2, 0}, {3, 1}});
    StrongMinorModel strong{doubled, bidirected_clique(2), {{0, 1}, {2, 3}}};
    REQUIRE(verify_strong_model(strong, true));
    CHECK(verify_certificate(make_strong_model_certificate(strong, true)).ok);
}

TEST_CASE("butterfly certificates verify and resist tampering") {
    auto model = random_inflation(bidirected_clique(4), 3, 9);
    auto trace = extract_butterfly(model);
    Json doc = make_butterfly_certificate(trace, 2);
    CHECK(doc.at("kind") == "butterfly-trace");
    CHECK(verify_certificate(doc).ok);

    Json wrong_order = doc;
    wrong_order["payload"]["order"] = 3;
    CHECK(!verify_certificate(wrong_order).ok);

    Json wrong_result = doc;
    wrong_result["payload"]["result"] = digraph_to_json(directed_cycle(3));
    CHECK(!verify_certificate(wrong_result).ok);

    Json clipped = doc;
    clipped["payload"]["steps"].erase(clipped["payload"]["steps"].size() - 1);
    CHECK(!verify_certificate(clipped).ok);  // final contraction missing

    // steps survive the json round-trip verbatim
    Json reparsed = Json::parse(doc.dump(2));
    CHECK(verify_certificate(reparsed).ok);
}

TEST_CASE("subdivision certificates verify and resist tampering") {
    auto model = random_inflation(directed_cycle(3), 3, 13);
    auto emb = build_subdivision(model);
    Json doc = make_subdivision_certificate(emb);
    CHECK(doc.at("kind") == "subdivision");
    CHECK(verify_certificate(doc).ok);

    Json wrong_path = doc;
    wrong_path["payload"]["arc_paths"][0] =
        std::vector<int>{emb.branch_vertex[0]};
    CHECK(!verify_certificate(wrong_path).ok);

    Json wrong_branch = doc;
    wrong_branch["payload"]["branch_vertices"][0] =
        emb.branch_vertex[1];
    CHECK(!verify_certificate(wrong_branch).ok);
}

TEST_CASE("lower bound certificates verify and resist tampering") {
    Digraph d = lower_bound_butterfly(3);
    auto [k, witness] = dichromatic_number(d);
    REQUIRE(k == 3);
    Json doc = make_lower_bound_certificate(3, d, witness, true);
    CHECK(doc.at("kind") == "lower-bound");
    CHECK(verify_certificate(doc).ok);

    Json flipped = doc;
    flipped["payload"]["butterfly_free"] = false;
    CHECK(!verify_certificate(flipped).ok);

    Json wrong_t = doc;
    wrong_t["payload"]["t"] = 4;  // regenerated family no longer matches
    CHECK(!verify_certificate(wrong_t).ok);

    // the claim may be left unevaluated
    Json open_claim = make_lower_bound_certificate(3, d, witness, std::nullopt);
    CHECK(verify_certificate(open_claim).ok);
    CHECK(open_claim["payload"]["butterfly_free"].is_null());
}

TEST_CASE("explore reports verify and resist tampering") {
    ExploreReport report;
    report.t = 3;
    report.max_n = 4;
    report.seed = 1;
    report.exhaustive = true;
    report.butterfly = false;
    report.samples = 0;
    report.checked = 238;
    Json doc = make_explore_report(report);
    CHECK(doc.at("kind") == "explore-report");
    CHECK(verify_certificate(doc).ok);

    // any claimed counterexample is re-checked exactly; fabricate bad ones
    ExploreReport minor_present = report;
    minor_present.counterexamples.push_back({bidirected_clique(4), 4});
    CHECK(!verify_certificate(make_explore_report(minor_present)).ok);

    ExploreReport wrong_value = report;
    wrong_value.counterexamples.push_back({bidirected_clique(4), 5});
    CHECK(!verify_certificate(make_explore_report(wrong_value)).ok);

    ExploreReport below_threshold = report;
    below_threshold.t = 4;  // now 4-dichromatic no longer beats t
    below_threshold.counterexamples.push_back({bidirected_clique(4), 4});
    CHECK(!verify_certificate(make_explore_report(below_threshold)).ok);

    // the digest covers the search parameters
    Json reseeded = doc;
    reseeded["payload"]["seed"] = 2;
    CHECK(!verify_certificate(reseeded).ok);
}

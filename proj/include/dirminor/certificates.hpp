#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dirminor/butterfly.hpp"
#include "dirminor/coloring.hpp"
#include "dirminor/decomposition.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/strong_minors.hpp"
#include "dirminor/subdivision.hpp"

namespace dirminor {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "dirminor";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kDocumentFormat = "dirminor-certificate";

/// JSON encodings of the core objects: {"n": ..., "arcs": [[u,v],...]} and
/// {"n": ..., "edges": [[u,v],...]}. Decoding validates through the
/// constructors and throws their std::invalid_argument on bad data.
Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Certificate documents. Every builder embeds its inputs, fingerprints them
/// (FNV-1a of the canonical text serialization) and stamps tool name,
/// version, and a kind tag; verify_certificate re-derives every claim of a
/// parsed document from scratch. Kinds: "dicoloring", "decomposition",
/// "strong-model", "butterfly-trace", "subdivision", "lower-bound",
/// "explore-report".
Json make_dicoloring_certificate(const Digraph& d, const AcyclicColoring& witness);
Json make_decomposition_certificate(const DecompositionCertificate& cert);
Json make_strong_model_certificate(const StrongMinorModel& model,
                                   bool strengthened);
Json make_butterfly_certificate(const ButterflyTrace& trace, int order);
Json make_subdivision_certificate(const SubdivisionEmbedding& emb);
Json make_lower_bound_certificate(int t, const Digraph& d,
                                  const AcyclicColoring& witness,
                                  std::optional<bool> butterfly_free);

struct ExploreCounterexample {
    Digraph digraph;
    int dichromatic = 0;
};

struct ExploreReport {
    int t = 0;
    int max_n = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    bool butterfly = false;
    int samples = 0;
    long long checked = 0;
    std::vector<ExploreCounterexample> counterexamples;
};

Json make_explore_report(const ExploreReport& report);

struct VerifyOutcome {
    bool ok = false;
    std::string message;
};

/// Dispatches on the document's kind and re-checks it against its embedded
/// inputs: witnesses are re-validated, claimed optima re-solved, models and
/// traces re-verified, embedded inputs re-fingerprinted against the recorded
/// digest, and search-report counterexamples re-searched. Returns pass/fail
/// with a human-readable reason; never throws on malformed documents.
VerifyOutcome verify_certificate(const Json& doc);

}  // namespace dirminor

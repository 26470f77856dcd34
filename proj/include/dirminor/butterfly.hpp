#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dirminor/digraph.hpp"
#include "dirminor/strong_minors.hpp"

namespace dirminor {

/// True iff v is the only out-neighbour of u or u is the only in-neighbour of
/// v; only such arcs may be contracted. Throws std::invalid_argument when
/// (u,v) is not an arc.
bool is_contractible(const Digraph& d, int u, int v);

/// Result of an operation that renumbers vertices. vertex_map[w] is the new
/// index of old vertex w, or -1 if w was removed.
struct RelabeledDigraph {
    Digraph digraph;
    std::vector<int> vertex_map;
};

/// Contracts the arc (u,v): the endpoints merge into min(u,v) and indices
/// above max(u,v) shift down by one; the merged vertex inherits both in- and
/// out-neighbourhoods, parallel arcs collapse, loops are dropped. Throws
/// std::invalid_argument when the arc is absent or not contractible.
RelabeledDigraph contract(const Digraph& d, int u, int v);

/// Removes v with its incident arcs; indices above v shift down by one.
RelabeledDigraph delete_vertex(const Digraph& d, int v);

/// Removes the arc (u,v). Throws std::invalid_argument when absent.
Digraph delete_arc(const Digraph& d, int u, int v);

/// One step of a minor derivation, in the vertex labels of the digraph the
/// step is applied to. DeleteVertex uses u only.
struct ButterflyStep {
    enum class Kind { DeleteVertex, DeleteArc, Contract };
    Kind kind;
    int u = -1;
    int v = -1;

    bool operator==(const ButterflyStep&) const = default;
};

/// A checked derivation witnessing a butterfly minor: replaying steps from
/// the initial digraph must reproduce result, every contraction must be of a
/// contractible arc at its moment, and origins records which initial vertices
/// merged into each final vertex.
struct ButterflyTrace {
    Digraph initial;
    std::vector<ButterflyStep> steps;
    Digraph result;
    std::vector<VertexSet> origins;
};

struct ReplayResult {
    Digraph digraph;
    std::vector<VertexSet> origins;
};

/// Applies the steps to the initial digraph, tracking for every surviving
/// vertex the set of initial vertices merged into it. Throws
/// std::invalid_argument on any inapplicable step (missing vertex or arc,
/// non-contractible contraction).
ReplayResult replay_trace(const Digraph& initial,
                          const std::vector<ButterflyStep>& steps);

/// True iff the trace replays cleanly and reproduces its recorded result and
/// origins.
bool verify_trace(const ButterflyTrace& trace);

/// Spanning trees that funnel one branch-set pair through a single arc: every
/// vertex of in_part reaches in_root inside in_part along in_tree (arcs
/// written (child, parent), breadth-first discovery order), the arc
/// (in_root, out_root) crosses to out_part, and out_root reaches every vertex
/// of out_part along out_tree (arcs written (parent, child)).
struct ArborescencePair {
    VertexSet in_part;
    VertexSet out_part;
    int in_root = -1;
    int out_root = -1;
    std::vector<std::pair<int, int>> in_tree;
    std::vector<std::pair<int, int>> out_tree;
};

/// Pairs the branch sets of a verified model of a bidirected clique of even
/// order 2t (sorted by minimum vertex, consecutive sets paired, the
/// lower-indexed set funnelling in), picks the lexicographically least
/// crossing arc of each pair as roots, and grows breadth-first spanning
/// arborescences inside each part. Throws std::invalid_argument when the
/// model does not verify or its pattern is not a bidirected clique of even
/// order.
std::vector<ArborescencePair> build_arborescences(const StrongMinorModel& model);

/// Turns a verified model of a bidirected clique of order 2t into a checked
/// derivation of the bidirected clique of order t: deletes everything outside
/// the arborescence arcs and the out-part-to-in-part crossing arcs, then
/// contracts each pair onto a single vertex (in-trees leaf to root, the root
/// arc, out-trees root to leaf). Every contraction is checked at its moment
/// and the final digraph is checked to be the bidirected clique with each
/// vertex's origin set equal to its pair's two branch sets; failures of these
/// internal guarantees throw std::logic_error.
ButterflyTrace extract_butterfly(const StrongMinorModel& model);

/// Exact butterfly-minor test by exhaustive search over deletion and
/// contraction sequences, memoized on canonical forms. Supports hosts with at
/// most 7 vertices (std::invalid_argument beyond).
bool has_butterfly_minor(const Digraph& d, const Digraph& h);

/// Full pipeline from dichromatic strength to a butterfly clique minor:
/// decomposes d, forces a strong model of the bidirected clique of order 2t,
/// and extracts the derivation of the bidirected clique of order t. Returns
/// absent when the decomposition's quotient falls below the chromatic
/// threshold for order 2t. Supported for 1 <= t <= 3.
std::optional<ButterflyTrace> force_butterfly_clique_minor(const Digraph& d,
                                                           int t);

}  // namespace dirminor

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dirminor/digraph.hpp"
#include "dirminor/strong_minors.hpp"

namespace dirminor {

/// True iff f is an orientation of a graph of maximum degree three: no digon,
/// in-degree and out-degree at most two, total degree at most three.
bool is_subcubic(const Digraph& f);

/// For each pattern arc (aligned with pattern.arcs()), the lexicographically
/// least host arc realizing it between the two branch sets. Throws
/// std::invalid_argument when the model does not verify.
std::vector<std::pair<int, int>> choose_realized_arcs(const StrongMinorModel& model);

/// The paths through one branch set that a subdivision routes through it:
/// for every pattern arc incident to the vertex, a path inside the branch set
/// joining the branch vertex to that arc's terminal. incident, terminals and
/// paths are aligned; incoming arcs come first, each group in arc order. A
/// path runs branch_vertex -> terminal when the vertex is the arc's tail and
/// terminal -> branch_vertex when it is the head, and distinct paths share
/// exactly the branch vertex.
struct PathSystem {
    int vertex = -1;
    std::vector<std::pair<int, int>> incident;
    std::vector<int> terminals;
    int branch_vertex = -1;
    std::vector<std::vector<int>> paths;
};

/// Builds the path system of one pattern vertex from a verified model of a
/// subcubic pattern. Terminals are fixed globally by choose_realized_arcs
/// before any construction. Degree 0 takes the least vertex of the branch set
/// and degree 1 the trivial path; with two arcs and at least one incoming,
/// the branch vertex is the first incoming terminal; with three arcs and one
/// incoming, the two outgoing terminals are reached by splitting two shortest
/// paths at their last common vertex; the remaining orientations are handled
/// by building the system in the arc-reversed instance and reversing every
/// path. All structural guarantees are asserted (std::logic_error on
/// failure). Throws std::invalid_argument on a non-verifying model or a
/// pattern that is not subcubic.
PathSystem build_path_system(const StrongMinorModel& model, int u);

/// A subdivision of pattern inside host: injective branch vertices, one
/// directed host path per pattern arc (aligned with pattern.arcs()) joining
/// the endpoint branch vertices, all paths internally disjoint and internally
/// avoiding every branch vertex.
struct SubdivisionEmbedding {
    Digraph host;
    Digraph pattern;
    std::vector<int> branch_vertex;
    std::vector<std::vector<int>> arc_paths;
};

/// Assembles the per-vertex path systems and the chosen realized arcs into a
/// full subdivision embedding; the result always passes verify_subdivision
/// (std::logic_error otherwise). Throws std::invalid_argument on a
/// non-verifying model or non-subcubic pattern.
SubdivisionEmbedding build_subdivision(const StrongMinorModel& model);

/// Checks every invariant of SubdivisionEmbedding: path endpoints and
/// directedness, simplicity, global internal disjointness, and that no
/// internal vertex is a branch vertex.
bool verify_subdivision(const SubdivisionEmbedding& emb);

/// Full pipeline: search for a strong model of the subcubic pattern f in d,
/// and when one exists turn it into a verified subdivision. Absent iff no
/// strong model exists. Throws std::invalid_argument when f is not subcubic.
std::optional<SubdivisionEmbedding> find_subdivision(const Digraph& d,
                                                     const Digraph& f);

/// Dichromatic threshold, reported only for context: 22 times the pattern
/// order. Desk-scale instances never reach it; the pipeline searches for the
/// model directly instead.
long long subdivision_threshold(int n);

}  // namespace dirminor

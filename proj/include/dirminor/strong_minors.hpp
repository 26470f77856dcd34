#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirminor/digraph.hpp"

namespace dirminor {

/// Model of a pattern digraph H inside a host digraph D: one branch set per
/// pattern vertex. Valid when the branch sets are non-empty, pairwise
/// disjoint, each induces a strongly connected subdigraph of the host, and
/// every pattern arc (u,v) is realized by at least one host arc from the
/// branch set of u to the branch set of v.
struct StrongMinorModel {
    Digraph host;
    Digraph pattern;
    std::vector<VertexSet> branch_sets;
};

/// Undirected counterpart: branch sets induce connected subgraphs and every
/// pattern edge is realized by a host edge between the two branch sets.
struct UndirectedMinorModel {
    Graph host;
    Graph pattern;
    std::vector<VertexSet> branch_sets;
};

/// With strengthened = true, additionally requires at least two host arcs
/// per realized pattern arc (so every joined pair of branch sets is spanned
/// by two or more arcs in each joined direction).
bool verify_strong_model(const StrongMinorModel& model, bool strengthened = false);
bool verify_undirected_model(const UndirectedMinorModel& model);

/// Exact search for a strong model of `pattern` in `host`: backtracking over
/// branch sets drawn from the strongly connected vertex subsets of the host,
/// pruning arc demands as soon as both endpoints are placed. For a
/// bidirected-clique pattern, branch sets are placed with strictly
/// increasing minimum vertex, which breaks the pattern's symmetry. Results
/// are deterministic and verified before being returned.
std::optional<StrongMinorModel> find_strong_model(const Digraph& host,
                                                  const Digraph& pattern,
                                                  bool strengthened = false);

/// Exact search for a complete-minor model of order t in an undirected host.
std::optional<UndirectedMinorModel> find_clique_minor(const Graph& host, int t);

/// Reinterprets an undirected model as a strong model in a digraph whose
/// digons cover the edges the model uses (e.g. the biorientation of its
/// host). Throws std::invalid_argument when the digons do not cover them.
StrongMinorModel promote_to_bioriented(const UndirectedMinorModel& model,
                                       const Digraph& host);

/// Transitivity: from a model of H in M (outer) and a model of M in D
/// (inner), builds the model of H in D whose branch set at a pattern vertex
/// v is the union of the inner branch sets over the outer branch set of v.
/// Requires outer.host == inner.pattern; the result is re-verified.
StrongMinorModel compose_models(const StrongMinorModel& outer,
                                const StrongMinorModel& inner);

/// Least chromatic number that forces a complete minor of order t in every
/// undirected graph. Known exactly for t <= 6, where it equals t; larger t
/// is rejected with std::invalid_argument.
int hadwiger_threshold(int t);

/// Every digraph with dichromatic number at least 2t-1 contains a strong
/// model of the bidirected t-clique (t <= 6). The model is assembled from
/// the maximal-partition decomposition: a complete minor of order t in the
/// quotient graph, promoted to the quotient's biorientation and composed
/// with the decomposition's own model. Returns absent iff the quotient's
/// chromatic number is below the threshold for t.
std::optional<StrongMinorModel> force_strong_clique_minor(const Digraph& d, int t);

/// Random host built around a planted, verified model of `pattern`: each
/// branch set is a random strongly connected digraph with 1..max_branch
/// vertices, every pattern arc gets at least one random realizing arc, and
/// with extras enabled a few unused vertices and stray arcs are thrown in.
/// Pure function of its arguments.
StrongMinorModel random_inflation(const Digraph& pattern, int max_branch,
                                  std::uint64_t seed, bool extras = true);

}  // namespace dirminor

#pragma once

#include <optional>
#include <vector>

#include "dirminor/coloring.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/strong_minors.hpp"

namespace dirminor {

/// Ordered partition of the host's vertices into parts that each induce a
/// strongly connected, 2-dicolorable subdigraph, together with a valid
/// 2-coloring per part (part_colors[i][j] colors parts[i][j]).
struct MaximalPartition {
    std::vector<VertexSet> parts;
    std::vector<std::vector<int>> part_colors;
};

/// One part grown greedily inside a remainder set, with its 2-coloring.
struct GrownPart {
    VertexSet part;
    std::vector<int> colors;  // aligned with part
};

/// Grows a part from `seed` inside the remainder R: repeatedly absorbs a
/// vertex w of R that has an in-arc from the part, together with a shortest
/// return path from w back to the part through R, subject to the enlarged
/// set staying 2-dicolorable (return paths are enumerated in order of
/// increasing length and the first 2-dicolorability-preserving one is
/// taken). At the fixed point no strongly connected, 2-dicolorable superset
/// of the part exists within R: the part is inclusion-maximal there.
GrownPart grow_part(const Digraph& d, const VertexSet& remainder, int seed);

/// Repeatedly extracts grow_part(d, remaining, lowest remaining vertex).
MaximalPartition build_partition(const Digraph& d);

/// One quotient vertex per part; parts i and j are joined iff the host has
/// arcs in both directions between them.
Graph quotient_graph(const Digraph& d, const MaximalPartition& p);

/// Combines a proper coloring of the quotient with the per-part 2-colorings:
/// vertex v in part i gets color 2*quotient_color(i) + part_color(v), so at
/// most 2k colors are used. An improper quotient coloring is rejected with
/// std::invalid_argument. Acyclicity of the lift itself is not assumed here;
/// the certification loop checks it and repairs the partition if a
/// monochromatic cycle shows up.
AcyclicColoring lift_coloring(const Digraph& d, const MaximalPartition& p,
                              const ProperColoring& quotient_coloring);

/// The ingredients of one repair: a monochromatic cycle meets the earliest
/// part i0 at u, leaves it through w_1..w_l and returns at v; s is the least
/// index whose w_s has an out-neighbour x back in the part. The part absorbs
/// w_1..w_s, extending its 2-coloring with w_1..w_{s-1} in the first class
/// and w_s in the second. If w_s also had an in-neighbour inside the part,
/// the cycle could not have been monochromatic in the first place, so that
/// branch (and s == 1, which it subsumes) is trapped as an internal error.
struct RepairContext {
    int part_index = -1;              // i0
    std::vector<int> cycle;           // the offending monochromatic cycle
    int u = -1, v = -1;               // segment anchors inside part i0
    std::vector<int> outside;         // w_1..w_l
    int s = -1;                       // 1-based, >= 2
    int x = -1;                       // out-neighbour of w_s inside the part
    VertexSet absorbed;               // w_1..w_s
};

/// Applies one repair for a monochromatic cycle of a lifted coloring:
/// enlarges part i0 as dictated by the cycle, re-grows it to its maximal
/// fixed point, and rebuilds all later parts from the leftover vertices.
/// Parts before i0 are untouched and part i0 grows strictly, so the
/// part-size tuple increases lexicographically. The context of the repair is
/// returned through `ctx` when non-null.
MaximalPartition repair_step(const Digraph& d, const MaximalPartition& p,
                             const std::vector<int>& cycle, RepairContext* ctx = nullptr);

struct DecompositionStats {
    int repair_count = 0;
    std::vector<std::vector<int>> part_size_history;  // one tuple per round
};

/// Everything the decomposition proves about its input: the partition, the
/// quotient with an optimal proper coloring, the lifted acyclic coloring
/// with at most twice as many colors, and the strong model of the quotient's
/// biorientation whose branch sets are exactly the parts.
struct DecompositionCertificate {
    Digraph host;
    MaximalPartition partition;
    Graph quotient;
    ProperColoring quotient_coloring;
    AcyclicColoring lifted;
    StrongMinorModel model;
    DecompositionStats stats;
};

/// Builds the partition, colors the quotient optimally, lifts, and repairs
/// until the lifted coloring is acyclic; each round's part-size tuple must
/// increase lexicographically (asserted at runtime) which bounds the loop.
/// The final certificate is fully re-verified before being returned.
DecompositionCertificate certify_decomposition(const Digraph& d);

/// Same loop started from a caller-supplied structurally valid partition
/// (parts strongly connected, 2-colorings valid); exercised by tests with
/// deliberately non-maximal partitions, where the repair path must fire.
DecompositionCertificate certify_decomposition_from(const Digraph& d,
                                                    MaximalPartition initial);

/// Throws std::invalid_argument unless every part induces a strongly
/// connected subdigraph, its stored 2-coloring is valid, and the parts
/// partition the host's vertices.
void check_partition_structure(const Digraph& d, const MaximalPartition& p);

/// Exhaustive maximality oracle (test use): true iff no part has a proper
/// superset within its suffix (the union of itself and all later parts)
/// that stays strongly connected and 2-dicolorable.
bool assert_maximality(const Digraph& d, const MaximalPartition& p);

}  // namespace dirminor

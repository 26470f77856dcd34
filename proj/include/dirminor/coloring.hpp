#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dirminor/digraph.hpp"

namespace dirminor {

/// Assignment of colors 0..k-1 to the vertices of a digraph such that every
/// color class induces an acyclic subdigraph.
struct AcyclicColoring {
    std::vector<int> color;
    int k = 0;
};

/// Proper coloring of an undirected graph with colors 0..k-1.
struct ProperColoring {
    std::vector<int> color;
    int k = 0;
};

bool is_valid_acyclic_coloring(const Digraph& d, const AcyclicColoring& f);
bool is_valid_proper_coloring(const Graph& g, const ProperColoring& f);

/// Exact test: a coloring with at most k color classes, each inducing an
/// acyclic subdigraph, or absent if none exists. The witness is the
/// lexicographically first one along the solver's fixed branching order
/// (total degree descending, index ascending), so outputs are deterministic.
/// Throws std::invalid_argument for k <= 0 or more than 64 vertices.
std::optional<AcyclicColoring> is_k_dicolorable(const Digraph& d, int k);

/// Exact dichromatic number with witness. Branch-and-bound over maximal
/// acyclic subsets, memoized on the set of remaining vertices. The empty
/// digraph has dichromatic number 0.
std::pair<int, AcyclicColoring> dichromatic_number(const Digraph& d);

/// Exact chromatic number with witness; same search scheme over maximal
/// independent sets. The empty graph has chromatic number 0.
std::pair<int, ProperColoring> chromatic_number(const Graph& g);

/// Shortest directed cycle whose vertices all carry the same color, or
/// absent when every class is acyclic (i.e. the candidate coloring is
/// valid). Found by breadth-first search restricted to one color class at a
/// time; ties broken by color, then by start vertex, so the result is
/// deterministic. Being globally shortest, the cycle is induced within its
/// class. The color vector may use arbitrary labels but must have one entry
/// per vertex.
std::optional<std::vector<int>> find_monochromatic_cycle(const Digraph& d,
                                                         const std::vector<int>& color);

/// Exact 2-dicolorability of the subdigraph induced by a vertex subset.
/// Returns one color per host vertex (-1 outside the subset) or absent.
std::optional<std::vector<std::int8_t>> two_dicolor_subset(const Digraph& d,
                                                           const VertexSet& s);

/// Incremental exact 2-dicolorability over a growing vertex set. try_add
/// first attempts to give the new vertex one of the two colors while keeping
/// the current assignment, and re-solves the whole set only when both fail;
/// it returns false (leaving the set unchanged) exactly when the enlarged
/// set is not 2-dicolorable. pop undoes the latest successful try_add.
class TwoDicoloringTracker {
public:
    explicit TwoDicoloringTracker(const Digraph& d);

    bool contains(int v) const { return color_[v] >= 0; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    const std::vector<std::int8_t>& colors() const { return color_; }

    bool try_add(int v);
    void pop();

private:
    bool class_stays_acyclic(int v, int c) const;

    const Digraph* d_;
    std::vector<std::int8_t> color_;  // -1 = not in the set
    std::vector<int> members_;        // in insertion order
    struct Undo {
        bool resolved;
        std::vector<std::int8_t> snapshot;  // only when resolved
    };
    std::vector<Undo> undo_;
};

}  // namespace dirminor

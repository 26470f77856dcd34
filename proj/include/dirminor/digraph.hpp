#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dirminor {

/// A set of vertex indices of some host graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

/// Simple loopless directed graph on vertices 0..n-1. At most one arc per
/// ordered pair; a pair carrying both (u,v) and (v,u) is a digon. Immutable
/// after construction.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arc_list);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool has_arc(int u, int v) const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Simple undirected loopless graph. Edges are stored as pairs (u,v) with u<v.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted, u < v
    std::vector<std::vector<int>> adj_;
};

/// Validates that every member of S is a vertex of a host with n vertices and
/// returns S sorted with duplicates removed. Throws std::invalid_argument.
VertexSet normalize_vertex_set(int n, VertexSet s);

struct InducedSubdigraph {
    Digraph digraph;
    std::vector<int> original;  // original[i] = host label of local vertex i
};

/// Subdigraph spanned by S, re-indexed to 0..|S|-1 with the correspondence
/// recorded so results can be reported in host labels.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& s);

/// Strongly connected components, each sorted, ordered by minimum vertex.
/// The 0-vertex digraph has no components and counts as strongly connected.
std::vector<VertexSet> strongly_connected_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
bool is_strongly_connected_subset(const Digraph& d, const VertexSet& s);

bool is_acyclic(const Digraph& d);
bool is_acyclic_set(const Digraph& d, const VertexSet& s);

/// Digraph with arcs in both directions for every edge of g.
Digraph biorient(const Graph& g);

/// Edge uv present iff at least one of (u,v),(v,u) is an arc.
Graph underlying_graph(const Digraph& d);

/// Edge uv present iff both (u,v) and (v,u) are arcs.
Graph digon_graph(const Digraph& d);

/// Arc-reversal of d.
Digraph reverse(const Digraph& d);

}  // namespace dirminor

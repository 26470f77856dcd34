#include "dirminor/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirminor {

namespace {

void check_vertex(int n, int v, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                    " out of range for " + std::to_string(n) +
                                    " vertices");
    }
}

}  // namespace

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arc_list)
    : n_(n), arcs_(std::move(arc_list)) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        check_vertex(n_, u, "arc tail");
        check_vertex(n_, v, "arc head");
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        if (i > 0 && arcs_[i] == arcs_[i - 1]) {
            throw std::invalid_argument("duplicate arc (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        }
    }
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& nb : in_) {
        std::sort(nb.begin(), nb.end());
    }
    // out_ is already sorted because arcs_ is.
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
    check_vertex(n_, v, "vertex");
    return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
    check_vertex(n_, v, "vertex");
    return in_[v];
}

int Digraph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

int Digraph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

bool Digraph::has_arc(int u, int v) const {
    check_vertex(n_, u, "arc tail");
    check_vertex(n_, v, "arc head");
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    for (auto& [u, v] : edge_list) {
        check_vertex(n_, u, "edge endpoint");
        check_vertex(n_, v, "edge endpoint");
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i) {
        if (edge_list[i] == edge_list[i - 1]) {
            throw std::invalid_argument(
                "duplicate edge (" + std::to_string(edge_list[i].first) + ", " +
                std::to_string(edge_list[i].second) + ")");
        }
    }
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(n_, v, "vertex");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(n_, u, "edge endpoint");
    check_vertex(n_, v, "edge endpoint");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet normalize_vertex_set(int n, VertexSet s) {
    for (int v : s) {
        check_vertex(n, v, "vertex");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& s) {
    VertexSet verts = normalize_vertex_set(d.vertex_count(), s);
    std::vector<int> local(d.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        local[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : d.arcs()) {
        if (local[u] >= 0 && local[v] >= 0) {
            arcs.emplace_back(local[u], local[v]);
        }
    }
    return {Digraph(static_cast<int>(verts.size()), std::move(arcs)), std::move(verts)};
}

namespace {

// Recursive Tarjan; fine for the intended instance sizes.
struct TarjanState {
    const Digraph& d;
    int counter = 0;
    std::vector<int> index, low;
    std::vector<int> stack;
    std::vector<bool> on_stack;
    std::vector<VertexSet> components;

    explicit TarjanState(const Digraph& dg)
        : d(dg),
          index(dg.vertex_count(), -1),
          low(dg.vertex_count(), 0),
          on_stack(dg.vertex_count(), false) {}

    void visit(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : d.out_neighbors(v)) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            VertexSet comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
};

}  // namespace

std::vector<VertexSet> strongly_connected_components(const Digraph& d) {
    TarjanState st(d);
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (st.index[v] < 0) {
            st.visit(v);
        }
    }
    std::sort(st.components.begin(), st.components.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return st.components;
}

bool is_strongly_connected(const Digraph& d) {
    if (d.vertex_count() == 0) {
        return true;
    }
    return static_cast<int>(strongly_connected_components(d).size()) == 1;
}

bool is_strongly_connected_subset(const Digraph& d, const VertexSet& s) {
    VertexSet verts = normalize_vertex_set(d.vertex_count(), s);
    if (verts.empty()) {
        return true;
    }
    std::vector<char> member(d.vertex_count(), 0);
    for (int v : verts) {
        member[v] = 1;
    }
    // BFS within s, forward then backward, from verts[0].
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<char> seen(d.vertex_count(), 0);
        std::vector<int> queue = {verts[0]};
        seen[verts[0]] = 1;
        std::size_t reached = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            const auto& nbs = pass == 0 ? d.out_neighbors(v) : d.in_neighbors(v);
            for (int w : nbs) {
                if (member[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
            }
        }
        if (reached != verts.size()) {
            return false;
        }
    }
    return true;
}

bool is_acyclic(const Digraph& d) {
    VertexSet all(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        all[v] = v;
    }
    return is_acyclic_set(d, all);
}

bool is_acyclic_set(const Digraph& d, const VertexSet& s) {
    VertexSet verts = normalize_vertex_set(d.vertex_count(), s);
    std::vector<int> indeg(d.vertex_count(), -1);
    for (int v : verts) {
        indeg[v] = 0;
    }
    for (int v : verts) {
        for (int w : d.out_neighbors(v)) {
            if (indeg[w] >= 0) {
                ++indeg[w];
            }
        }
    }
    std::vector<int> queue;
    for (int v : verts) {
        if (indeg[v] == 0) {
            queue.push_back(v);
        }
    }
    std::size_t removed = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        ++removed;
        for (int w : d.out_neighbors(v)) {
            if (indeg[w] > 0 && --indeg[w] == 0) {
                queue.push_back(w);
            }
        }
    }
    return removed == verts.size();
}

Digraph biorient(const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

Graph underlying_graph(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.arcs()) {
        if (u < v || !d.has_arc(v, u)) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph(d.vertex_count(), std::move(edges));
}

Graph digon_graph(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.arcs()) {
        if (u < v && d.has_arc(v, u)) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(d.vertex_count(), std::move(edges));
}

Digraph reverse(const Digraph& d) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (auto [u, v] : d.arcs()) {
        arcs.emplace_back(v, u);
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace dirminor

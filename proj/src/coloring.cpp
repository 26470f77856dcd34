#include "dirminor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dirminor {

bool is_valid_acyclic_coloring(const Digraph& d, const AcyclicColoring& f) {
    if (static_cast<int>(f.color.size()) != d.vertex_count()) {
        return false;
    }
    for (int c : f.color) {
        if (c < 0 || c >= f.k) {
            return false;
        }
    }
    for (int c = 0; c < f.k; ++c) {
        VertexSet cls;
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (f.color[v] == c) {
                cls.push_back(v);
            }
        }
        if (!is_acyclic_set(d, cls)) {
            return false;
        }
    }
    return true;
}

bool is_valid_proper_coloring(const Graph& g, const ProperColoring& f) {
    if (static_cast<int>(f.color.size()) != g.vertex_count()) {
        return false;
    }
    for (int c : f.color) {
        if (c < 0 || c >= f.k) {
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (f.color[u] == f.color[v]) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr int kMaxSolverVertices = 64;

// Bitmask view of a digraph, for the exact solvers (n <= 64).
struct MaskDigraph {
    int n = 0;
    std::vector<std::uint64_t> out, in;

    explicit MaskDigraph(const Digraph& d)
        : n(d.vertex_count()), out(d.vertex_count(), 0), in(d.vertex_count(), 0) {
        for (auto [u, v] : d.arcs()) {
            out[u] |= std::uint64_t{1} << v;
            in[v] |= std::uint64_t{1} << u;
        }
    }

    // Given that the class `cls` induces an acyclic subdigraph, does it stay
    // acyclic after adding v? Equivalent to: no directed path v -> ... -> v
    // inside cls | {v}.
    bool stays_acyclic(std::uint64_t cls, int v) const {
        std::uint64_t inside = cls | (std::uint64_t{1} << v);
        std::uint64_t reach = out[v] & inside;
        for (;;) {
            if (reach >> v & 1) {
                return false;
            }
            std::uint64_t next = reach;
            std::uint64_t frontier = reach;
            while (frontier) {
                int w = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= out[w] & inside;
            }
            if (next == reach) {
                return true;
            }
            reach = next;
        }
    }
};

std::vector<int> degree_order(const Digraph& d) {
    std::vector<int> order(d.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d.in_degree(a) + d.out_degree(a) > d.in_degree(b) + d.out_degree(b);
    });
    return order;
}

struct DicoloringSearch {
    const MaskDigraph& md;
    const std::vector<int>& order;
    int k;
    std::vector<std::uint64_t> classes;
    std::vector<int> color_of;

    bool assign(std::size_t pos, int used) {
        if (pos == order.size()) {
            return true;
        }
        int v = order[pos];
        int limit = std::min(k - 1, used);  // first-use symmetry cap
        for (int c = 0; c <= limit; ++c) {
            if (md.stays_acyclic(classes[c], v)) {
                classes[c] |= std::uint64_t{1} << v;
                color_of[v] = c;
                if (assign(pos + 1, std::max(used, c + 1))) {
                    return true;
                }
                classes[c] &= ~(std::uint64_t{1} << v);
            }
        }
        return false;
    }
};

}  // namespace

std::optional<AcyclicColoring> is_k_dicolorable(const Digraph& d, int k) {
    if (k <= 0) {
        throw std::invalid_argument("color count must be positive");
    }
    if (d.vertex_count() == 0) {
        return AcyclicColoring{{}, 0};
    }
    if (k == 1) {
        if (!is_acyclic(d)) {
            return std::nullopt;
        }
        return AcyclicColoring{std::vector<int>(d.vertex_count(), 0), 1};
    }
    if (d.vertex_count() > kMaxSolverVertices) {
        throw std::invalid_argument("dicoloring solver supports at most 64 vertices");
    }
    MaskDigraph md(d);
    std::vector<int> order = degree_order(d);
    DicoloringSearch search{md, order, k,
                            std::vector<std::uint64_t>(k, 0),
                            std::vector<int>(d.vertex_count(), -1)};
    if (!search.assign(0, 0)) {
        return std::nullopt;
    }
    int used = 1 + *std::max_element(search.color_of.begin(), search.color_of.end());
    return AcyclicColoring{std::move(search.color_of), used};
}

namespace {

// Exact minimum number of acyclic classes for the sub-digraph spanned by a
// vertex mask. Some optimal coloring has the class of any fixed pivot vertex
// maximal acyclic within the mask (enlarging a class keeps the others
// acyclic), so it is enough to branch over those classes.
struct DichromaticSolver {
    const MaskDigraph& md;
    std::vector<int> order;
    std::unordered_map<std::uint64_t, int> memo;

    int solve(std::uint64_t s) {
        if (s == 0) {
            return 0;
        }
        auto it = memo.find(s);
        if (it != memo.end()) {
            return it->second;
        }
        int pivot = -1;
        for (int v : order) {
            if (s >> v & 1) {
                pivot = v;
                break;
            }
        }
        int best = md.n + 1;
        enumerate_classes(s, pivot, std::uint64_t{1} << pivot, rest_after(s, pivot), best);
        memo.emplace(s, best);
        return best;
    }

    std::vector<int> rest_after(std::uint64_t s, int pivot) const {
        std::vector<int> rest;
        bool past = false;
        for (int v : order) {
            if (v == pivot) {
                past = true;
                continue;
            }
            if (past && (s >> v & 1)) {
                rest.push_back(v);
            }
        }
        // Vertices before the pivot in the order are excluded from the class
        // on purpose: the pivot is the first in-order vertex of s, so there
        // are none.
        return rest;
    }

    void enumerate_classes(std::uint64_t s, int pivot, std::uint64_t cls,
                           const std::vector<int>& rest, int& best) {
        enumerate_rec(s, cls, rest, 0, best);
        (void)pivot;
    }

    void enumerate_rec(std::uint64_t s, std::uint64_t cls, const std::vector<int>& rest,
                       std::size_t idx, int& best) {
        if (idx == rest.size()) {
            // Maximality within s: no leftover vertex may extend the class.
            std::uint64_t left = s & ~cls;
            std::uint64_t m = left;
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (md.stays_acyclic(cls, w)) {
                    return;  // not maximal
                }
            }
            int sub = solve(left);
            best = std::min(best, 1 + sub);
            return;
        }
        int w = rest[idx];
        if (md.stays_acyclic(cls, w)) {
            enumerate_rec(s, cls | (std::uint64_t{1} << w), rest, idx + 1, best);
        }
        enumerate_rec(s, cls, rest, idx + 1, best);
    }
};

}  // namespace

std::pair<int, AcyclicColoring> dichromatic_number(const Digraph& d) {
    if (d.vertex_count() == 0) {
        return {0, AcyclicColoring{{}, 0}};
    }
    if (d.vertex_count() > kMaxSolverVertices) {
        throw std::invalid_argument("dichromatic solver supports at most 64 vertices");
    }
    MaskDigraph md(d);
    DichromaticSolver solver{md, degree_order(d), {}};
    std::uint64_t full = d.vertex_count() == 64
                             ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << d.vertex_count()) - 1;
    int k = solver.solve(full);
    auto witness = is_k_dicolorable(d, k);
    if (!witness || (k > 1 && is_k_dicolorable(d, k - 1))) {
        throw std::logic_error("dichromatic solver disagrees with its witness");
    }
    witness->k = k;
    return {k, *witness};
}

namespace {

struct ChromaticSolver {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> order;
    std::unordered_map<std::uint64_t, int> memo;

    int solve(std::uint64_t s) {
        if (s == 0) {
            return 0;
        }
        auto it = memo.find(s);
        if (it != memo.end()) {
            return it->second;
        }
        int pivot = -1;
        for (int v : order) {
            if (s >> v & 1) {
                pivot = v;
                break;
            }
        }
        std::vector<int> rest;
        bool past = false;
        for (int v : order) {
            if (v == pivot) {
                past = true;
            } else if (past && (s >> v & 1)) {
                rest.push_back(v);
            }
        }
        int best = n + 1;
        enumerate_rec(s, std::uint64_t{1} << pivot, rest, 0, best);
        memo.emplace(s, best);
        return best;
    }

    void enumerate_rec(std::uint64_t s, std::uint64_t cls, const std::vector<int>& rest,
                       std::size_t idx, int& best) {
        if (idx == rest.size()) {
            std::uint64_t left = s & ~cls;
            std::uint64_t m = left;
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if ((adj[w] & cls) == 0) {
                    return;  // independent set not maximal in s
                }
            }
            best = std::min(best, 1 + solve(left));
            return;
        }
        int w = rest[idx];
        if ((adj[w] & cls) == 0) {
            enumerate_rec(s, cls | (std::uint64_t{1} << w), rest, idx + 1, best);
        }
        enumerate_rec(s, cls, rest, idx + 1, best);
    }
};

struct ProperSearch {
    int n;
    const std::vector<std::uint64_t>& adj;
    const std::vector<int>& order;
    int k;
    std::vector<std::uint64_t> classes;
    std::vector<int> color_of;

    bool assign(std::size_t pos, int used) {
        if (pos == order.size()) {
            return true;
        }
        int v = order[pos];
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if ((adj[v] & classes[c]) == 0) {
                classes[c] |= std::uint64_t{1} << v;
                color_of[v] = c;
                if (assign(pos + 1, std::max(used, c + 1))) {
                    return true;
                }
                classes[c] &= ~(std::uint64_t{1} << v);
            }
        }
        return false;
    }
};

}  // namespace

std::pair<int, ProperColoring> chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) {
        return {0, ProperColoring{{}, 0}};
    }
    if (g.vertex_count() > kMaxSolverVertices) {
        throw std::invalid_argument("chromatic solver supports at most 64 vertices");
    }
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    ChromaticSolver solver{n, adj, order, {}};
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int k = solver.solve(full);
    ProperSearch search{n, adj, order, k, std::vector<std::uint64_t>(k, 0),
                        std::vector<int>(n, -1)};
    if (!search.assign(0, 0)) {
        throw std::logic_error("chromatic solver disagrees with its witness");
    }
    return {k, ProperColoring{std::move(search.color_of), k}};
}

std::optional<std::vector<int>> find_monochromatic_cycle(const Digraph& d,
                                                         const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != d.vertex_count()) {
        throw std::invalid_argument("one color per vertex required");
    }
    std::vector<int> labels = color;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::optional<std::vector<int>> best;
    for (int label : labels) {
        std::vector<char> in_class(d.vertex_count(), 0);
        for (int v = 0; v < d.vertex_count(); ++v) {
            in_class[v] = color[v] == label;
        }
        for (int start = 0; start < d.vertex_count(); ++start) {
            if (!in_class[start]) {
                continue;
            }
            // BFS within the class; shortest cycle through `start` closes at
            // an in-neighbour of `start`.
            std::vector<int> dist(d.vertex_count(), -1), parent(d.vertex_count(), -1);
            std::vector<int> queue = {start};
            dist[start] = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (int w : d.out_neighbors(v)) {
                    if (in_class[w] && dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            int close = -1;
            for (int u : d.in_neighbors(start)) {
                if (in_class[u] && dist[u] >= 0 &&
                    (close < 0 || dist[u] < dist[close])) {
                    close = u;
                }
            }
            if (close < 0) {
                continue;
            }
            int len = dist[close] + 1;
            if (!best || len < static_cast<int>(best->size())) {
                std::vector<int> cyc;
                for (int v = close; v != -1; v = parent[v]) {
                    cyc.push_back(v);
                }
                std::reverse(cyc.begin(), cyc.end());
                best = std::move(cyc);
            }
        }
    }
    return best;
}

namespace {

// Does the class containing color value c stay acyclic when v joins it?
// List-based variant used by the incremental tracker (no vertex-count cap).
bool class_stays_acyclic_list(const Digraph& d, const std::vector<std::int8_t>& color,
                              int v, int c) {
    std::vector<char> seen(d.vertex_count(), 0);
    std::vector<int> queue;
    for (int w : d.out_neighbors(v)) {
        if (w == v) {
            continue;
        }
        if (color[w] == c && !seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int w = queue[qi];
        if (w == v) {
            return false;
        }
        for (int x : d.out_neighbors(w)) {
            if (x == v) {
                return false;
            }
            if (color[x] == c && !seen[x]) {
                seen[x] = 1;
                queue.push_back(x);
            }
        }
    }
    return true;
}

bool two_color_rec(const Digraph& d, const VertexSet& verts, std::size_t idx,
                   std::vector<std::int8_t>& color) {
    if (idx == verts.size()) {
        return true;
    }
    int v = verts[idx];
    for (int c = 0; c < 2; ++c) {
        if (idx == 0 && c == 1) {
            break;  // swapping the two colors is symmetric
        }
        if (class_stays_acyclic_list(d, color, v, c)) {
            color[v] = static_cast<std::int8_t>(c);
            if (two_color_rec(d, verts, idx + 1, color)) {
                return true;
            }
            color[v] = -1;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::int8_t>> two_dicolor_subset(const Digraph& d,
                                                           const VertexSet& s) {
    VertexSet verts = normalize_vertex_set(d.vertex_count(), s);
    std::vector<std::int8_t> color(d.vertex_count(), -1);
    if (!two_color_rec(d, verts, 0, color)) {
        return std::nullopt;
    }
    return color;
}

TwoDicoloringTracker::TwoDicoloringTracker(const Digraph& d)
    : d_(&d), color_(d.vertex_count(), -1) {}

bool TwoDicoloringTracker::class_stays_acyclic(int v, int c) const {
    return class_stays_acyclic_list(*d_, color_, v, c);
}

bool TwoDicoloringTracker::try_add(int v) {
    if (color_[v] >= 0) {
        throw std::invalid_argument("vertex already tracked");
    }
    for (int c = 0; c < 2; ++c) {
        if (class_stays_acyclic(v, c)) {
            color_[v] = static_cast<std::int8_t>(c);
            members_.push_back(v);
            undo_.push_back({false, {}});
            return true;
        }
    }
    // Both quick extensions fail: re-solve the enlarged set exactly.
    VertexSet enlarged = members_;
    enlarged.push_back(v);
    auto solved = two_dicolor_subset(*d_, enlarged);
    if (!solved) {
        return false;
    }
    undo_.push_back({true, color_});
    color_ = std::move(*solved);
    members_.push_back(v);
    return true;
}

void TwoDicoloringTracker::pop() {
    if (undo_.empty()) {
        throw std::logic_error("nothing to undo");
    }
    int v = members_.back();
    members_.pop_back();
    Undo u = std::move(undo_.back());
    undo_.pop_back();
    if (u.resolved) {
        color_ = std::move(u.snapshot);
    } else {
        color_[v] = -1;
    }
}

}  // namespace dirminor

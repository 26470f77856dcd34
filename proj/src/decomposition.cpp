#include "dirminor/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dirminor {

namespace {

constexpr int kMaxPartitionVertices = 64;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Greedy maximal growth of one part. Absorptions follow the shape of the
// enlargement used by the repair argument: a vertex w with an in-arc from
// the part plus a return path from w back into the part, everything staying
// 2-dicolorable. Return paths are enumerated by iterative deepening, so the
// shortest usable one wins; prefixes that are not 2-dicolorable are pruned
// (supersets of infeasible sets stay infeasible) and infeasible sets are
// memoized across candidates.
struct Grower {
    const Digraph& d;
    std::vector<char> pool;  // vertices of the remainder, outside the part
    TwoDicoloringTracker tracker;
    std::uint64_t mask = 0;
    std::unordered_set<std::uint64_t> infeasible;

    Grower(const Digraph& dg, const VertexSet& remainder, const VertexSet& start)
        : d(dg), pool(dg.vertex_count(), 0), tracker(dg) {
        for (int v : remainder) {
            pool[v] = 1;
        }
        for (int v : start) {
            if (!pool[v]) {
                throw std::invalid_argument("part must lie inside the remainder");
            }
            pool[v] = 0;
            if (!tracker.try_add(v)) {
                throw std::invalid_argument("part is not 2-dicolorable");
            }
            mask |= bit(v);
        }
    }

    bool in_part(int v) const { return tracker.contains(v); }

    bool try_add(int v) {
        std::uint64_t next = mask | bit(v);
        if (infeasible.count(next)) {
            return false;
        }
        if (!tracker.try_add(v)) {
            infeasible.insert(next);
            return false;
        }
        mask = next;
        return true;
    }

    void pop(int v) {
        tracker.pop();
        mask &= ~bit(v);
    }

    bool arc_into_base(int v, std::uint64_t base) const {
        for (int w : d.out_neighbors(v)) {
            if (base >> w & 1) {
                return true;
            }
        }
        return false;
    }

    // Depth-limited extension of the tentative path ending at `last`; success
    // exactly at depth 0 keeps the iterative deepening shortest-first.
    bool dfs(int last, int depth, std::uint64_t base) {
        if (depth == 0) {
            return arc_into_base(last, base);
        }
        for (int next : d.out_neighbors(last)) {
            if (!pool[next] || in_part(next)) {
                continue;
            }
            if (!try_add(next)) {
                continue;
            }
            if (dfs(next, depth - 1, base)) {
                return true;
            }
            pop(next);
        }
        return false;
    }

    // One absorption if any is possible; candidates in vertex order.
    bool absorb_round() {
        std::uint64_t base = mask;
        int available = 0;
        for (int v = 0; v < d.vertex_count(); ++v) {
            available += pool[v] && !in_part(v);
        }
        for (int w = 0; w < d.vertex_count(); ++w) {
            if (!pool[w] || in_part(w)) {
                continue;
            }
            bool entered = false;
            for (int y : d.in_neighbors(w)) {
                if (base >> y & 1) {
                    entered = true;
                    break;
                }
            }
            if (!entered || !try_add(w)) {
                continue;
            }
            for (int depth = 0; depth < available; ++depth) {
                if (dfs(w, depth, base)) {
                    return true;  // tentative vertices become permanent
                }
            }
            pop(w);
        }
        return false;
    }

    GrownPart finish() {
        while (absorb_round()) {
        }
        GrownPart gp;
        gp.part = tracker.members();
        std::sort(gp.part.begin(), gp.part.end());
        gp.colors.reserve(gp.part.size());
        for (int v : gp.part) {
            gp.colors.push_back(tracker.colors()[v]);
        }
        if (!is_strongly_connected_subset(d, gp.part)) {
            throw std::logic_error("grown part is not strongly connected");
        }
        return gp;
    }
};

GrownPart grow_extend(const Digraph& d, const VertexSet& remainder,
                      const VertexSet& start) {
    if (d.vertex_count() > kMaxPartitionVertices) {
        throw std::invalid_argument("partition builder supports at most 64 vertices");
    }
    return Grower(d, remainder, start).finish();
}

std::vector<int> part_of_map(const Digraph& d, const MaximalPartition& p) {
    std::vector<int> part_of(d.vertex_count(), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (int v : p.parts[i]) {
            part_of[v] = static_cast<int>(i);
        }
    }
    return part_of;
}

std::vector<int> part_sizes(const MaximalPartition& p) {
    std::vector<int> sizes;
    sizes.reserve(p.parts.size());
    for (const auto& part : p.parts) {
        sizes.push_back(static_cast<int>(part.size()));
    }
    return sizes;
}

}  // namespace

GrownPart grow_part(const Digraph& d, const VertexSet& remainder, int seed) {
    VertexSet rem = normalize_vertex_set(d.vertex_count(), remainder);
    if (!std::binary_search(rem.begin(), rem.end(), seed)) {
        throw std::invalid_argument("seed must belong to the remainder");
    }
    return grow_extend(d, rem, {seed});
}

MaximalPartition build_partition(const Digraph& d) {
    MaximalPartition p;
    std::vector<char> remaining(d.vertex_count(), 1);
    int left = d.vertex_count();
    while (left > 0) {
        VertexSet rem;
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (remaining[v]) {
                rem.push_back(v);
            }
        }
        GrownPart gp = grow_part(d, rem, rem[0]);
        for (int v : gp.part) {
            remaining[v] = 0;
        }
        left -= static_cast<int>(gp.part.size());
        p.parts.push_back(std::move(gp.part));
        p.part_colors.push_back(std::move(gp.colors));
    }
    return p;
}

void check_partition_structure(const Digraph& d, const MaximalPartition& p) {
    if (p.parts.size() != p.part_colors.size()) {
        throw std::invalid_argument("one coloring per part required");
    }
    std::vector<char> seen(d.vertex_count(), 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto& part = p.parts[i];
        const auto& colors = p.part_colors[i];
        if (part.empty()) {
            throw std::invalid_argument("empty part");
        }
        if (colors.size() != part.size()) {
            throw std::invalid_argument("part coloring size mismatch");
        }
        for (int v : part) {
            if (v < 0 || v >= d.vertex_count() || seen[v]) {
                throw std::invalid_argument("parts must partition the vertices");
            }
            seen[v] = 1;
        }
        if (!is_strongly_connected_subset(d, part)) {
            throw std::invalid_argument("part is not strongly connected");
        }
        for (int c = 0; c < 2; ++c) {
            VertexSet cls;
            for (std::size_t j = 0; j < part.size(); ++j) {
                if (colors[j] == c) {
                    cls.push_back(part[j]);
                } else if (colors[j] != 0 && colors[j] != 1) {
                    throw std::invalid_argument("part colors must be 0 or 1");
                }
            }
            if (!is_acyclic_set(d, cls)) {
                throw std::invalid_argument("part coloring has a cyclic class");
            }
        }
    }
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!seen[v]) {
            throw std::invalid_argument("parts must cover all vertices");
        }
    }
}

Graph quotient_graph(const Digraph& d, const MaximalPartition& p) {
    int m = static_cast<int>(p.parts.size());
    std::vector<int> part_of = part_of_map(d, p);
    std::vector<std::vector<char>> fwd(m, std::vector<char>(m, 0));
    for (auto [u, v] : d.arcs()) {
        int a = part_of[u], b = part_of[v];
        if (a >= 0 && b >= 0 && a != b) {
            fwd[a][b] = 1;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (fwd[i][j] && fwd[j][i]) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(m, std::move(edges));
}

AcyclicColoring lift_coloring(const Digraph& d, const MaximalPartition& p,
                              const ProperColoring& quotient_coloring) {
    if (!is_valid_proper_coloring(quotient_graph(d, p), quotient_coloring)) {
        throw std::invalid_argument(
            "quotient coloring is not a proper coloring of the quotient");
    }
    AcyclicColoring lifted;
    lifted.color.assign(d.vertex_count(), -1);
    lifted.k = 2 * quotient_coloring.k;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (std::size_t j = 0; j < p.parts[i].size(); ++j) {
            lifted.color[p.parts[i][j]] =
                2 * quotient_coloring.color[i] + p.part_colors[i][j];
        }
    }
    return lifted;
}

MaximalPartition repair_step(const Digraph& d, const MaximalPartition& p,
                             const std::vector<int>& cycle, RepairContext* ctx) {
    check_partition_structure(d, p);
    int len = static_cast<int>(cycle.size());
    if (len < 2) {
        throw std::invalid_argument("cycle too short");
    }
    for (int i = 0; i < len; ++i) {
        if (!d.has_arc(cycle[i], cycle[(i + 1) % len])) {
            throw std::invalid_argument("not a directed cycle of the host");
        }
    }
    std::vector<int> part_of = part_of_map(d, p);
    int i0 = static_cast<int>(p.parts.size());
    for (int v : cycle) {
        i0 = std::min(i0, part_of[v]);
    }

    // Locate the first departure from part i0 along the cycle.
    int depart = -1;
    for (int i = 0; i < len; ++i) {
        if (part_of[cycle[i]] == i0 && part_of[cycle[(i + 1) % len]] != i0) {
            depart = i;
            break;
        }
    }
    if (depart < 0) {
        // Every arc stays inside part i0, so the part's 2-coloring admitted a
        // monochromatic cycle: impossible for genuine inputs.
        throw std::logic_error("monochromatic cycle inside a single part");
    }
    RepairContext context;
    context.part_index = i0;
    context.cycle = cycle;
    context.u = cycle[depart];
    for (int i = (depart + 1) % len; part_of[cycle[i]] != i0; i = (i + 1) % len) {
        context.outside.push_back(cycle[i]);
        context.v = cycle[(i + 1) % len];
    }

    const VertexSet& home = p.parts[i0];
    auto in_home = [&](int v) { return part_of[v] == i0; };
    for (std::size_t i = 0; i < context.outside.size() && context.s < 0; ++i) {
        int w = context.outside[i];
        for (int x : d.out_neighbors(w)) {
            if (in_home(x)) {
                context.s = static_cast<int>(i) + 1;
                context.x = x;
                break;
            }
        }
    }
    if (context.s < 0) {
        throw std::logic_error("cycle segment never returns to its first part");
    }
    int w_s = context.outside[context.s - 1];
    for (int y : d.in_neighbors(w_s)) {
        if (in_home(y)) {
            // An in-neighbour inside the part forces arcs both ways between
            // the two parts, hence a quotient edge and differing lifted
            // colors along the cycle: it cannot have been monochromatic.
            throw std::logic_error("repair segment has an in-neighbour in the part");
        }
    }
    if (context.s < 2) {
        throw std::logic_error("repair index must be at least 2");
    }
    context.absorbed.assign(context.outside.begin(),
                            context.outside.begin() + context.s);

    // Enlarge the part as dictated by the cycle and check the extended
    // 2-coloring stays valid.
    VertexSet enlarged = home;
    std::vector<int> enlarged_colors = p.part_colors[i0];
    for (int i = 0; i < context.s; ++i) {
        enlarged.push_back(context.outside[i]);
        enlarged_colors.push_back(i + 1 < context.s ? 0 : 1);
    }
    for (int c = 0; c < 2; ++c) {
        VertexSet cls;
        for (std::size_t j = 0; j < enlarged.size(); ++j) {
            if (enlarged_colors[j] == c) {
                cls.push_back(enlarged[j]);
            }
        }
        if (!is_acyclic_set(d, cls)) {
            throw std::logic_error("extended part coloring has a cyclic class");
        }
    }
    if (!is_strongly_connected_subset(d, enlarged)) {
        throw std::logic_error("extended part is not strongly connected");
    }
    if (ctx) {
        *ctx = context;
    }

    // Re-grow the enlarged part to its maximal fixed point within the suffix,
    // then rebuild all later parts from the leftovers.
    VertexSet suffix;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (part_of[v] >= i0) {
            suffix.push_back(v);
        }
    }
    GrownPart regrown = grow_extend(d, suffix, enlarged);

    MaximalPartition out;
    for (int i = 0; i < i0; ++i) {
        out.parts.push_back(p.parts[i]);
        out.part_colors.push_back(p.part_colors[i]);
    }
    out.parts.push_back(regrown.part);
    out.part_colors.push_back(regrown.colors);
    std::vector<char> leftover(d.vertex_count(), 0);
    for (int v : suffix) {
        leftover[v] = 1;
    }
    for (int v : regrown.part) {
        leftover[v] = 0;
    }
    for (;;) {
        VertexSet rem;
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (leftover[v]) {
                rem.push_back(v);
            }
        }
        if (rem.empty()) {
            break;
        }
        GrownPart gp = grow_part(d, rem, rem[0]);
        for (int v : gp.part) {
            leftover[v] = 0;
        }
        out.parts.push_back(std::move(gp.part));
        out.part_colors.push_back(std::move(gp.colors));
    }
    return out;
}

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

DecompositionCertificate certify_decomposition_from(const Digraph& d,
                                                    MaximalPartition initial) {
    check_partition_structure(d, initial);
    DecompositionCertificate cert;
    cert.host = d;
    cert.partition = std::move(initial);
    cert.stats.part_size_history.push_back(part_sizes(cert.partition));
    for (;;) {
        cert.quotient = quotient_graph(d, cert.partition);
        auto [k, coloring] = chromatic_number(cert.quotient);
        cert.quotient_coloring = std::move(coloring);
        cert.lifted = lift_coloring(d, cert.partition, cert.quotient_coloring);
        auto cycle = find_monochromatic_cycle(d, cert.lifted.color);
        if (!cycle) {
            break;
        }
        MaximalPartition repaired = repair_step(d, cert.partition, *cycle);
        std::vector<int> before = part_sizes(cert.partition);
        std::vector<int> after = part_sizes(repaired);
        if (!lex_less(before, after)) {
            throw std::logic_error("repair did not increase the part-size tuple");
        }
        cert.partition = std::move(repaired);
        cert.stats.part_size_history.push_back(after);
        ++cert.stats.repair_count;
    }
    if (!is_valid_acyclic_coloring(d, cert.lifted)) {
        throw std::logic_error("lifted coloring failed validation");
    }
    if (cert.lifted.k != 2 * cert.quotient_coloring.k) {
        throw std::logic_error("lifted coloring color budget mismatch");
    }
    cert.model = StrongMinorModel{d, biorient(cert.quotient), cert.partition.parts};
    if (!verify_strong_model(cert.model)) {
        throw std::logic_error("decomposition model failed verification");
    }
    return cert;
}

DecompositionCertificate certify_decomposition(const Digraph& d) {
    return certify_decomposition_from(d, build_partition(d));
}

bool assert_maximality(const Digraph& d, const MaximalPartition& p) {
    check_partition_structure(d, p);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        VertexSet extra;
        for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
            extra.insert(extra.end(), p.parts[j].begin(), p.parts[j].end());
        }
        std::sort(extra.begin(), extra.end());
        if (extra.size() > 25) {
            throw std::invalid_argument("maximality oracle supports small suffixes only");
        }
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << extra.size()); ++sub) {
            VertexSet candidate = p.parts[i];
            for (std::size_t b = 0; b < extra.size(); ++b) {
                if (sub >> b & 1) {
                    candidate.push_back(extra[b]);
                }
            }
            if (is_strongly_connected_subset(d, candidate) &&
                two_dicolor_subset(d, candidate)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace dirminor

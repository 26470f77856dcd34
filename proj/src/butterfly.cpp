#include "dirminor/butterfly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "dirminor/generators.hpp"
#include "dirminor/isomorphism.hpp"

namespace dirminor {

bool is_contractible(const Digraph& d, int u, int v) {
    if (!d.has_arc(u, v)) {
        throw std::invalid_argument("contractibility is defined only for arcs");
    }
    return d.out_degree(u) == 1 || d.in_degree(v) == 1;
}

RelabeledDigraph contract(const Digraph& d, int u, int v) {
    if (!is_contractible(d, u, v)) {
        throw std::invalid_argument("arc is not butterfly-contractible");
    }
    int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<int> map(d.vertex_count());
    for (int w = 0; w < d.vertex_count(); ++w) {
        map[w] = (w == u || w == v) ? lo : (w > hi ? w - 1 : w);
    }
    std::set<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if (map[a] != map[b]) {
            arcs.emplace(map[a], map[b]);
        }
    }
    return {Digraph(d.vertex_count() - 1, {arcs.begin(), arcs.end()}),
            std::move(map)};
}

RelabeledDigraph delete_vertex(const Digraph& d, int v) {
    if (v < 0 || v >= d.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    std::vector<int> map(d.vertex_count());
    for (int w = 0; w < d.vertex_count(); ++w) {
        map[w] = (w == v) ? -1 : (w > v ? w - 1 : w);
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if (a != v && b != v) {
            arcs.emplace_back(map[a], map[b]);
        }
    }
    return {Digraph(d.vertex_count() - 1, std::move(arcs)), std::move(map)};
}

Digraph delete_arc(const Digraph& d, int u, int v) {
    if (!d.has_arc(u, v)) {
        throw std::invalid_argument("arc not present");
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if (a != u || b != v) {
            arcs.emplace_back(a, b);
        }
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

ReplayResult replay_trace(const Digraph& initial,
                          const std::vector<ButterflyStep>& steps) {
    Digraph cur = initial;
    std::vector<VertexSet> origins(initial.vertex_count());
    for (int v = 0; v < initial.vertex_count(); ++v) {
        origins[v] = {v};
    }
    auto remap = [&](const std::vector<int>& map) {
        std::vector<VertexSet> next(cur.vertex_count());
        for (std::size_t old = 0; old < map.size(); ++old) {
            if (map[old] >= 0) {
                auto& dst = next[map[old]];
                VertexSet merged;
                std::merge(dst.begin(), dst.end(), origins[old].begin(),
                           origins[old].end(), std::back_inserter(merged));
                dst = std::move(merged);
            }
        }
        origins = std::move(next);
    };
    for (const auto& step : steps) {
        switch (step.kind) {
            case ButterflyStep::Kind::DeleteVertex: {
                auto r = delete_vertex(cur, step.u);
                cur = std::move(r.digraph);
                remap(r.vertex_map);
                break;
            }
            case ButterflyStep::Kind::DeleteArc:
                cur = delete_arc(cur, step.u, step.v);
                break;
            case ButterflyStep::Kind::Contract: {
                auto r = contract(cur, step.u, step.v);
                cur = std::move(r.digraph);
                remap(r.vertex_map);
                break;
            }
        }
    }
    return {std::move(cur), std::move(origins)};
}

bool verify_trace(const ButterflyTrace& trace) {
    try {
        ReplayResult r = replay_trace(trace.initial, trace.steps);
        return r.digraph == trace.result && r.origins == trace.origins;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

// Breadth-first spanning tree of part from root. With toward_root, arcs are
// followed backwards and recorded (child, parent); otherwise forwards and
// recorded (parent, child). Discovery order.
std::vector<std::pair<int, int>> bfs_tree(const Digraph& d, const VertexSet& part,
                                          int root, bool toward_root) {
    std::vector<char> member(d.vertex_count(), 0), seen(d.vertex_count(), 0);
    for (int v : part) {
        member[v] = 1;
    }
    std::vector<std::pair<int, int>> tree;
    std::vector<int> queue = {root};
    seen[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int z = queue[qi];
        const auto& nbrs = toward_root ? d.in_neighbors(z) : d.out_neighbors(z);
        for (int w : nbrs) {
            if (member[w] && !seen[w]) {
                seen[w] = 1;
                tree.emplace_back(toward_root ? w : z, toward_root ? z : w);
                queue.push_back(w);
            }
        }
    }
    if (tree.size() + 1 != part.size()) {
        throw std::logic_error("branch set is not spanned by its arborescence");
    }
    return tree;
}

}  // namespace

std::vector<ArborescencePair> build_arborescences(const StrongMinorModel& model) {
    if (!verify_strong_model(model)) {
        throw std::invalid_argument("model failed verification");
    }
    int sets = static_cast<int>(model.branch_sets.size());
    if (sets == 0 || sets % 2 != 0 ||
        !(model.pattern == bidirected_clique(sets))) {
        throw std::invalid_argument(
            "pattern must be a bidirected clique of even positive order");
    }
    std::vector<int> order(sets);
    for (int i = 0; i < sets; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return model.branch_sets[a].front() < model.branch_sets[b].front();
    });
    std::vector<ArborescencePair> pairs;
    for (int i = 0; i < sets / 2; ++i) {
        ArborescencePair p;
        p.in_part = model.branch_sets[order[2 * i]];
        p.out_part = model.branch_sets[order[2 * i + 1]];
        for (int a : p.in_part) {
            for (int b : p.out_part) {
                if (model.host.has_arc(a, b)) {
                    p.in_root = a;
                    p.out_root = b;
                    break;
                }
            }
            if (p.in_root >= 0) {
                break;
            }
        }
        if (p.in_root < 0) {
            throw std::logic_error(
                "complete pattern promised an arc between paired branch sets");
        }
        p.in_tree = bfs_tree(model.host, p.in_part, p.in_root, true);
        p.out_tree = bfs_tree(model.host, p.out_part, p.out_root, false);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

ButterflyTrace extract_butterfly(const StrongMinorModel& model) {
    std::vector<ArborescencePair> pairs = build_arborescences(model);
    const Digraph& host = model.host;
    int t = static_cast<int>(pairs.size());

    std::vector<int> in_pair_of(host.vertex_count(), -1);
    std::vector<int> out_pair_of(host.vertex_count(), -1);
    for (int i = 0; i < t; ++i) {
        for (int v : pairs[i].in_part) {
            in_pair_of[v] = i;
        }
        for (int v : pairs[i].out_part) {
            out_pair_of[v] = i;
        }
    }
    std::set<std::pair<int, int>> keep;
    std::vector<std::pair<int, int>> plan;  // contraction order, host labels
    for (const auto& p : pairs) {
        for (auto it = p.in_tree.rbegin(); it != p.in_tree.rend(); ++it) {
            plan.push_back(*it);
        }
        plan.emplace_back(p.in_root, p.out_root);
        for (auto arc : p.out_tree) {
            plan.push_back(arc);
        }
    }
    keep.insert(plan.begin(), plan.end());
    for (auto [a, b] : host.arcs()) {
        if (out_pair_of[a] >= 0 && in_pair_of[b] >= 0 &&
            out_pair_of[a] != in_pair_of[b]) {
            keep.emplace(a, b);
        }
    }

    Digraph cur = host;
    std::vector<int> where(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v) {
        where[v] = v;
    }
    auto apply_map = [&](const std::vector<int>& map) {
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (where[v] >= 0) {
                where[v] = map[where[v]];
            }
        }
    };
    std::vector<ButterflyStep> steps;

    for (int v = host.vertex_count() - 1; v >= 0; --v) {
        if (in_pair_of[v] < 0 && out_pair_of[v] < 0) {
            steps.push_back({ButterflyStep::Kind::DeleteVertex, where[v], -1});
            auto r = delete_vertex(cur, where[v]);
            cur = std::move(r.digraph);
            apply_map(r.vertex_map);
        }
    }
    std::vector<int> label(cur.vertex_count(), -1);  // current -> host
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (where[v] >= 0) {
            label[where[v]] = v;
        }
    }
    std::vector<std::pair<int, int>> unwanted;
    for (auto [a, b] : cur.arcs()) {
        if (!keep.count({label[a], label[b]})) {
            unwanted.emplace_back(a, b);
        }
    }
    for (auto [a, b] : unwanted) {
        steps.push_back({ButterflyStep::Kind::DeleteArc, a, b});
        cur = delete_arc(cur, a, b);
    }

    for (std::size_t k = 0; k < plan.size(); ++k) {
        auto [a, b] = plan[k];
        int ca = where[a], cb = where[b];
        if (ca < 0 || cb < 0 || ca == cb || !cur.has_arc(ca, cb)) {
            throw std::logic_error("extraction lost a planned contraction arc");
        }
        if (!is_contractible(cur, ca, cb)) {
            throw std::logic_error(
                "planned contraction arc is not butterfly-contractible");
        }
        steps.push_back({ButterflyStep::Kind::Contract, ca, cb});
        auto r = contract(cur, ca, cb);
        cur = std::move(r.digraph);
        apply_map(r.vertex_map);
        for (std::size_t j = k + 1; j < plan.size(); ++j) {
            int pa = where[plan[j].first], pb = where[plan[j].second];
            if (pa < 0 || pb < 0 || pa == pb || !cur.has_arc(pa, pb) ||
                !is_contractible(cur, pa, pb)) {
                throw std::logic_error(
                    "contraction disturbed a later planned arc");
            }
        }
    }

    if (!(cur == bidirected_clique(t))) {
        throw std::logic_error(
            "contractions did not produce the bidirected clique");
    }
    ReplayResult replay = replay_trace(host, steps);
    if (!(replay.digraph == cur)) {
        throw std::logic_error("trace replay diverged from the construction");
    }
    for (int i = 0; i < t; ++i) {
        VertexSet expected;
        std::merge(pairs[i].in_part.begin(), pairs[i].in_part.end(),
                   pairs[i].out_part.begin(), pairs[i].out_part.end(),
                   std::back_inserter(expected));
        if (replay.origins[i] != expected) {
            throw std::logic_error("merged vertex provenance mismatch");
        }
    }
    return {host, std::move(steps), std::move(cur), std::move(replay.origins)};
}

namespace {

struct MinorSearch {
    const Digraph& target;
    std::unordered_set<std::uint64_t> seen;

    bool from(const Digraph& cur) {
        if (cur.vertex_count() < target.vertex_count() ||
            cur.arc_count() < target.arc_count()) {
            return false;
        }
        if (!seen.insert(canonical_key(cur)).second) {
            return false;
        }
        if (are_isomorphic(cur, target)) {
            return true;
        }
        for (auto [u, v] : cur.arcs()) {
            if (from(delete_arc(cur, u, v))) {
                return true;
            }
        }
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (from(delete_vertex(cur, v).digraph)) {
                return true;
            }
        }
        for (auto [u, v] : cur.arcs()) {
            if (is_contractible(cur, u, v) && from(contract(cur, u, v).digraph)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

bool has_butterfly_minor(const Digraph& d, const Digraph& h) {
    if (d.vertex_count() > 7) {
        throw std::invalid_argument(
            "exhaustive minor search supports at most 7 vertices");
    }
    MinorSearch search{h, {}};
    return search.from(d);
}

std::optional<ButterflyTrace> force_butterfly_clique_minor(const Digraph& d,
                                                           int t) {
    if (t < 1 || 2 * t > 6) {
        throw std::invalid_argument(
            "butterfly pipeline supports orders 1 to 3 only");
    }
    std::optional<StrongMinorModel> model = force_strong_clique_minor(d, 2 * t);
    if (!model) {
        return std::nullopt;
    }
    return extract_butterfly(*model);
}

}  // namespace dirminor

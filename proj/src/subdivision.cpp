#include "dirminor/subdivision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dirminor {

bool is_subcubic(const Digraph& f) {
    for (auto [u, v] : f.arcs()) {
        if (f.has_arc(v, u)) {
            return false;
        }
    }
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (f.in_degree(v) > 2 || f.out_degree(v) > 2 ||
            f.in_degree(v) + f.out_degree(v) > 3) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> choose_realized_arcs(
    const StrongMinorModel& model) {
    if (!verify_strong_model(model)) {
        throw std::invalid_argument("model failed verification");
    }
    std::vector<std::pair<int, int>> chosen;
    for (auto [u, v] : model.pattern.arcs()) {
        std::pair<int, int> best{-1, -1};
        for (int a : model.branch_sets[u]) {
            for (int b : model.branch_sets[v]) {
                if (model.host.has_arc(a, b)) {
                    best = {a, b};
                    break;
                }
            }
            if (best.first >= 0) {
                break;
            }
        }
        if (best.first < 0) {
            throw std::logic_error("verified model lost a realized arc");
        }
        chosen.push_back(best);
    }
    return chosen;
}

namespace {

// Breadth-first shortest directed path from..to inside part; among shortest
// paths, the one taking the lowest-index next vertex at every step.
std::vector<int> shortest_path_in_set(const Digraph& host, const VertexSet& part,
                                      int from, int to) {
    std::vector<char> member(host.vertex_count(), 0);
    for (int v : part) {
        member[v] = 1;
    }
    std::vector<int> dist(host.vertex_count(), -1);
    dist[to] = 0;
    std::vector<int> queue = {to};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int z = queue[qi];
        for (int w : host.in_neighbors(z)) {
            if (member[w] && dist[w] < 0) {
                dist[w] = dist[z] + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist[from] < 0) {
        throw std::logic_error("no path inside a strongly connected branch set");
    }
    std::vector<int> path = {from};
    for (int cur = from; cur != to;) {
        int next = -1;
        for (int w : host.out_neighbors(cur)) {
            if (member[w] && dist[w] == dist[cur] - 1) {
                next = w;
                break;
            }
        }
        if (next < 0) {
            throw std::logic_error("shortest-path walk lost its target");
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

struct IncidentArc {
    std::pair<int, int> arc;
    int terminal;
    bool incoming;
};

std::vector<IncidentArc> incident_arcs(
    const Digraph& pattern, const std::vector<std::pair<int, int>>& realized,
    int u) {
    std::vector<IncidentArc> in, out;
    for (std::size_t i = 0; i < pattern.arcs().size(); ++i) {
        auto [a, b] = pattern.arcs()[i];
        if (b == u) {
            in.push_back({{a, b}, realized[i].second, true});
        } else if (a == u) {
            out.push_back({{a, b}, realized[i].first, false});
        }
    }
    in.insert(in.end(), out.begin(), out.end());
    return in;
}

void assert_system(const Digraph& host, const VertexSet& part,
                   const PathSystem& sys, int u) {
    if (sys.vertex != u ||
        !std::binary_search(part.begin(), part.end(), sys.branch_vertex)) {
        throw std::logic_error("branch vertex escaped its branch set");
    }
    std::size_t d = sys.incident.size();
    if (sys.terminals.size() != d || sys.paths.size() != d) {
        throw std::logic_error("path system fields misaligned");
    }
    std::vector<std::vector<int>> sorted(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& p = sys.paths[i];
        if (p.empty()) {
            throw std::logic_error("empty subdivision path");
        }
        for (int v : p) {
            if (!std::binary_search(part.begin(), part.end(), v)) {
                throw std::logic_error("path leaves its branch set");
            }
        }
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            if (!host.has_arc(p[j], p[j + 1])) {
                throw std::logic_error("path uses a missing arc");
            }
        }
        bool tail = sys.incident[i].first == u;
        int want_front = tail ? sys.branch_vertex : sys.terminals[i];
        int want_back = tail ? sys.terminals[i] : sys.branch_vertex;
        if (p.front() != want_front || p.back() != want_back) {
            throw std::logic_error("path endpoints disagree with the arc direction");
        }
        sorted[i] = p;
        std::sort(sorted[i].begin(), sorted[i].end());
        if (std::adjacent_find(sorted[i].begin(), sorted[i].end()) !=
            sorted[i].end()) {
            throw std::logic_error("subdivision path repeats a vertex");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<int> common;
            std::set_intersection(sorted[i].begin(), sorted[i].end(),
                                  sorted[j].begin(), sorted[j].end(),
                                  std::back_inserter(common));
            if (common != std::vector<int>{sys.branch_vertex}) {
                throw std::logic_error(
                    "paths of one system share more than the branch vertex");
            }
        }
    }
}

PathSystem build_system_impl(const Digraph& host, const Digraph& pattern,
                             const std::vector<VertexSet>& sets,
                             const std::vector<std::pair<int, int>>& realized,
                             int u, bool allow_reverse) {
    const VertexSet& part = sets[u];
    std::vector<IncidentArc> inc = incident_arcs(pattern, realized, u);
    int d = static_cast<int>(inc.size());
    int indeg = static_cast<int>(
        std::count_if(inc.begin(), inc.end(), [](const IncidentArc& e) {
            return e.incoming;
        }));

    PathSystem sys;
    sys.vertex = u;
    if (d == 0) {
        sys.branch_vertex = part.front();
    } else if (d == 1) {
        sys.branch_vertex = inc[0].terminal;
        sys.incident = {inc[0].arc};
        sys.terminals = {inc[0].terminal};
        sys.paths = {{inc[0].terminal}};
    } else if ((d == 2 && indeg >= 1) || (d == 3 && indeg == 1)) {
        for (const auto& e : inc) {
            sys.incident.push_back(e.arc);
            sys.terminals.push_back(e.terminal);
        }
        int v1 = inc[0].terminal;
        if (d == 2) {
            sys.branch_vertex = v1;
            int v2 = inc[1].terminal;
            sys.paths.push_back({v1});
            sys.paths.push_back(inc[1].incoming
                                    ? shortest_path_in_set(host, part, v2, v1)
                                    : shortest_path_in_set(host, part, v1, v2));
        } else {
            int v2 = inc[1].terminal, v3 = inc[2].terminal;
            std::vector<int> p12 = shortest_path_in_set(host, part, v1, v2);
            std::vector<int> p13 = shortest_path_in_set(host, part, v1, v3);
            // the last vertex of p13 that also lies on p12 becomes the branch
            // vertex; the tail of p13 beyond it avoids p12 entirely
            std::vector<char> on12(host.vertex_count(), 0);
            for (int w : p12) {
                on12[w] = 1;
            }
            int bpos = static_cast<int>(p13.size()) - 1;
            while (!on12[p13[bpos]]) {
                --bpos;
            }
            int b = p13[bpos];
            sys.branch_vertex = b;
            auto split = std::find(p12.begin(), p12.end(), b);
            sys.paths.emplace_back(p12.begin(), split + 1);
            sys.paths.emplace_back(split, p12.end());
            sys.paths.emplace_back(p13.begin() + bpos, p13.end());
        }
    } else {
        if (!allow_reverse) {
            throw std::logic_error("orientation reduction did not terminate");
        }
        Digraph rev_host = reverse(host);
        Digraph rev_pattern = reverse(pattern);
        std::map<std::pair<int, int>, std::pair<int, int>> flipped;
        for (std::size_t i = 0; i < pattern.arcs().size(); ++i) {
            auto [a, b] = pattern.arcs()[i];
            flipped[{b, a}] = {realized[i].second, realized[i].first};
        }
        std::vector<std::pair<int, int>> rev_realized;
        for (auto arc : rev_pattern.arcs()) {
            rev_realized.push_back(flipped.at(arc));
        }
        PathSystem mirrored =
            build_system_impl(rev_host, rev_pattern, sets, rev_realized, u, false);
        sys.branch_vertex = mirrored.branch_vertex;
        struct Entry {
            std::pair<int, int> arc;
            int terminal;
            std::vector<int> path;
            bool incoming;
        };
        std::vector<Entry> entries;
        for (std::size_t i = 0; i < mirrored.incident.size(); ++i) {
            auto [a, b] = mirrored.incident[i];
            std::vector<int> p = mirrored.paths[i];
            std::reverse(p.begin(), p.end());
            entries.push_back({{b, a}, mirrored.terminals[i], std::move(p), a == u});
        }
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& x, const Entry& y) {
                             if (x.incoming != y.incoming) {
                                 return x.incoming;
                             }
                             return x.arc < y.arc;
                         });
        for (auto& e : entries) {
            sys.incident.push_back(e.arc);
            sys.terminals.push_back(e.terminal);
            sys.paths.push_back(std::move(e.path));
        }
    }
    assert_system(host, part, sys, u);
    return sys;
}

}  // namespace

PathSystem build_path_system(const StrongMinorModel& model, int u) {
    if (!is_subcubic(model.pattern)) {
        throw std::invalid_argument("pattern must be subcubic");
    }
    if (u < 0 || u >= model.pattern.vertex_count()) {
        throw std::invalid_argument("pattern vertex out of range");
    }
    std::vector<std::pair<int, int>> realized = choose_realized_arcs(model);
    return build_system_impl(model.host, model.pattern, model.branch_sets,
                             realized, u, true);
}

SubdivisionEmbedding build_subdivision(const StrongMinorModel& model) {
    if (!is_subcubic(model.pattern)) {
        throw std::invalid_argument("pattern must be subcubic");
    }
    std::vector<std::pair<int, int>> realized = choose_realized_arcs(model);
    int n = model.pattern.vertex_count();
    std::vector<PathSystem> systems;
    for (int u = 0; u < n; ++u) {
        systems.push_back(build_system_impl(model.host, model.pattern,
                                            model.branch_sets, realized, u, true));
    }
    SubdivisionEmbedding emb{model.host, model.pattern, {}, {}};
    for (int u = 0; u < n; ++u) {
        emb.branch_vertex.push_back(systems[u].branch_vertex);
    }
    for (std::size_t i = 0; i < model.pattern.arcs().size(); ++i) {
        auto arc = model.pattern.arcs()[i];
        auto [u1, u2] = arc;
        auto find_path = [&](const PathSystem& sys) -> const std::vector<int>& {
            auto it = std::find(sys.incident.begin(), sys.incident.end(), arc);
            if (it == sys.incident.end()) {
                throw std::logic_error("path system is missing an incident arc");
            }
            return sys.paths[it - sys.incident.begin()];
        };
        const std::vector<int>& head_out = find_path(systems[u1]);
        const std::vector<int>& tail_in = find_path(systems[u2]);
        std::vector<int> full = head_out;
        full.insert(full.end(), tail_in.begin(), tail_in.end());
        emb.arc_paths.push_back(std::move(full));
    }
    if (!verify_subdivision(emb)) {
        throw std::logic_error("constructed embedding failed verification");
    }
    return emb;
}

bool verify_subdivision(const SubdivisionEmbedding& emb) {
    const Digraph& host = emb.host;
    const Digraph& pattern = emb.pattern;
    int n = pattern.vertex_count();
    if (static_cast<int>(emb.branch_vertex.size()) != n ||
        emb.arc_paths.size() != pattern.arcs().size()) {
        return false;
    }
    std::vector<char> is_branch(host.vertex_count(), 0);
    for (int b : emb.branch_vertex) {
        if (b < 0 || b >= host.vertex_count() || is_branch[b]) {
            return false;
        }
        is_branch[b] = 1;
    }
    std::vector<char> internal_used(host.vertex_count(), 0);
    for (std::size_t i = 0; i < emb.arc_paths.size(); ++i) {
        auto [u1, u2] = pattern.arcs()[i];
        const auto& p = emb.arc_paths[i];
        if (p.size() < 2 || p.front() != emb.branch_vertex[u1] ||
            p.back() != emb.branch_vertex[u2]) {
            return false;
        }
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            if (p[j] < 0 || p[j] >= host.vertex_count() ||
                !host.has_arc(p[j], p[j + 1])) {
                return false;
            }
        }
        std::vector<int> dedup = p;
        std::sort(dedup.begin(), dedup.end());
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end()) {
            return false;
        }
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            if (is_branch[p[j]] || internal_used[p[j]]) {
                return false;
            }
            internal_used[p[j]] = 1;
        }
    }
    return true;
}

std::optional<SubdivisionEmbedding> find_subdivision(const Digraph& d,
                                                     const Digraph& f) {
    if (!is_subcubic(f)) {
        throw std::invalid_argument("pattern must be subcubic");
    }
    std::optional<StrongMinorModel> model = find_strong_model(d, f);
    if (!model) {
        return std::nullopt;
    }
    return build_subdivision(*model);
}

long long subdivision_threshold(int n) {
    return 22LL * n;
}

}  // namespace dirminor

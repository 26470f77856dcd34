#include "dirminor/strong_minors.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "dirminor/decomposition.hpp"
#include "dirminor/generators.hpp"

namespace dirminor {

namespace {

bool sets_well_formed(int host_n, const std::vector<VertexSet>& sets) {
    std::vector<char> seen(host_n, 0);
    for (const auto& s : sets) {
        if (s.empty()) {
            return false;
        }
        for (int v : s) {
            if (v < 0 || v >= host_n || seen[v]) {
                return false;
            }
            seen[v] = 1;
        }
    }
    return true;
}

int arcs_between(const Digraph& host, const VertexSet& from, const VertexSet& to,
                 int enough) {
    std::vector<char> target(host.vertex_count(), 0);
    for (int v : to) {
        target[v] = 1;
    }
    int count = 0;
    for (int u : from) {
        for (int w : host.out_neighbors(u)) {
            if (target[w] && ++count >= enough) {
                return count;
            }
        }
    }
    return count;
}

}  // namespace

bool verify_strong_model(const StrongMinorModel& model, bool strengthened) {
    const auto& [host, pattern, sets] = model;
    if (static_cast<int>(sets.size()) != pattern.vertex_count()) {
        return false;
    }
    if (!sets_well_formed(host.vertex_count(), sets)) {
        return false;
    }
    for (const auto& s : sets) {
        if (!is_strongly_connected_subset(host, s)) {
            return false;
        }
    }
    int need = strengthened ? 2 : 1;
    for (auto [u, v] : pattern.arcs()) {
        if (arcs_between(host, sets[u], sets[v], need) < need) {
            return false;
        }
    }
    return true;
}

bool verify_undirected_model(const UndirectedMinorModel& model) {
    const auto& [host, pattern, sets] = model;
    if (static_cast<int>(sets.size()) != pattern.vertex_count()) {
        return false;
    }
    if (!sets_well_formed(host.vertex_count(), sets)) {
        return false;
    }
    for (const auto& s : sets) {
        // connectivity of the induced subgraph
        std::vector<char> member(host.vertex_count(), 0);
        for (int v : s) {
            member[v] = 1;
        }
        std::vector<char> reached(host.vertex_count(), 0);
        std::vector<int> queue = {s[0]};
        reached[s[0]] = 1;
        std::size_t cnt = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (int w : host.neighbors(queue[qi])) {
                if (member[w] && !reached[w]) {
                    reached[w] = 1;
                    ++cnt;
                    queue.push_back(w);
                }
            }
        }
        if (cnt != s.size()) {
            return false;
        }
    }
    for (auto [u, v] : pattern.edges()) {
        std::vector<char> target(host.vertex_count(), 0);
        for (int w : sets[v]) {
            target[w] = 1;
        }
        bool hit = false;
        for (int a : sets[u]) {
            for (int b : host.neighbors(a)) {
                if (target[b]) {
                    hit = true;
                    break;
                }
            }
            if (hit) {
                break;
            }
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr int kMaxModelSearchVertices = 20;

struct MaskHost {
    int n;
    std::vector<std::uint64_t> out, in;

    explicit MaskHost(const Digraph& d) : n(d.vertex_count()), out(n, 0), in(n, 0) {
        for (auto [u, v] : d.arcs()) {
            out[u] |= std::uint64_t{1} << v;
            in[v] |= std::uint64_t{1} << u;
        }
    }

    bool strongly_connected(std::uint64_t mask) const {
        if (mask == 0) {
            return false;
        }
        int start = std::countr_zero(mask);
        for (const auto& nbr : {out, in}) {
            std::uint64_t reach = std::uint64_t{1} << start;
            for (;;) {
                std::uint64_t next = reach;
                std::uint64_t frontier = reach;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    next |= nbr[v] & mask;
                }
                if (next == reach) {
                    break;
                }
                reach = next;
            }
            if (reach != mask) {
                return false;
            }
        }
        return true;
    }

    int arcs_from_to(std::uint64_t a, std::uint64_t b, int enough) const {
        int count = 0;
        std::uint64_t m = a;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            count += std::popcount(out[v] & b);
            if (count >= enough) {
                return count;
            }
        }
        return count;
    }
};

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        s.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

struct ModelSearch {
    const MaskHost& mh;
    const Digraph& pattern;
    const std::vector<std::uint64_t>& candidates;
    bool clique_symmetry;
    int need;
    std::vector<std::uint64_t> placed;

    bool place(int level) {
        int t = pattern.vertex_count();
        if (level == t) {
            return true;
        }
        std::uint64_t used = 0;
        for (std::uint64_t m : placed) {
            used |= m;
        }
        for (std::uint64_t cand : candidates) {
            if (cand & used) {
                continue;
            }
            if (clique_symmetry && level > 0 &&
                std::countr_zero(cand) < std::countr_zero(placed.back())) {
                continue;
            }
            bool ok = true;
            for (int j = 0; j < level && ok; ++j) {
                if (pattern.has_arc(j, level) &&
                    mh.arcs_from_to(placed[j], cand, need) < need) {
                    ok = false;
                }
                if (ok && pattern.has_arc(level, j) &&
                    mh.arcs_from_to(cand, placed[j], need) < need) {
                    ok = false;
                }
            }
            if (!ok) {
                continue;
            }
            placed.push_back(cand);
            if (place(level + 1)) {
                return true;
            }
            placed.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<StrongMinorModel> find_strong_model(const Digraph& host,
                                                  const Digraph& pattern,
                                                  bool strengthened) {
    if (host.vertex_count() > kMaxModelSearchVertices) {
        throw std::invalid_argument("model search supports at most 20 host vertices");
    }
    MaskHost mh(host);
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << host.vertex_count()); ++m) {
        if (mh.strongly_connected(m)) {
            candidates.push_back(m);
        }
    }
    bool clique_symmetry = pattern == bidirected_clique(pattern.vertex_count());
    ModelSearch search{mh, pattern, candidates, clique_symmetry,
                       strengthened ? 2 : 1, {}};
    if (!search.place(0)) {
        return std::nullopt;
    }
    StrongMinorModel model{host, pattern, {}};
    for (std::uint64_t m : search.placed) {
        model.branch_sets.push_back(mask_to_set(m));
    }
    if (!verify_strong_model(model, strengthened)) {
        throw std::logic_error("model search produced an invalid model");
    }
    return model;
}

std::optional<UndirectedMinorModel> find_clique_minor(const Graph& host, int t) {
    if (t < 0) {
        throw std::invalid_argument("minor order must be non-negative");
    }
    if (host.vertex_count() > kMaxModelSearchVertices) {
        throw std::invalid_argument("minor search supports at most 20 host vertices");
    }
    int n = host.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : host.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    auto connected = [&](std::uint64_t mask) {
        if (mask == 0) {
            return false;
        }
        std::uint64_t reach = std::uint64_t{1} << std::countr_zero(mask);
        for (;;) {
            std::uint64_t next = reach;
            std::uint64_t frontier = reach;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & mask;
            }
            if (next == reach) {
                break;
            }
            reach = next;
        }
        return reach == mask;
    };
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (connected(m)) {
            candidates.push_back(m);
        }
    }
    auto touches = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t m = a;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (adj[v] & b) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::uint64_t> placed;
    auto place = [&](auto&& self, int level) -> bool {
        if (level == t) {
            return true;
        }
        std::uint64_t used = 0;
        for (std::uint64_t m : placed) {
            used |= m;
        }
        for (std::uint64_t cand : candidates) {
            if (cand & used) {
                continue;
            }
            if (level > 0 && std::countr_zero(cand) < std::countr_zero(placed.back())) {
                continue;
            }
            bool ok = true;
            for (int j = 0; j < level && ok; ++j) {
                ok = touches(placed[j], cand);
            }
            if (!ok) {
                continue;
            }
            placed.push_back(cand);
            if (self(self, level + 1)) {
                return true;
            }
            placed.pop_back();
        }
        return false;
    };
    if (!place(place, 0)) {
        return std::nullopt;
    }
    UndirectedMinorModel model{host, complete_graph(t), {}};
    for (std::uint64_t m : placed) {
        model.branch_sets.push_back(mask_to_set(m));
    }
    if (!verify_undirected_model(model)) {
        throw std::logic_error("minor search produced an invalid model");
    }
    return model;
}

StrongMinorModel promote_to_bioriented(const UndirectedMinorModel& model,
                                       const Digraph& host) {
    if (host.vertex_count() != model.host.vertex_count()) {
        throw std::invalid_argument("digraph host must match the model's host");
    }
    StrongMinorModel promoted{host, biorient(model.pattern), model.branch_sets};
    if (!verify_strong_model(promoted)) {
        throw std::invalid_argument(
            "host digons do not support the undirected model");
    }
    return promoted;
}

StrongMinorModel compose_models(const StrongMinorModel& outer,
                                const StrongMinorModel& inner) {
    if (!(outer.host == inner.pattern)) {
        throw std::invalid_argument("outer host must equal inner pattern");
    }
    StrongMinorModel composed{inner.host, outer.pattern, {}};
    for (const auto& mid : outer.branch_sets) {
        VertexSet merged;
        for (int m : mid) {
            const auto& piece = inner.branch_sets[m];
            merged.insert(merged.end(), piece.begin(), piece.end());
        }
        std::sort(merged.begin(), merged.end());
        composed.branch_sets.push_back(std::move(merged));
    }
    if (!verify_strong_model(composed)) {
        throw std::logic_error("composition of valid models failed verification");
    }
    return composed;
}

int hadwiger_threshold(int t) {
    if (t < 1) {
        throw std::invalid_argument("minor order must be positive");
    }
    if (t > 6) {
        throw std::invalid_argument(
            "chromatic threshold for complete minors is only known for t <= 6");
    }
    return t;
}

std::optional<StrongMinorModel> force_strong_clique_minor(const Digraph& d, int t) {
    int threshold = hadwiger_threshold(t);
    DecompositionCertificate cert = certify_decomposition(d);
    if (cert.quotient_coloring.k < threshold) {
        return std::nullopt;
    }
    auto quotient_minor = find_clique_minor(cert.quotient, t);
    if (!quotient_minor) {
        throw std::logic_error("chromatic threshold promised a complete minor");
    }
    StrongMinorModel outer = promote_to_bioriented(*quotient_minor, cert.model.pattern);
    StrongMinorModel composed = compose_models(outer, cert.model);
    if (!verify_strong_model(composed)) {
        throw std::logic_error("forced model failed verification");
    }
    return composed;
}

StrongMinorModel random_inflation(const Digraph& pattern, int max_branch,
                                  std::uint64_t seed, bool extras) {
    if (max_branch < 1) {
        throw std::invalid_argument("branch sets need at least one vertex");
    }
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % bound); };
    auto coin = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    int t = pattern.vertex_count();
    std::vector<VertexSet> sets(t);
    int n = 0;
    for (int i = 0; i < t; ++i) {
        int size = 1 + pick(max_branch);
        for (int j = 0; j < size; ++j) {
            sets[i].push_back(n++);
        }
    }
    std::set<std::pair<int, int>> arcs;
    for (int i = 0; i < t; ++i) {
        // a random spanning cycle keeps the branch set strongly connected
        VertexSet ring = sets[i];
        std::shuffle(ring.begin(), ring.end(), rng);
        for (std::size_t j = 0; j + 1 < ring.size(); ++j) {
            arcs.emplace(ring[j], ring[j + 1]);
        }
        if (ring.size() > 1) {
            arcs.emplace(ring.back(), ring.front());
        }
        for (int a : sets[i]) {
            for (int b : sets[i]) {
                if (a != b && coin(0.3)) {
                    arcs.emplace(a, b);
                }
            }
        }
    }
    for (auto [u, v] : pattern.arcs()) {
        arcs.emplace(sets[u][pick(static_cast<int>(sets[u].size()))],
                     sets[v][pick(static_cast<int>(sets[v].size()))]);
    }
    if (extras) {
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < t; ++j) {
                if (i != j) {
                    for (int a : sets[i]) {
                        for (int b : sets[j]) {
                            if (coin(0.1)) {
                                arcs.emplace(a, b);
                            }
                        }
                    }
                }
            }
        }
        int spare = pick(3);
        for (int s = 0; s < spare; ++s) {
            int v = n++;
            for (int w = 0; w < v; ++w) {
                if (coin(0.2)) {
                    arcs.emplace(v, w);
                }
                if (coin(0.2)) {
                    arcs.emplace(w, v);
                }
            }
        }
    }
    Digraph host(n, {arcs.begin(), arcs.end()});
    StrongMinorModel model{std::move(host), pattern, std::move(sets)};
    if (!verify_strong_model(model)) {
        throw std::logic_error("random inflation produced an invalid model");
    }
    return model;
}

}  // namespace dirminor

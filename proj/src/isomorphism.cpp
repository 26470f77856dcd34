#include "dirminor/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dirminor {

namespace {

std::vector<std::pair<int, int>> degree_pairs(const Digraph& d) {
    std::vector<std::pair<int, int>> ps(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        ps[v] = {d.in_degree(v), d.out_degree(v)};
    }
    return ps;
}

bool extend(const Digraph& d1, const Digraph& d2,
            const std::vector<std::pair<int, int>>& deg1,
            const std::vector<std::pair<int, int>>& deg2, std::vector<int>& map,
            std::vector<bool>& used, int v) {
    int n = d1.vertex_count();
    if (v == n) {
        return true;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || deg1[v] != deg2[w]) {
            continue;
        }
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (d1.has_arc(u, v) != d2.has_arc(map[u], w) ||
                d1.has_arc(v, u) != d2.has_arc(w, map[u])) {
                ok = false;
            }
        }
        if (!ok) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if (extend(d1, d2, deg1, deg2, map, used, v + 1)) {
            return true;
        }
        used[w] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2) {
    if (d1.vertex_count() != d2.vertex_count() || d1.arc_count() != d2.arc_count()) {
        return std::nullopt;
    }
    auto deg1 = degree_pairs(d1);
    auto deg2 = degree_pairs(d2);
    {
        auto s1 = deg1;
        auto s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) {
            return std::nullopt;
        }
    }
    int n = d1.vertex_count();
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (!extend(d1, d2, deg1, deg2, map, used, 0)) {
        return std::nullopt;
    }
    // Re-verify the bijection in both directions before handing it out.
    for (auto [u, v] : d1.arcs()) {
        if (!d2.has_arc(map[u], map[v])) {
            throw std::logic_error("isomorphism search returned a non-map");
        }
    }
    for (auto [u, v] : d2.arcs()) {
        int pu = -1, pv = -1;
        for (int x = 0; x < n; ++x) {
            if (map[x] == u) pu = x;
            if (map[x] == v) pv = x;
        }
        if (pu < 0 || pv < 0 || !d1.has_arc(pu, pv)) {
            throw std::logic_error("isomorphism search returned a non-map");
        }
    }
    return map;
}

namespace {

std::uint64_t arc_mask(const Digraph& d) {
    int n = d.vertex_count();
    std::uint64_t m = 0;
    for (auto [u, v] : d.arcs()) {
        m |= std::uint64_t{1} << (u * n + v);
    }
    return m;
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && (mask >> (u * n + v) & 1)) {
                out |= std::uint64_t{1} << (perm[u] * n + perm[v]);
            }
        }
    }
    return out;
}

}  // namespace

std::uint64_t canonical_key(const Digraph& d) {
    int n = d.vertex_count();
    if (n > 7) {
        throw std::invalid_argument("canonical_key supports at most 7 vertices");
    }
    std::uint64_t mask = arc_mask(d);
    std::uint64_t best = mask;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        best = std::min(best, permute_mask(mask, perm, n));
    }
    return (std::uint64_t{1} << 56) * static_cast<std::uint64_t>(n) | best;
}

std::vector<Digraph> enumerate_digraphs(int n) {
    if (n < 0 || n > 5) {
        throw std::invalid_argument("enumerate_digraphs supports 0 <= n <= 5");
    }
    // Off-diagonal cells in a fixed order; a subset of them is a digraph.
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v) {
                cells.emplace_back(u, v);
            }
        }
    }
    int nc = static_cast<int>(cells.size());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> reps;  // key, cell mask
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // cell_map[p][i] = index of cells[i] after applying permutation p.
    std::vector<std::vector<int>> cell_map(perms.size(), std::vector<int>(nc));
    std::vector<std::vector<int>> cell_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < nc; ++i) {
        cell_index[cells[i].first][cells[i].second] = i;
    }
    for (std::size_t p = 0; p < perms.size(); ++p) {
        for (int i = 0; i < nc; ++i) {
            cell_map[p][i] = cell_index[perms[p][cells[i].first]][perms[p][cells[i].second]];
        }
    }
    std::vector<bool> seen(std::uint64_t{1} << nc, false);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nc); ++m) {
        if (seen[m]) {
            continue;
        }
        std::uint64_t canon = m;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            std::uint64_t pm = 0;
            for (int i = 0; i < nc; ++i) {
                if (m >> i & 1) {
                    pm |= std::uint64_t{1} << cell_map[p][i];
                }
            }
            seen[pm] = true;
            canon = std::min(canon, pm);
        }
        if (canon == m) {
            reps.emplace_back(canon, m);
        }
    }
    std::sort(reps.begin(), reps.end());
    std::vector<Digraph> out;
    out.reserve(reps.size());
    for (auto [key, m] : reps) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < nc; ++i) {
            if (m >> i & 1) {
                arcs.push_back(cells[i]);
            }
        }
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

}  // namespace dirminor

#include "dirminor/generators.hpp"

#include <random>
#include <stdexcept>

namespace dirminor {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_graph needs n >= 3");
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, std::move(edges));
}

Digraph bidirected_clique(int n) { return biorient(complete_graph(n)); }

Digraph directed_cycle(int n) {
    if (n < 2) {
        throw std::invalid_argument("directed_cycle needs n >= 2");
    }
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(v, (v + 1) % n);
    }
    return Digraph(n, std::move(arcs));
}

Digraph bidirected_cycle(int n) { return biorient(cycle_graph(n)); }

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0,1]");
    }
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && coin(rng) < p) {
                arcs.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1) {
                arcs.emplace_back(u, v);
            } else {
                arcs.emplace_back(v, u);
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph lower_bound_butterfly(int t) {
    if (t < 3) {
        throw std::invalid_argument("lower_bound_butterfly needs t >= 3");
    }
    int n = t + 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool on_five_cycle =
                u < 5 && v < 5 && (v - u == 1 || (u == 0 && v == 4));
            if (!on_five_cycle) {
                edges.emplace_back(u, v);
            }
        }
    }
    return biorient(Graph(n, std::move(edges)));
}

}  // namespace dirminor

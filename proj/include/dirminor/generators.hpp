#pragma once

#include <cstdint>

#include "dirminor/digraph.hpp"

namespace dirminor {

/// Instance generators. The random ones are pure functions of their
/// parameters and seed: equal calls return equal objects.

Graph complete_graph(int n);
Graph cycle_graph(int n);                      // n >= 3
Digraph bidirected_clique(int n);              // arcs both ways in every pair
Digraph directed_cycle(int n);                 // n >= 2; n == 2 is a digon
Digraph bidirected_cycle(int n);               // n >= 3
Graph random_graph(int n, double p, std::uint64_t seed);
Digraph random_digraph(int n, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);

/// Bidirected complement of a 5-cycle inside a clique on t+2 vertices
/// (t >= 3): the biorientation of the complete graph on t+2 vertices with the
/// edges of one 5-cycle removed. For t = 3 this is the bidirected 5-cycle; it
/// has dichromatic number t but no butterfly minor of the bidirected
/// t-clique, witnessing that the additive gap of the clique-minor bound
/// cannot be closed below 2.
Digraph lower_bound_butterfly(int t);

}  // namespace dirminor

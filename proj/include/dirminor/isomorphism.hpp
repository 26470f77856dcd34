#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirminor/digraph.hpp"

namespace dirminor {

/// Arc-preserving bijection from d1 to d2, or nullopt. The returned map f
/// satisfies (u,v) in A(d1) iff (f(u),f(v)) in A(d2); this is re-verified in
/// both directions before returning. A multiset mismatch of (in,out) degree
/// pairs rejects early.
std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2);

/// Canonical key of a digraph with at most 7 vertices: the minimum, over all
/// vertex permutations, of the adjacency matrix packed row-major into the low
/// 49 bits, with the vertex count in the high byte. Equal keys iff isomorphic.
std::uint64_t canonical_key(const Digraph& d);

/// All digraphs on exactly n vertices (0 <= n <= 5), one representative per
/// isomorphism class, ordered by canonical key.
std::vector<Digraph> enumerate_digraphs(int n);

}  // namespace dirminor

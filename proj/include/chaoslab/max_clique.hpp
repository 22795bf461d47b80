#pragma once

#include <cstdint>
#include <vector>

namespace chaoslab {

/// Exact maximum-clique search over graphs with at most 64 vertices.
/// adjacency[v] is the neighbour bitmask of v (diagonal bits ignored,
/// edges must be symmetric). Branch-and-bound with pivoting; exact.
int max_clique_size(const std::vector<std::uint64_t>& adjacency);

/// The lexicographically smallest maximum clique, as sorted vertex
/// indices. Deterministic by construction.
std::vector<int> max_clique(const std::vector<std::uint64_t>& adjacency);

}  // namespace chaoslab

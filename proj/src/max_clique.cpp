#include "chaoslab/max_clique.hpp"

#include <bit>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

struct Searcher {
  const std::vector<std::uint64_t>& adj;

  // Largest clique size reachable inside `cand`, plus `depth` already chosen.
  // Standard Bron–Kerbosch-style expansion with a pivot chosen to minimise
  // branching.
  int best = 0;

  void expand(std::uint64_t cand, int depth) {
    if (cand == 0) {
      if (depth > best) best = depth;
      return;
    }
    if (depth + std::popcount(cand) <= best) return;  // bound

    // Pivot: vertex in cand with the most candidate neighbours.
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t m = cand; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const int deg = std::popcount(cand & adj[v]);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    // Branch only on vertices not adjacent to the pivot.
    std::uint64_t branch = cand & ~adj[pivot];
    std::uint64_t remaining = cand;
    while (branch) {
      const int v = std::countr_zero(branch);
      branch &= branch - 1;
      remaining &= ~(std::uint64_t{1} << v);
      expand(remaining & adj[v], depth + 1);
      if (depth + std::popcount(remaining) <= best) return;
    }
  }
};

void check_input(const std::vector<std::uint64_t>& adjacency) {
  if (adjacency.size() > 64) {
    throw Error(Errc::phase_too_large,
                "exact clique search is limited to 64 vertices");
  }
}

int size_within(const std::vector<std::uint64_t>& adjacency,
                std::uint64_t cand) {
  Searcher s{adjacency};
  s.expand(cand, 0);
  return s.best;
}

}  // namespace

int max_clique_size(const std::vector<std::uint64_t>& adjacency) {
  check_input(adjacency);
  const int n = static_cast<int>(adjacency.size());
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return size_within(adjacency, all);
}

std::vector<int> max_clique(const std::vector<std::uint64_t>& adjacency) {
  check_input(adjacency);
  const int n = static_cast<int>(adjacency.size());
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const int target = size_within(adjacency, all);
  if (target == 0) return {};

  // Rebuild the clique greedily: always take the smallest vertex that still
  // allows a completion of the required size. This pins the output to the
  // lexicographically smallest maximum clique.
  std::vector<int> out;
  std::uint64_t cand = all;
  int need = target;
  while (need > 0) {
    for (std::uint64_t m = cand; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const std::uint64_t next = cand & adjacency[v];
      if (1 + size_within(adjacency, next) >= need) {
        out.push_back(v);
        cand = next;
        --need;
        break;
      }
      cand &= ~(std::uint64_t{1} << v);
    }
  }
  return out;
}

}  // namespace chaoslab

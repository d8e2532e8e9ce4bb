#pragma once

#include <cstdint>

#include "ivc/coloring.hpp"
#include "ivc/graph.hpp"

namespace ivc {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Colors an r-regular bipartite graph with exactly r colors by peeling
/// perfect matchings: color k is the k-th matching removed.
///
/// Throws NotBipartite, NotRegular, or BadParameter when r == 0.
EdgeColoring bipartite_regular_coloring(const Graph& g);

struct ChromaticIndexResult {
    int chi_prime = 0;
    EdgeColoring witness;
    bool class1 = false;
    std::uint64_t nodes = 0;
};

/// Exact chromatic index by exhaustive search: Delta colors first, then
/// Delta + 1. The witness is the first coloring found under the search's fixed
/// edge order. Throws BudgetExceeded when the node budget runs out.
ChromaticIndexResult exact_chromatic_index(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// For regular g: true iff g is class 1, i.e. interval colorable.
/// Throws NotRegular or BudgetExceeded.
bool regular_membership(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace ivc

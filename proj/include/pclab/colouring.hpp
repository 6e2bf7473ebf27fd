#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pclab/graph.hpp"

namespace pclab {

// colours are 1..k; entry 0 means "uncoloured" in partial colourings
using Colouring = std::vector<uint32_t>;

bool colouring_is_proper(const Graph& g, const Colouring& c);

struct ColouringBudget {
  uint32_t max_vertices = 60;
  uint64_t max_nodes = 20000000;
};

// Exact backtracking with saturation-based vertex selection and canonical
// colour symmetry breaking; deterministic. Throws ResourceError on budget.
std::optional<Colouring> is_k_colourable(const Graph& g, uint32_t k,
                                         const ColouringBudget& budget = {});

// Smallest k admitting a proper colouring (minimality is witnessed by the
// failed search at k-1).
uint32_t chromatic_number(const Graph& g, const ColouringBudget& budget = {});

// First-fit in ascending vertex id; used when the exact search is over budget.
Colouring greedy_colouring(const Graph& g);

}  // namespace pclab

#pragma once

#include <cstdint>

#include "pclab/graph.hpp"
#include "pclab/rng.hpp"

namespace pclab {

// Erdos-Renyi G(n, p): each pair drawn independently. Deterministic per seed.
Graph sample_gnp(uint32_t n, double p, uint64_t seed);

// Random d-regular graph via the configuration model: d cells per vertex, a
// uniform perfect matching on the d*n points, rejected until simple. Uniform
// over d-regular simple graphs. Requires d < n and d*n even.
Graph sample_regular(uint32_t n, uint32_t d, uint64_t seed,
                     uint64_t rejection_budget = 1000000, uint64_t* attempts_out = nullptr);

}  // namespace pclab

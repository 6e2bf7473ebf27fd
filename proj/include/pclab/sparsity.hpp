#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pclab/graph.hpp"

namespace pclab {

enum class SparsitySearchMode { exhaustive, connected_exhaustive };

struct SparsityReport {
  bool sparse = true;
  std::optional<std::vector<uint32_t>> witness;  // violating set, if any
  uint32_t l = 0;
  mpq_class eps;
  SparsitySearchMode mode = SparsitySearchMode::connected_exhaustive;
  uint64_t sets_checked = 0;
};

// Decides whether every vertex set U with |U| <= l satisfies
// |E(U)| <= (1+eps)|U|, exactly (eps is a rational). A violating set always
// has a connected subset with at least as large an edge/vertex ratio, so the
// default search enumerates connected sets only; for n <= 20 all subsets are
// enumerated instead. Throws ResourceError when set_budget is exhausted.
SparsityReport check_sparsity(const Graph& g, uint32_t l, const mpq_class& eps,
                              uint64_t set_budget = 50000000);

mpq_class parse_eps(const std::string& s);  // "a/b" or decimal like "0.45"

}  // namespace pclab

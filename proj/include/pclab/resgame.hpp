#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pclab/graph.hpp"
#include "pclab/poly_json.hpp"

namespace pclab {

// Prover-adversary width game for k-colourability. The prover queries or
// forgets vertex colours and may remember at most `width` of them; the
// adversary keeps a proper colouring of the induced subgraph on the
// resolution closure of the remembered vertices and answers from it,
// recolouring only the newly absorbed region on each extension.
class ColourGame {
 public:
  ColourGame(const Graph& g, uint32_t k, uint32_t width);

  struct QueryResult {
    bool ok = true;          // false: the adversary got stuck, the prover wins
    uint32_t colour = 0;     // assigned colour when ok
    Json witness;            // stuck configuration when not ok
  };

  QueryResult query(uint32_t v);
  void forget(uint32_t v);

  const std::map<uint32_t, uint32_t>& memory() const { return memory_; }
  size_t memory_size() const { return memory_.size(); }
  uint32_t width() const { return width_; }
  size_t closure_size() const { return chi_.size(); }

  void assert_invariants() const;

 private:
  bool extend_to(const std::vector<uint32_t>& target, uint32_t queried, Json* witness);

  const Graph& g_;
  uint32_t k_;
  uint32_t width_;
  std::map<uint32_t, uint32_t> memory_;  // prover's view
  std::map<uint32_t, uint32_t> chi_;     // adversary colouring on the closure
};

enum class ProverKind { random, greedy_conflict };

struct GameOutcome {
  bool adversary_survived = true;
  uint64_t rounds_played = 0;
  std::optional<Json> witness;  // verifies as an unextendable partial colouring
};

GameOutcome play(const Graph& g, uint32_t k, uint32_t width, ProverKind prover, uint64_t rounds,
                 uint64_t seed, std::string* transcript = nullptr);

// Re-check a prover-won witness: every colour of the palette must conflict.
bool witness_is_improper(const Graph& g, uint32_t k, const Json& witness);

}  // namespace pclab

#include "pclab/resgame.hpp"

#include <algorithm>
#include <sstream>

#include "pclab/closure.hpp"
#include "pclab/colouring.hpp"
#include "pclab/errors.hpp"
#include "pclab/rng.hpp"

namespace pclab {

ColourGame::ColourGame(const Graph& g, uint32_t k, uint32_t width)
    : g_(g), k_(k), width_(width) {
  require(k >= 1, "colour count must be >= 1");
}

void ColourGame::assert_invariants() const {
  check_invariant(memory_.size() <= width_, "prover memory exceeds the width");
  std::vector<uint32_t> domain;
  for (const auto& [v, c] : memory_) domain.push_back(v);
  auto cl = resolution_closure(g_, domain);
  check_invariant(cl.size() == chi_.size(), "colouring domain differs from the closure");
  for (uint32_t v : cl) check_invariant(chi_.count(v) == 1, "closure vertex uncoloured");
  for (auto [u, v] : g_.edges()) {
    auto iu = chi_.find(u);
    auto iv = chi_.find(v);
    if (iu != chi_.end() && iv != chi_.end())
      check_invariant(iu->second != iv->second, "adversary colouring is improper");
  }
  for (const auto& [v, c] : memory_) {
    auto it = chi_.find(v);
    check_invariant(it != chi_.end() && it->second == c,
                    "memory is not the restriction of the adversary colouring");
  }
}

bool ColourGame::extend_to(const std::vector<uint32_t>& target, uint32_t queried,
                           Json* witness) {
  std::vector<uint32_t> fresh;
  for (uint32_t v : target)
    if (!chi_.count(v)) fresh.push_back(v);
  if (fresh.empty()) return true;

  // Peel the new region: repeatedly remove a vertex with at most two
  // neighbours among the remaining new vertices (smallest id first), then
  // colour in reverse removal order. On sparse inputs every step sees at
  // most 2 coloured new neighbours plus at most 1 closure neighbour.
  std::vector<uint32_t> remaining = fresh;
  std::vector<uint32_t> peel_order;
  while (!remaining.empty()) {
    std::vector<char> in_rem(g_.n(), 0);
    for (uint32_t v : remaining) in_rem[v] = 1;
    uint32_t chosen = remaining.front();
    bool found = false;
    for (uint32_t v : remaining) {
      uint32_t deg = 0;
      for (uint32_t w : g_.neighbours(v))
        if (in_rem[w]) ++deg;
      if (deg <= 2) {
        chosen = v;
        found = true;
        break;
      }
    }
    if (!found) chosen = remaining.front();  // density too high; try anyway
    peel_order.push_back(chosen);
    remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
  }

  std::map<uint32_t, uint32_t> added;
  for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it) {
    uint32_t v = *it;
    std::vector<char> blocked(k_ + 1, 0);
    for (uint32_t w : g_.neighbours(v)) {
      auto jt = chi_.find(w);
      if (jt != chi_.end()) blocked[jt->second] = 1;
      auto at = added.find(w);
      if (at != added.end()) blocked[at->second] = 1;
    }
    uint32_t colour = 0;
    for (uint32_t c = 1; c <= k_; ++c) {
      if (!blocked[c]) {
        colour = c;
        break;
      }
    }
    if (colour == 0) {
      if (witness) {
        Json assignment = Json::array();
        for (const auto& [u, c] : chi_)
          assignment.push_back(Json{{"vertex", u}, {"colour", c}});
        for (const auto& [u, c] : added)
          assignment.push_back(Json{{"vertex", u}, {"colour", c}});
        *witness = Json{{"stuck_vertex", v}, {"queried", queried}, {"colouring", assignment}};
      }
      return false;
    }
    added[v] = colour;
  }
  for (const auto& [v, c] : added) chi_[v] = c;
  return true;
}

ColourGame::QueryResult ColourGame::query(uint32_t v) {
  require(v < g_.n(), "query outside the graph");
  require(memory_.size() < width_, "query with a full memory");
  QueryResult res;
  auto it = chi_.find(v);
  if (it == chi_.end()) {
    std::vector<uint32_t> domain;
    for (const auto& [u, c] : memory_) domain.push_back(u);
    domain.push_back(v);
    auto cl = resolution_closure(g_, domain);
    if (!extend_to(cl, v, &res.witness)) {
      res.ok = false;
      return res;
    }
    it = chi_.find(v);
    check_invariant(it != chi_.end(), "extension missed the queried vertex");
  }
  memory_[v] = it->second;
  res.colour = it->second;
  return res;
}

void ColourGame::forget(uint32_t v) {
  auto it = memory_.find(v);
  require(it != memory_.end(), "forgetting a vertex that is not remembered");
  memory_.erase(it);
  std::vector<uint32_t> domain;
  for (const auto& [u, c] : memory_) domain.push_back(u);
  auto cl = resolution_closure(g_, domain);
  std::map<uint32_t, uint32_t> shrunk;
  for (uint32_t u : cl) {
    auto jt = chi_.find(u);
    check_invariant(jt != chi_.end(), "shrunken closure escapes the old colouring");
    shrunk[u] = jt->second;
  }
  chi_ = std::move(shrunk);
}

namespace {

struct ProverMove {
  bool is_query = true;
  uint32_t vertex = 0;
};

ProverMove random_move(const ColourGame& game, const Graph& g, Rng& rng) {
  std::vector<uint32_t> unremembered;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (!game.memory().count(v)) unremembered.push_back(v);
  bool must_forget = game.memory_size() >= game.width() || unremembered.empty();
  bool want_forget =
      !game.memory().empty() && (must_forget || rng.below(4) == 0);
  if (want_forget) {
    size_t i = rng.below(game.memory().size());
    auto it = game.memory().begin();
    std::advance(it, i);
    return {false, it->first};
  }
  return {true, unremembered[rng.below(unremembered.size())]};
}

ProverMove greedy_move(const ColourGame& game, const Graph& g) {
  if (game.memory_size() >= game.width()) {
    // forget the remembered vertex with the fewest remembered neighbours
    uint32_t best = game.memory().begin()->first;
    int best_score = std::numeric_limits<int>::max();
    for (const auto& [v, c] : game.memory()) {
      int score = 0;
      for (uint32_t w : g.neighbours(v))
        if (game.memory().count(w)) ++score;
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    return {false, best};
  }
  // query the unremembered vertex with the most remembered neighbours
  uint32_t best = g.n();
  int best_score = -1;
  for (uint32_t v = 0; v < g.n(); ++v) {
    if (game.memory().count(v)) continue;
    int score = 0;
    for (uint32_t w : g.neighbours(v))
      if (game.memory().count(w)) ++score;
    if (score > best_score) {
      best_score = score;
      best = v;
    }
  }
  if (best == g.n()) {
    // everything is remembered; forget the first vertex
    return {false, game.memory().begin()->first};
  }
  return {true, best};
}

}  // namespace

GameOutcome play(const Graph& g, uint32_t k, uint32_t width, ProverKind prover, uint64_t rounds,
                 uint64_t seed, std::string* transcript) {
  GameOutcome outcome;
  ColourGame game(g, k, width);
  Rng rng(seed);
  std::ostringstream log;
  for (uint64_t round = 1; round <= rounds; ++round) {
    outcome.rounds_played = round;
    if (width == 0 || g.n() == 0) {
      // nothing can ever be remembered
      outcome.rounds_played = rounds;
      break;
    }
    ProverMove move = prover == ProverKind::random ? random_move(game, g, rng)
                                                   : greedy_move(game, g);
    Json entry;
    entry["round"] = round;
    entry["move"] = Json{{"type", move.is_query ? "query" : "forget"}, {"vertex", move.vertex}};
    if (move.is_query) {
      auto res = game.query(move.vertex);
      if (!res.ok) {
        outcome.adversary_survived = false;
        outcome.witness = res.witness;
        entry["response"] = nullptr;
        entry["closure_size"] = game.closure_size();
        if (transcript) {
          log << entry.dump() << "\n";
          *transcript = log.str();
        }
        return outcome;
      }
      entry["response"] = res.colour;
    } else {
      game.forget(move.vertex);
      entry["response"] = nullptr;
    }
    entry["closure_size"] = game.closure_size();
    if (transcript) log << entry.dump() << "\n";
    game.assert_invariants();
  }
  outcome.adversary_survived = true;
  if (transcript) *transcript = log.str();
  return outcome;
}

bool witness_is_improper(const Graph& g, uint32_t k, const Json& witness) {
  uint32_t stuck = witness.at("stuck_vertex").get<uint32_t>();
  std::map<uint32_t, uint32_t> colouring;
  for (const auto& e : witness.at("colouring"))
    colouring[e.at("vertex").get<uint32_t>()] = e.at("colour").get<uint32_t>();
  // every palette colour must be blocked at the stuck vertex
  for (uint32_t c = 1; c <= k; ++c) {
    bool conflict = false;
    for (uint32_t w : g.neighbours(stuck)) {
      auto it = colouring.find(w);
      if (it != colouring.end() && it->second == c) conflict = true;
    }
    if (!conflict) return false;
  }
  return true;
}

}  // namespace pclab

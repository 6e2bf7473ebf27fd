#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pclab/closure.hpp"
#include "pclab/colouring.hpp"
#include "pclab/encode.hpp"
#include "pclab/graph.hpp"
#include "pclab/groebner.hpp"
#include "pclab/poly_json.hpp"

namespace pclab {

// Everything the support map and the pseudo-reduction need: the instance, the
// high-degree cover, a proper colouring of the residual graph, and the vertex
// order that puts the cover first and then the colour classes in increasing
// order. Decreasing paths outside the cover then have at most c vertices.
struct FrameworkContext {
  ColInstance instance;
  uint32_t delta = 0;
  std::vector<uint32_t> t_delta;   // sorted
  Colouring residual_colouring;    // 0 on t_delta vertices
  uint32_t c = 0;                  // colours used on the residual graph
  bool c_exact = true;             // false when the greedy fallback was used
  VertexOrder vertex_order = VertexOrder::identity(0);
  MonomialOrder monomial_order = MonomialOrder::identity(0, 1);

  const Graph& graph() const { return instance.graph; }
  uint32_t k() const { return instance.k; }
  const Field& field() const { return instance.field; }
};

FrameworkContext build_context(const Graph& g, uint32_t k, const Field& field, uint32_t delta,
                               const ColouringBudget& budget = {});

// closure(V(m) union T_Delta) under the context order
std::vector<uint32_t> monomial_closure(const FrameworkContext& ctx, const Monomial& m);

// The axioms associated with a monomial: the full colouring system of the
// induced subgraph on its closure, with global variable names.
struct SupportSet {
  std::vector<uint32_t> vertices;  // the monomial closure, sorted
  std::vector<Polynomial> axioms;  // vertex-sum, conflict, edge (in this order)
  size_t boolean_count = 0;        // Boolean axioms on these vertices (structural)
};

std::vector<Polynomial> col_axioms_on_vertices(const Graph& g, uint32_t k, const Field& field,
                                               const std::vector<uint32_t>& vertices);
SupportSet support(const FrameworkContext& ctx, const Monomial& m);

// Monomial-wise reduction modulo the ideal of the monomial's support,
// extended linearly. Caches closures and Groebner bases; safe to share
// across threads.
class PseudoReducer {
 public:
  explicit PseudoReducer(const FrameworkContext& ctx) : ctx_(ctx) {}

  const FrameworkContext& ctx() const { return ctx_; }
  std::vector<uint32_t> closure_of(const Monomial& m);
  const GroebnerBasis& basis_for(const std::vector<uint32_t>& closure_vertices);
  Polynomial reduce_monomial(const Monomial& m);
  Polynomial operator()(const Polynomial& p);

 private:
  const FrameworkContext& ctx_;
  std::mutex mu_;
  std::map<std::vector<uint32_t>, std::vector<uint32_t>> closure_cache_;
  std::map<std::vector<uint32_t>, std::unique_ptr<GroebnerBasis>> basis_cache_;
};

Polynomial pseudo_reduce(PseudoReducer& reducer, const Polynomial& p);

// ---------------------------------------------------------------------------
// verification report
// ---------------------------------------------------------------------------

struct CheckStat {
  uint64_t checked = 0;
  uint64_t failures = 0;
  bool pass() const { return failures == 0; }
};

struct FrameworkReport {
  uint32_t degree = 0;
  uint64_t seed = 0;
  uint64_t samples = 0;
  bool exhaustive = false;  // the monomial pool covered all monomials of degree <= D

  CheckStat support_item1, support_item2, support_item3;
  CheckStat claim_axiom_monomials;   // S(m_i) within S(leading monomial) for axioms
  CheckStat claim_multilinear;       // vars(m') in vars(m) forces S(m') in S(m)
  CheckStat claim_reduction;         // monomials of R(m) keep their support inside S(m)
  CheckStat satisfiability;
  CheckStat reducibility;
  CheckStat pr_one, pr_axioms, pr_commute;

  std::vector<Json> counterexamples;

  bool support_pass() const {
    return support_item1.pass() && support_item2.pass() && support_item3.pass() &&
           claim_axiom_monomials.pass() && claim_multilinear.pass() && claim_reduction.pass();
  }
  bool conditions_pass() const { return satisfiability.pass() && reducibility.pass(); }
  bool pseudo_reduction_pass() const {
    return pr_one.pass() && pr_axioms.pass() && pr_commute.pass();
  }
  bool all_pass() const {
    return support_pass() && conditions_pass() && pseudo_reduction_pass();
  }
};

Json framework_report_to_json(const FrameworkReport& report);

struct VerifyOptions {
  uint64_t samples = 2000;
  uint64_t exhaustive_pool_limit = 100000;
  unsigned jobs = 1;
  ColouringBudget colouring_budget = {};
};

// The sampled monomial pool all three verifiers share: exhaustive when the
// count of monomials with degree <= D is small, otherwise seeded uniform
// draws biased to include every degree-one monomial and every axiom leading
// monomial.
struct MonomialPool {
  std::vector<Monomial> monomials;
  bool exhaustive = false;
};
MonomialPool sample_monomial_pool(const FrameworkContext& ctx, uint32_t degree, uint64_t samples,
                                  uint64_t seed, uint64_t exhaustive_limit);

void verify_support(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                    uint64_t seed, const VerifyOptions& options, FrameworkReport& report);
void verify_conditions(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                       uint64_t seed, const VerifyOptions& options, FrameworkReport& report);
void verify_pseudo_reduction(PseudoReducer& reducer, uint32_t degree, const MonomialPool& pool,
                             uint64_t seed, const VerifyOptions& options,
                             FrameworkReport& report);

// Runs all three verifiers on a fresh report.
FrameworkReport verify_framework(PseudoReducer& reducer, uint32_t degree,
                                 const VerifyOptions& options, uint64_t seed);

// ---------------------------------------------------------------------------
// star colouring and the boundary substitution
// ---------------------------------------------------------------------------

class UncolourableError : public DomainError {
 public:
  UncolourableError(const std::string& what, std::vector<uint32_t> vertices)
      : DomainError(what), uncolourable_vertices(std::move(vertices)) {}
  std::vector<uint32_t> uncolourable_vertices;
};

// A proper 3-colouring of G[U minus (W and its U-neighbours)] in which the
// neighbourhood of every boundary vertex is monochromatic, built by
// contracting each boundary star and colouring the contraction.
std::map<uint32_t, uint32_t> star_colouring(const Graph& g, const std::vector<uint32_t>& u_set,
                                            const std::vector<uint32_t>& w_set, uint32_t delta,
                                            const ColouringBudget& budget = {});

// The variable substitution sending the colouring system of G[U] into the
// ideal of G[W]: far vertices are pinned to the star colouring, each boundary
// vertex is expressed through its unique W-neighbour using its two free
// colours (smallest indices first).
std::map<Variable, Polynomial> substitution_rho(const FrameworkContext& ctx,
                                                const std::vector<uint32_t>& u_set,
                                                const std::vector<uint32_t>& w_set,
                                                const ColouringBudget& budget = {});

// ---------------------------------------------------------------------------
// closed-form predictions
// ---------------------------------------------------------------------------

// l / (50 * delta^(c-1)) - t_delta_size, as an exact rational
mpq_class predict_degree(const mpq_class& l, uint32_t delta, uint32_t c, uint64_t t_delta_size);
// (D - d)^2 / n; the constant inside the asymptotic bound is not computed
mpq_class implied_size_exponent(const mpq_class& refutation_degree, const mpq_class& axiom_degree,
                                uint64_t n_variables);
// symbolic degree bound for random regular graphs; C has no computable value
std::string regular_degree_form(uint32_t d);

}  // namespace pclab

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pclab/groebner.hpp"
#include "pclab/order.hpp"
#include "pclab/poly_json.hpp"
#include "pclab/polynomial.hpp"

namespace pclab {

struct PcOptions {
  uint64_t monomial_budget = 2000000;
  bool build_certificate = true;
  // Disables the bit-packed GF(2) rows; used by the differential tests.
  bool force_generic = false;
};

struct PcDegreeResult {
  bool refutable = false;
  uint32_t degree_tried = 0;
  uint64_t span_dimension = 0;
  // Set when some axiom has degree above the budget, which makes the
  // decision vacuous (the degree-D system cannot even state the axioms).
  bool vacuous = false;
  // JSON list of rule applications deriving 1; present iff refutable and
  // certificates were requested.
  std::optional<Json> certificate;
};

// Decides degree-D polynomial calculus refutability in the multilinear
// quotient (Boolean axioms are free). V starts as the span of the axioms and
// is closed under q -> x*q for every q in V with deg(x*q) <= D. Because the
// quotient collapses x*x, a degree-D element q can have deg(x*q) <= D even
// when products of its basis representatives overflow the budget, so each
// closure step first restricts V to the subspace with no degree-D monomial
// free of x and only then multiplies a basis of that subspace. Sound and
// complete for degree-D PC.
PcDegreeResult pc_degree_refutable(const std::vector<Polynomial>& axioms, uint32_t degree,
                                   const Field& field, const MonomialOrder& ord,
                                   const PcOptions& options = {});

// Smallest D <= d_max with a degree-D refutation, sweeping upward from the
// maximum axiom degree. Each hit is spot-checked for monotonicity at D+1.
std::optional<uint32_t> min_refutation_degree(const std::vector<Polynomial>& axioms,
                                              const Field& field, const MonomialOrder& ord,
                                              uint32_t d_max, const PcOptions& options = {});

// Independent rule checker: re-executes a certificate using plain polynomial
// arithmetic and verifies that every step is an axiom, a multiplication by a
// variable, or a linear combination of earlier steps, that every
// intermediate polynomial has degree <= degree, and that the final step is
// the constant 1.
bool replay_certificate(const std::vector<Polynomial>& axioms, const Field& field,
                        const Json& certificate, uint32_t degree);

}  // namespace pclab

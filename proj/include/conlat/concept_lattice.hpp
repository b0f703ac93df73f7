#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conlat/classification.hpp"
#include "conlat/galois.hpp"
#include "conlat/order.hpp"

namespace conlat {

/// Extent/intent pair closed under double derivation in its context.
struct FormalConcept {
  IdxVec extent;
  IdxVec intent;

  bool operator==(const FormalConcept& o) const {
    return extent == o.extent && intent == o.intent;
  }
};

/// Concept order with the instance/type embeddings. Built by clg(); the
/// fields are open so tests can assemble degenerate lattices by hand.
struct ConceptLattice {
  Classification context;
  std::vector<FormalConcept> concepts;
  Preorder order;
  IdxVec iota_elem;  // instance -> smallest concept containing it
  IdxVec tau_elem;   // type -> largest concept carrying it

  int size() const { return static_cast<int>(concepts.size()); }

  // Relational extent/intent of a concept: {x | iota(x) <= c} and
  // {y | c <= tau(y)}. Coincide with the stored fields for clg output.
  IdxVec rel_extent(Idx c) const;
  IdxVec rel_intent(Idx c) const;
};

// All formal concepts, sorted by extent bitmask ascending; equals the
// brute-force filter over all subset pairs.
std::vector<FormalConcept> concepts(const Classification& a);

// The concept lattice of a classification, with every structural invariant
// asserted (poset, complete lattice, density of the embeddings).
ConceptLattice clg(const Classification& a);

// Meet/join by the extent/intent formulas, cross-checked against the order.
FormalConcept lattice_extremum(const ConceptLattice& l, const IdxVec& cs,
                               Extremum kind);

// iota(X) = (closure of X, X-derivation) = join of the instance concepts;
// tau(Y) dually. Both characterizations are asserted equal.
FormalConcept subset_generators(const ConceptLattice& l, Side side, const IdxVec& s);

// The extent reflection powerset(inst) <-> order and the intent coreflection
// order <-> powerset(typ) opposite; their composite equals the derivation
// connection of the underlying classification.
std::pair<GaloisConnection, GaloisConnection> extent_intent_adjunctions(
    const ConceptLattice& l);

// Underlying classification: x incident to y iff iota(x) <= tau(y).
Classification clsn(const ConceptLattice& l);

/// Concept lattice morphism: a Galois connection between the concept orders
/// (in the reverse direction) plus instance/type functions preserving the
/// embeddings.
struct ConceptMorphism {
  ConceptLattice source;  // L1
  ConceptLattice target;  // L2
  IdxVec left;            // concepts(L2) -> concepts(L1)
  IdxVec right;           // concepts(L1) -> concepts(L2)
  IdxVec inst_map;        // inst(L2) -> inst(L1)
  IdxVec typ_map;         // typ(L1) -> typ(L2)

  GaloisConnection adjoint() const;  // lat(L2) <-> lat(L1)
};

// Validates the adjoint pair, instance/type preservation and continuity.
ConceptMorphism check_concept_morphism(ConceptMorphism h);

// Image of an infomorphism under clg; passes check_concept_morphism.
ConceptMorphism clg_morphism(const Infomorphism& f);

struct RoundTrip {
  ConceptLattice rebuilt;  // clg(clsn(l))
  IdxVec forward;          // rebuilt concept -> element of l
  IdxVec backward;         // element of l -> rebuilt concept
};

// The mutually inverse order-isomorphisms between clg(clsn(l)) and l.
RoundTrip roundtrip_iso(const ConceptLattice& l);

struct DensityReport {
  IdxVec join_violations;  // concepts not reachable as joins of instance concepts
  IdxVec meet_violations;
  bool ok() const { return join_violations.empty() && meet_violations.empty(); }
};

DensityReport density_check(const ConceptLattice& l);

/// Theories (type subsets) under entailment: the kernel through which the
/// intent coreflection factors. Theory indices are type-subset bitmasks.
struct TheoryLattice {
  std::vector<std::string> types;
  Preorder entailment;                // carrier: all type subsets
  std::vector<std::uint32_t> closure; // per theory bitmask
  GaloisConnection lift;              // order <-> theories
  GaloisConnection clsr;              // theories <-> powerset(typ) opposite
};

TheoryLattice theories(const ConceptLattice& l);

// Transposed lattice: instances and types swapped, order reversed.
ConceptLattice transpose(const ConceptLattice& l);

}  // namespace conlat

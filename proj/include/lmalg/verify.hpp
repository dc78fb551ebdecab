#pragma once

#include <random>
#include <string>
#include <vector>

#include "lmalg/construct.hpp"
#include "lmalg/lm.hpp"
#include "lmalg/mvn.hpp"
#include "lmalg/report.hpp"
#include "lmalg/stone.hpp"

namespace lmalg {

// A named algebra plus element labels for witness rendering.
struct lm_instance {
  std::string name;
  lm_algebra alg;
  std::vector<std::string> names;
};

// Instance families used by the suites. Tuple families silently skip
// (atoms, n) combinations whose carrier would exceed the construction cap.
std::vector<lm_instance> canonical_family(int max_n);
std::vector<lm_instance> monotone_family(int max_atoms, int max_n);
std::vector<lm_instance> disjoint_family(int max_atoms, int max_n);
std::vector<lm_instance> sigma_family(int max_atoms, int max_n);

// Every symmetric generator assignment over the base (positions i and n-i
// share a value; each free position ranges over the whole carrier).
std::vector<ideal_sequence> symmetric_objects(const boolean_algebra& base, int n);

// Every space on `point_count` named points with symmetric opens.
std::vector<finite_space> all_spaces(int point_count, int n);

// Copies the algebra and rewrites one uniformly chosen table cell to a
// different in-range value.
lm_algebra mutate_one_entry(const lm_algebra& a, std::mt19937& rng);

// The chains satisfy all three axiom systems and their derived
// consequences; every single-cell mutant violates both phi-side systems
// (and the j system for j-form mutants), with matching verdicts.
axiom_report verify_axiom_systems(int max_n, int mutants, unsigned seed);

// Converting between the two signatures preserves the axioms and round-trips
// to the identical tables on every family instance.
axiom_report verify_definition_equivalence(int canonical_n, int tuple_atoms, int tuple_n,
                                           int sigma_atoms, int sigma_n);

// Both tuple algebras have (n+1)^atoms elements, exhibited by an explicit
// mutual bijection.
axiom_report verify_cardinality(int max_atoms, int max_n);

// Unit and counit exist and both triangle identities hold pointwise.
axiom_report verify_adjunction(int canonical_n, int tuple_atoms, int tuple_n,
                               int sigma_atoms, int sigma_n);

// The two functors compose to the identity up to canonical isomorphism, on
// the algebra side (with naturality on seeded arrows) and the object side.
axiom_report verify_cat_equivalence(int max_atoms, int max_n, unsigned seed);

// The published closed forms agree with the transported operations, and the
// all-starred star formula disagrees exactly when it should.
axiom_report verify_closed_forms(int max_atoms, int max_n);

// Spectrum and clopen functors invert each other on objects, arrows and
// membership relations.
axiom_report verify_stone_duality(int max_atoms, int max_n, unsigned seed);

// Chains satisfy the MV laws and their own variety axioms; the 4-element
// chain fails the 3-valued axioms; the generator condition behaves as
// expected, including the pinned failing instance at n = 6.
axiom_report verify_mv(int max_chain_n, int proper_atoms, int proper_n);

// Chain-valued representation: one component per center atom, jointly
// injective; on the full monotone algebras it is onto the product.
axiom_report verify_representation(int canonical_n, int tuple_atoms, int tuple_n,
                                   int sigma_atoms, int sigma_n);

// suite: "all", "adjunction", "equivalence", "duality" or "mv".
// Throws std::invalid_argument for anything else.
axiom_report run_suite(const std::string& suite, int max_atoms, int max_n, unsigned seed,
                       int mutants);

}  // namespace lmalg

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmalg/boolalg.hpp"
#include "lmalg/report.hpp"

namespace lmalg {

// Which family of unary operations the tables encode: the monotone family
// (phi_1 <= ... <= phi_n) or the pairwise-disjoint family (J_1, ..., J_n).
enum class lm_signature { phi, j };

// Finite (n+1)-valued Lukasiewicz-Moisil algebra as explicit operation
// tables over a carrier of indices 0..size-1. All values are immutable;
// operations on algebras are pure functions returning new values.
struct lm_algebra {
  int n = 1;              // number of unary operations
  std::size_t size = 0;   // carrier cardinality
  lm_signature sig = lm_signature::phi;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::uint32_t> join_table;   // size*size, row-major
  std::vector<std::uint32_t> meet_table;   // size*size, row-major
  std::vector<std::uint32_t> star_table;   // size
  std::vector<std::uint32_t> unary_table;  // n*size: row k-1 holds op k

  std::size_t join(std::size_t a, std::size_t b) const { return join_table[a * size + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_table[a * size + b]; }
  std::size_t star(std::size_t a) const { return star_table[a]; }
  // k is 1-based, matching the usual phi_k / J_k numbering.
  std::size_t unary(int k, std::size_t a) const {
    return unary_table[(static_cast<std::size_t>(k) - 1) * size + a];
  }
  bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }
};

// Structural sanity: table shapes, entries in range, zero != one unless the
// carrier is a point. Throws invariant_error.
void validate_lm_tables(const lm_algebra& alg);

// The (n+1)-element chain 0 < 1/n < ... < 1 with x* = 1-x and
// phi_i(j/n) = 0 when i+j < n+1, else 1. Signature phi.
lm_algebra canonical_algebra(int n, int max_n = 16);

// Display names "0", "1/n", ..., "1" for the chain carrier.
std::vector<std::string> canonical_names(int n);

enum class lm_system {
  l_system,  // De Morgan laws + L1..L6 (determination principle)
  l_alt,     // De Morgan laws + L1..L5 + L7 + L8
  j_system,  // De Morgan laws + J1..J6
};

// Exhaustive check of the chosen axiom system over the whole carrier.
// The signature tag must match the system (invariant_error otherwise).
// Element witnesses render through `names` when provided.
axiom_report check_axioms(const lm_algebra& alg, lm_system system,
                          const std::vector<std::string>* names = nullptr);

// Consequences of the axioms, checked directly. For phi: the five lemma
// properties (the order-characterization item in both its reconstructed and
// its literally-printed reading, the latter advisory) plus the equivalence
// of the three Boolean-center characterizations. For j: pairwise
// disjointness of the J family.
axiom_report check_derived_props(const lm_algebra& alg,
                                 const std::vector<std::string>* names = nullptr);

// Signature conversions. J_n := phi_1, J_i := phi_{n-i+1} ^ phi_{n-i}* and
// phi_i := J_{n-i+1} v ... v J_n. With `validate` the input is required to
// pass its axiom system first (invariant_error otherwise). Lattice tables
// are shared; only the unary family and the tag change.
lm_algebra phi_to_j(const lm_algebra& alg, bool validate = true);
lm_algebra j_to_phi(const lm_algebra& alg, bool validate = true);

// The complemented elements {x : x v x* = 1} with an explicit isomorphism
// onto a powerset algebra built from the center's atoms.
struct center_view {
  std::vector<std::size_t> elements;  // carrier indices, ascending
  std::vector<std::size_t> atoms;     // minimal nonzero central elements
  boolean_algebra algebra;            // powerset avatar, atom i <-> atoms[i]
  std::vector<elem> masks;            // masks[k] = avatar image of elements[k]

  bool is_central(std::size_t carrier_index) const;
  elem mask_of(std::size_t carrier_index) const;      // throws if not central
  std::size_t carrier_of(elem mask) const;            // inverse direction

 private:
  friend center_view boolean_center(const lm_algebra&);
  std::unordered_map<std::size_t, elem> mask_by_element_;
  std::vector<std::size_t> element_by_mask_;
};

// Computes the center and verifies it is a Boolean algebra isomorphic to
// the powerset of its atoms (closure under all operations, bijectivity,
// operation preservation). Throws verification_error when the input is not
// actually an LM algebra.
center_view boolean_center(const lm_algebra& alg);

// Smallest subalgebra containing `seed` (and 0, 1), closed under join,
// meet, star and the unary family. `inclusion` maps sub-carrier indices to
// parent indices, ascending.
struct sub_algebra {
  lm_algebra alg;
  std::vector<std::size_t> inclusion;
};

sub_algebra subalgebra_generated(const lm_algebra& alg, const std::vector<std::size_t>& seed);

// Checks that `map` (source carrier -> target carrier) preserves 0, 1,
// join, meet, star and every unary operation. Signatures and n must match.
axiom_report validate_lm_hom(const lm_algebra& source, const lm_algebra& target,
                             std::span<const std::size_t> map,
                             const std::vector<std::string>* source_names = nullptr);

// Moisil-style representation: one chain-valued component per ultrafilter
// of the center. Component u sends x to i/n where i counts the unary
// values phi_j(x) lying in u. Construction verifies every component is an
// LM morphism onto a subalgebra of the chain and that the combined map is
// injective; failures raise verification_error.
struct moisil_representation {
  lm_algebra target;                                  // canonical_algebra(n)
  std::vector<std::size_t> center_atoms;              // carrier indices, one per component
  std::vector<std::vector<std::size_t>> components;   // carrier -> chain index
};

// Requires signature phi and a nontrivial center (invariant_error otherwise).
moisil_representation moisil_represent(const lm_algebra& alg);

}  // namespace lmalg

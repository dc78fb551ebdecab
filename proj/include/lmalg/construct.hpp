#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmalg/boolalg.hpp"
#include "lmalg/lm.hpp"
#include "lmalg/report.hpp"

namespace lmalg {

// Increasing chain x_1 <= x_2 <= ... <= x_n in a Boolean algebra.
struct monotone_tuple {
  std::vector<elem> entries;
};

// Pairwise-disjoint family y_1, ..., y_n in a Boolean algebra.
struct disjoint_tuple {
  std::vector<elem> entries;
};

monotone_tuple make_monotone(const boolean_algebra& b, std::vector<elem> entries);
disjoint_tuple make_disjoint(const boolean_algebra& b, std::vector<elem> entries);

// The mutually inverse coordinate changes between the two tuple shapes:
// partial joins y |-> (y_1, y_1 v y_2, ...) one way and successive
// differences x |-> (x_1, x_2 ^ x_1*, ...) the other.
monotone_tuple to_monotone(const boolean_algebra& b, const disjoint_tuple& y);
disjoint_tuple to_disjoint(const boolean_algebra& b, const monotone_tuple& x);

struct ideal_sequence;

// An LM algebra whose carrier is a family of n-tuples over a Boolean base,
// listed in lexicographic order so indices are reproducible.
struct tuple_algebra {
  lm_algebra alg;
  boolean_algebra base;
  std::vector<std::vector<elem>> tuples;

  std::size_t index_of(const std::vector<elem>& t) const;  // verification_error if absent
  std::optional<std::size_t> try_index(const std::vector<elem>& t) const;
  std::string render(std::size_t index) const;  // "(p, {p,q})"
  std::vector<std::string> names() const;

 private:
  friend tuple_algebra monotone_algebra(const boolean_algebra&, int, std::size_t);
  friend tuple_algebra disjoint_algebra(const boolean_algebra&, int, std::size_t);
  friend tuple_algebra sigma_of(const ideal_sequence&);
  std::uint64_t pack(const std::vector<elem>& t) const;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// All monotone n-tuples over `base` with componentwise lattice operations,
// reversal-complement star and constant-tuple unary family; signature phi.
// Carrier size is (n+1)^atoms and must not exceed `max_carrier`.
tuple_algebra monotone_algebra(const boolean_algebra& base, int n,
                               std::size_t max_carrier = 4096);

// All pairwise-disjoint n-tuples with every operation transported through
// the tuple bijection from the monotone algebra; signature j. Construction
// verifies the closed forms for the unary family and for join and fails
// with verification_error if they ever disagree with the transport.
tuple_algebra disjoint_algebra(const boolean_algebra& base, int n,
                               std::size_t max_carrier = 4096);

// Re-derives the closed forms on a disjoint tuple algebra and reports them
// as laws (unary family, join, and the star shape with un-starred trailing
// components), together with involution and De Morgan for the transported
// star.
axiom_report check_closed_forms(const tuple_algebra& jb);

// Compares the transported star against the star formula with stars on the
// trailing components. The comparison generally fails: that formula is not
// an involution (first reproducible on the 2-atom base at n = 2).
axiom_report compare_star_closed_form(const tuple_algebra& jb);

// Symmetric sequence of principal ideals I_1, ..., I_{n-1} over a Boolean
// base, I_i = I_{n-i}, represented by generators. By convention I_n is the
// whole algebra.
struct ideal_sequence {
  boolean_algebra base;
  int n = 1;
  std::vector<elem> generators;  // generators[i-1] generates I_i

  elem generator(int i) const;  // i in [1, n]; generator(n) = top
};

ideal_sequence make_ideal_sequence(boolean_algebra base, int n, std::vector<elem> generators);

// Unit of the adjunction: x |-> (phi_1(x), ..., phi_n(x)) read through the
// center avatar, an injective LM morphism into the monotone algebra over
// the center. Verified on construction.
struct unit_embedding {
  center_view center;
  tuple_algebra target;
  std::vector<std::size_t> map;  // source carrier -> target carrier
};

unit_embedding adjunction_unit(const lm_algebra& a);

// Counit: first-component projection from the center of the monotone
// algebra back onto the base, a Boolean isomorphism. Verified on
// construction.
struct counit_projection {
  tuple_algebra t;
  std::vector<std::size_t> center_elements;  // central carrier indices of t.alg
  std::vector<elem> image;                   // image[k] = first component
};

counit_projection adjunction_counit(const boolean_algebra& base, int n,
                                    std::size_t max_carrier = 4096);

// Triangle identities of the adjunction, checked pointwise.
axiom_report check_triangle_left(const boolean_algebra& base, int n);  // on T(B)
axiom_report check_triangle_right(const lm_algebra& a);                // on C(L)

// Center plus the J-image ideals: the object half of the equivalence with
// Boolean algebras carrying symmetric ideal sequences.
struct lambda_result {
  ideal_sequence object;
  center_view center;
};

// Requires signature j. Every J_i image must pass the ideal check and the
// resulting sequence must be symmetric; failures raise verification_error.
lambda_result lambda_of(const lm_algebra& a);

// The disjoint tuple algebra restricted to tuples with y_i in I_{n-i+1}
// (so the first component is unconstrained). Closure of the restricted
// carrier under all operations is verified.
tuple_algebra sigma_of(const ideal_sequence& obj);

// x |-> (J_n(x), ..., J_1(x)) is an isomorphism onto sigma_of(lambda_of(x));
// checked together with naturality on a seeded family of morphisms built
// from atom maps (identity and collapse included).
axiom_report check_equivalence_on_algebra(const lm_algebra& a, unsigned seed = 0,
                                          int sampled_arrows = 2);

// lambda_of(sigma_of(obj)) returns the object itself up to the canonical
// base isomorphism b |-> (b, 0, ..., 0).
axiom_report check_equivalence_on_object(const ideal_sequence& obj);

// Both directions at once.
axiom_report check_cat_equivalence(const lm_algebra& a, const ideal_sequence& obj,
                                   unsigned seed = 0);

}  // namespace lmalg

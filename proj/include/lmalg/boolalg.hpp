#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmalg/report.hpp"

namespace lmalg {

// An element of a powerset algebra: one bit per atom.
using elem = std::uint32_t;

// Finite Boolean algebra presented as the powerset of a named atom set.
// Element arithmetic is bit arithmetic: join = or, meet = and, complement
// within the atom mask; 0 is bottom and the full mask is top.
struct boolean_algebra {
  std::vector<std::string> atoms;

  std::size_t atom_count() const { return atoms.size(); }
  std::size_t size() const { return std::size_t{1} << atoms.size(); }
  elem bot() const { return 0; }
  elem top() const { return atoms.empty() ? 0 : (elem{1} << atoms.size()) - 1; }
  bool contains(elem a) const { return (a & ~top()) == 0; }

  elem join(elem a, elem b) const { return a | b; }
  elem meet(elem a, elem b) const { return a & b; }
  elem complement(elem a) const { return top() & ~a; }
  bool leq(elem a, elem b) const { return (a & b) == a; }

  bool operator==(const boolean_algebra&) const = default;
};

// Builds the powerset algebra over `atom_names`. Duplicate labels or more
// than `max_atoms` atoms raise invariant_error.
boolean_algebra make_powerset_algebra(std::vector<std::string> atom_names,
                                      std::size_t max_atoms = 16);

// "p","q","r",... for generated instances.
std::vector<std::string> default_atom_names(std::size_t count);

// Display form of an element: "0", "1", a single atom name, or "{p,q}".
std::string render_element(const boolean_algebra& b, elem a);

// All 2^k elements in ascending mask order (small algebras only).
std::vector<elem> carrier(const boolean_algebra& b);

// Principal ideal: b belongs iff b <= generator.
struct ideal {
  boolean_algebra parent;
  elem generator = 0;

  bool contains(elem b) const { return parent.leq(b, generator); }
  std::vector<elem> members() const;
};

ideal ideal_from_generator(const boolean_algebra& b, elem generator);

// Verdict of the explicit-set ideal test plus, when it passes, the
// generating element (the join of the set).
struct ideal_check {
  axiom_report report;
  std::optional<elem> generator;
};

// Checks 0-membership, downward closure and join closure of `members`.
// Precondition: every member lies in the carrier (invariant_error otherwise).
ideal_check check_ideal(const boolean_algebra& b, const std::vector<elem>& members);

// Principal ultrafilter: the up-set of one atom.
struct ultrafilter {
  boolean_algebra parent;
  elem atom = 0;

  bool contains(elem b) const { return (atom & b) == atom; }
};

// One ultrafilter per atom, in atom order. The trivial algebra has none and
// is rejected with invariant_error.
std::vector<ultrafilter> ultrafilters(const boolean_algebra& b);

// Boolean homomorphism presented as a full lookup table on the source
// carrier.
struct boolean_hom {
  boolean_algebra source;
  boolean_algebra target;
  std::vector<elem> map;  // indexed by source element

  elem operator()(elem a) const { return map[a]; }
};

boolean_hom identity_hom(const boolean_algebra& b);

// Checks preservation of 0, 1, join, meet and complement over the whole
// source carrier; each failing law records its first witness.
axiom_report validate_hom(const boolean_hom& h);

// The homomorphism a |-> { target atom t : atom_map[t] <= a } induced by a
// map from target atoms to source atoms (finite Stone duality on points).
// `atom_map[t]` is a source atom index; size must equal the target atom
// count.
boolean_hom hom_from_atom_map(const boolean_algebra& source, const boolean_algebra& target,
                              const std::vector<std::size_t>& atom_map);

}  // namespace lmalg

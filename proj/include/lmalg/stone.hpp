#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lmalg/boolalg.hpp"
#include "lmalg/construct.hpp"
#include "lmalg/report.hpp"

namespace lmalg {

// A finite point set together with a symmetric chain of distinguished open
// sets O_1..O_{n-1}, each stored as a bitmask over the points.  Every subset
// of a finite space is clopen; the distinguished opens carry the extra
// structure that mirrors an ideal sequence on the algebra side.
struct finite_space {
  std::vector<std::string> points;
  int n = 0;
  std::vector<elem> opens;

  std::size_t point_count() const { return points.size(); }

  // O_i for i in [1, n], where O_n is the whole space by convention.
  elem open(int i) const;
};

// Validates point names, mask ranges, and the symmetry O_i == O_{n-i}.
finite_space make_space(std::vector<std::string> points, int n, std::vector<elem> opens);

// The Boolean algebra of all (cl)open subsets of a finite space.
boolean_algebra clopen_algebra(const finite_space& x);

// N_b: the set of points (ultrafilters, i.e. atoms) containing b.
elem open_of_element(const boolean_algebra& b, elem e);

// N_I: the union of N_b over the members of the ideal.
elem open_of_ideal(const boolean_algebra& b, const ideal& i);

// I_O: the ideal of elements whose basic open lies inside the mask,
// returned through its (principal) generator.
elem ideal_generator_of_open(const boolean_algebra& b, elem open_mask);

// The dual space of an algebra with an ideal sequence: points are the
// ultrafilters listed in atom order, opens are the N_{I_i}.
finite_space space_of_ideals(const ideal_sequence& obj);

// The dual object of a space: the clopen algebra with generators I_{O_i}.
ideal_sequence ideals_of_space(const finite_space& x);

// A Boolean homomorphism g with g(I_i) contained in I'_i for every i.
struct bool_ideal_arrow {
  ideal_sequence source;
  ideal_sequence target;
  boolean_hom g;
};

// A point map f with f^{-1}(O_i of the target) contained in O_i of the
// source for every i.
struct space_arrow {
  finite_space source;
  finite_space target;
  std::vector<std::size_t> point_map;
};

axiom_report validate_ideal_arrow(const bool_ideal_arrow& arr);
axiom_report validate_space_arrow(const space_arrow& arr);

// The dual of an ideal arrow runs the other way: each point of the target's
// spectrum pulls back to a principal ultrafilter of the source's algebra.
space_arrow dual_space_arrow(const bool_ideal_arrow& arr);

// The dual of a space arrow takes each clopen to its preimage.
bool_ideal_arrow dual_ideal_arrow(const space_arrow& arr);

// Round trip starting from the algebra side: element/ideal membership
// transfers to the spectrum, both composites return the original data, and
// double-dualizing seeded arrows reproduces them contravariantly.
axiom_report check_stone_roundtrip(const ideal_sequence& obj, unsigned seed = 0);

// Round trip starting from the space side.
axiom_report check_space_roundtrip(const finite_space& x);

}  // namespace lmalg

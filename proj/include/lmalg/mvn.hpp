#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lmalg/construct.hpp"
#include "lmalg/report.hpp"
#include "lmalg/stone.hpp"

namespace lmalg {

// A finite MV-algebra presented by tables: truncated addition and negation.
struct mv_algebra {
  std::size_t size = 0;
  std::size_t zero = 0;
  std::vector<std::uint32_t> oplus_table;  // size x size, row-major
  std::vector<std::uint32_t> star_table;

  std::size_t oplus(std::size_t a, std::size_t b) const { return oplus_table[a * size + b]; }
  std::size_t star(std::size_t a) const { return star_table[a]; }
  std::size_t one() const { return star(zero); }
};

void validate_mv_tables(const mv_algebra& a);

// The chain 0 < 1/n < ... < 1 with x + y truncated at 1 and x* = 1 - x.
mv_algebra mv_chain(int n, int max_n = 64);

// x . y, the dual of truncated addition.
std::size_t mv_odot(const mv_algebra& a, std::size_t x, std::size_t y);

// k copies of x added together (0x = 0).
std::size_t mv_scalar(const mv_algebra& a, int k, std::size_t x);

// k copies of x multiplied together (x^0 = 1).
std::size_t mv_power(const mv_algebra& a, std::size_t x, int k);

axiom_report check_mv_axioms(const mv_algebra& a);

// The two extra schemes that pin the variety generated by the n+1 chain:
// (n+1)x = nx, and [(jx).(x* + ((j-1)x)*)]^n = 0 for 1 < j < n with j
// not dividing n.
axiom_report check_mvn_axioms(const mv_algebra& a, int n);

// The generator condition singling out, among symmetric ideal sequences,
// the duals of proper Lukasiewicz structures:
// I_i ^ I_k <= I_{n-i+k-1} for 3 <= i <= n-2, 1 <= k <= n-4, k < i.
axiom_report check_l_proper(const ideal_sequence& obj);

// The same condition read on the distinguished opens of a finite space.
axiom_report check_l_proper(const finite_space& x);

}  // namespace lmalg

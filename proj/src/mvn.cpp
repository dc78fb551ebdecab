#include "lmalg/mvn.hpp"

#include <algorithm>
#include <string>

#include "lmalg/errors.hpp"

namespace lmalg {

void validate_mv_tables(const mv_algebra& a) {
  if (a.size == 0) throw invariant_error("mv algebra must be nonempty");
  if (a.zero >= a.size) throw invariant_error("mv zero out of range");
  if (a.oplus_table.size() != a.size * a.size)
    throw invariant_error("mv oplus table has the wrong shape");
  if (a.star_table.size() != a.size)
    throw invariant_error("mv star table has the wrong shape");
  for (std::uint32_t v : a.oplus_table)
    if (v >= a.size) throw invariant_error("mv oplus entry out of range");
  for (std::uint32_t v : a.star_table)
    if (v >= a.size) throw invariant_error("mv star entry out of range");
}

mv_algebra mv_chain(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw invariant_error("chain parameter must lie in [1, " + std::to_string(max_n) + "]");
  mv_algebra a;
  a.size = static_cast<std::size_t>(n) + 1;
  a.zero = 0;
  a.oplus_table.resize(a.size * a.size);
  a.star_table.resize(a.size);
  for (std::size_t x = 0; x < a.size; ++x) {
    a.star_table[x] = static_cast<std::uint32_t>(a.size - 1 - x);
    for (std::size_t y = 0; y < a.size; ++y)
      a.oplus_table[x * a.size + y] =
          static_cast<std::uint32_t>(std::min(a.size - 1, x + y));
  }
  return a;
}

std::size_t mv_odot(const mv_algebra& a, std::size_t x, std::size_t y) {
  return a.star(a.oplus(a.star(x), a.star(y)));
}

std::size_t mv_scalar(const mv_algebra& a, int k, std::size_t x) {
  if (k < 0) throw invariant_error("scalar multiple must be nonnegative");
  std::size_t acc = a.zero;
  for (int i = 0; i < k; ++i) acc = a.oplus(acc, x);
  return acc;
}

std::size_t mv_power(const mv_algebra& a, std::size_t x, int k) {
  if (k < 0) throw invariant_error("power must be nonnegative");
  std::size_t acc = a.one();
  for (int i = 0; i < k; ++i) acc = mv_odot(a, acc, x);
  return acc;
}

axiom_report check_mv_axioms(const mv_algebra& a) {
  validate_mv_tables(a);
  axiom_report rep;
  rep.system = "mv";
  const std::size_t m = a.size;

  {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        ++rep.laws_checked;
        if (a.oplus(x, y) != a.oplus(y, x)) {
          rep.add_fail("mv.oplus_comm", {x, y}, "x,y");
          ok = false;
          break;
        }
      }
    if (ok) rep.add_pass("mv.oplus_comm");
  }
  {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = 0; y < m && ok; ++y)
        for (std::size_t z = 0; z < m; ++z) {
          ++rep.laws_checked;
          if (a.oplus(a.oplus(x, y), z) != a.oplus(x, a.oplus(y, z))) {
            rep.add_fail("mv.oplus_assoc", {x, y, z}, "x,y,z");
            ok = false;
            break;
          }
        }
    if (ok) rep.add_pass("mv.oplus_assoc");
  }
  {
    bool ok = true;
    for (std::size_t x = 0; x < m; ++x) {
      ++rep.laws_checked;
      if (a.oplus(x, a.zero) != x) {
        rep.add_fail("mv.zero_unit", {x}, "x");
        ok = false;
        break;
      }
    }
    if (ok) rep.add_pass("mv.zero_unit");
  }
  {
    bool ok = true;
    for (std::size_t x = 0; x < m; ++x) {
      ++rep.laws_checked;
      if (a.star(a.star(x)) != x) {
        rep.add_fail("mv.involution", {x}, "x");
        ok = false;
        break;
      }
    }
    if (ok) rep.add_pass("mv.involution");
  }
  {
    bool ok = true;
    for (std::size_t x = 0; x < m; ++x) {
      ++rep.laws_checked;
      if (a.oplus(x, a.one()) != a.one()) {
        rep.add_fail("mv.one_absorbs", {x}, "x");
        ok = false;
        break;
      }
    }
    if (ok) rep.add_pass("mv.one_absorbs");
  }
  {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        ++rep.laws_checked;
        if (a.oplus(a.star(a.oplus(a.star(x), y)), y) !=
            a.oplus(a.star(a.oplus(a.star(y), x)), x)) {
          rep.add_fail("mv.lukasiewicz", {x, y}, "x,y");
          ok = false;
          break;
        }
      }
    if (ok) rep.add_pass("mv.lukasiewicz");
  }
  return rep;
}

axiom_report check_mvn_axioms(const mv_algebra& a, int n) {
  validate_mv_tables(a);
  if (n < 1) throw invariant_error("mvn check requires n >= 1");
  axiom_report rep;
  rep.system = "mv" + std::to_string(n);

  {
    bool ok = true;
    for (std::size_t x = 0; x < a.size; ++x) {
      ++rep.laws_checked;
      if (mv_scalar(a, n + 1, x) != mv_scalar(a, n, x)) {
        rep.add_fail("mvn.scalar_collapse", {x}, "x",
                     std::to_string(n + 1) + "x differs from " + std::to_string(n) + "x");
        ok = false;
        break;
      }
    }
    if (ok) rep.add_pass("mvn.scalar_collapse");
  }
  {
    bool ok = true;
    bool any = false;
    for (int j = 2; j <= n - 1 && ok; ++j) {
      if (n % j == 0) continue;
      any = true;
      for (std::size_t x = 0; x < a.size; ++x) {
        ++rep.laws_checked;
        std::size_t inner = mv_odot(
            a, mv_scalar(a, j, x),
            a.oplus(a.star(x), a.star(mv_scalar(a, j - 1, x))));
        if (mv_power(a, inner, n) != a.zero) {
          rep.add_fail("mvn.divisor_schema", {static_cast<std::size_t>(j), x}, "j,x",
                       "[(jx).(x* + ((j-1)x)*)]^n is not zero at j=" + std::to_string(j));
          ok = false;
          break;
        }
      }
    }
    if (ok)
      rep.add_pass("mvn.divisor_schema",
                   any ? "" : "vacuous: no j in (1, n) avoids dividing n");
  }
  return rep;
}

namespace {

struct proper_pairs {
  // i in [3, n-2], k in [1, n-4], k < i; the target index n-i+k-1 then
  // always lands in [2, n-2].
  int n;
  template <typename Fn>
  bool for_each(Fn&& fn) const {
    for (int i = 3; i <= n - 2; ++i)
      for (int k = 1; k <= n - 4 && k < i; ++k)
        if (!fn(i, k)) return false;
    return true;
  }
  bool empty() const {
    bool any = false;
    for_each([&](int, int) {
      any = true;
      return false;
    });
    return !any;
  }
  std::string classify() const {
    if (empty()) return "vacuous: no index pairs for n=" + std::to_string(n);
    if (n == 5) return "single pair (3,1); implied by the symmetry I_2 = I_3";
    return "";
  }
};

}  // namespace

axiom_report check_l_proper(const ideal_sequence& obj) {
  axiom_report rep;
  rep.system = "l-proper";
  proper_pairs pairs{obj.n};
  {
    bool ok = true;
    pairs.for_each([&](int i, int k) {
      ++rep.laws_checked;
      elem lhs = obj.base.meet(obj.generator(i), obj.generator(k));
      if (!obj.base.leq(lhs, obj.generator(obj.n - i + k - 1))) {
        rep.add_fail("proper.intersection",
                     {static_cast<std::size_t>(i), static_cast<std::size_t>(k)}, "i,k",
                     "I_" + std::to_string(i) + " ^ I_" + std::to_string(k) +
                         " is not inside I_" + std::to_string(obj.n - i + k - 1));
        ok = false;
        return false;
      }
      return true;
    });
    if (ok) rep.add_pass("proper.intersection", pairs.classify());
  }
  {
    // The weakened reading I_i ^ I_{i-k} <= I_i holds for free; it is
    // reported for comparison but never drives the verdict.
    bool ok = true;
    pairs.for_each([&](int i, int k) {
      ++rep.laws_checked;
      elem lhs = obj.base.meet(obj.generator(i), obj.generator(i - k));
      if (!obj.base.leq(lhs, obj.generator(i))) {
        ok = false;
        return false;
      }
      return true;
    });
    rep.add_advisory("proper.weak_variant", ok, {}, "",
                     ok ? "holds trivially: the intersection is below its left argument"
                        : "weakened reading failed");
  }
  return rep;
}

axiom_report check_l_proper(const finite_space& x) {
  axiom_report rep;
  rep.system = "l-proper-space";
  proper_pairs pairs{x.n};
  bool ok = true;
  pairs.for_each([&](int i, int k) {
    ++rep.laws_checked;
    elem lhs = x.open(i) & x.open(k);
    if ((lhs & ~x.open(x.n - i + k - 1)) != 0) {
      rep.add_fail("proper.open_intersection",
                   {static_cast<std::size_t>(i), static_cast<std::size_t>(k)}, "i,k",
                   "O_" + std::to_string(i) + " ^ O_" + std::to_string(k) +
                       " is not inside O_" + std::to_string(x.n - i + k - 1));
      ok = false;
      return false;
    }
    return true;
  });
  if (ok) rep.add_pass("proper.open_intersection", pairs.classify());
  return rep;
}

}  // namespace lmalg

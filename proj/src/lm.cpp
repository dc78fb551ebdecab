#include "lmalg/lm.hpp"

#include <algorithm>
#include <set>

#include "lmalg/errors.hpp"

namespace lmalg {

void validate_lm_tables(const lm_algebra& a) {
  if (a.n < 1) throw invariant_error("unary family must have n >= 1 operations");
  if (a.size == 0) throw invariant_error("empty carrier");
  const std::size_t m = a.size;
  if (a.join_table.size() != m * m || a.meet_table.size() != m * m)
    throw invariant_error("lattice table shape does not match carrier size");
  if (a.star_table.size() != m)
    throw invariant_error("star table shape does not match carrier size");
  if (a.unary_table.size() != static_cast<std::size_t>(a.n) * m)
    throw invariant_error("unary table shape does not match n and carrier size");
  if (a.zero >= m || a.one >= m) throw invariant_error("constants out of range");
  if (m > 1 && a.zero == a.one)
    throw invariant_error("zero and one coincide on a carrier with more than one element");
  auto in_range = [m](const std::vector<std::uint32_t>& t) {
    return std::all_of(t.begin(), t.end(), [m](std::uint32_t v) { return v < m; });
  };
  if (!in_range(a.join_table) || !in_range(a.meet_table) || !in_range(a.star_table) ||
      !in_range(a.unary_table))
    throw invariant_error("table entry out of range");
}

lm_algebra canonical_algebra(int n, int max_n) {
  if (n < 1) throw invariant_error("chain requires n >= 1");
  if (n > max_n)
    throw invariant_error("n = " + std::to_string(n) + " exceeds bound " +
                          std::to_string(max_n));
  lm_algebra a;
  a.n = n;
  a.size = static_cast<std::size_t>(n) + 1;
  a.sig = lm_signature::phi;
  a.zero = 0;
  a.one = static_cast<std::size_t>(n);
  const std::size_t m = a.size;
  a.join_table.resize(m * m);
  a.meet_table.resize(m * m);
  a.star_table.resize(m);
  a.unary_table.resize(static_cast<std::size_t>(n) * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      a.join_table[x * m + y] = static_cast<std::uint32_t>(std::max(x, y));
      a.meet_table[x * m + y] = static_cast<std::uint32_t>(std::min(x, y));
    }
    a.star_table[x] = static_cast<std::uint32_t>(m - 1 - x);
  }
  // phi_i sends j/n to 0 below the diagonal i+j <= n, and to 1 above it.
  for (int i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a.unary_table[(static_cast<std::size_t>(i) - 1) * m + j] =
          (static_cast<std::size_t>(i) + j < static_cast<std::size_t>(n) + 1)
              ? 0
              : static_cast<std::uint32_t>(n);
  return a;
}

std::vector<std::string> canonical_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    if (j == 0)
      names.push_back("0");
    else if (j == n)
      names.push_back("1");
    else
      names.push_back(std::to_string(j) + "/" + std::to_string(n));
  }
  return names;
}

namespace {

// Shared quantifier loops for the axiom checkers. Each loop counts every
// evaluated tuple and records the first counterexample of a law.
struct law_ctx {
  const lm_algebra& a;
  axiom_report& rep;
  const std::vector<std::string>* names;

  void fail(const char* law, std::vector<std::size_t> w, const char* vars,
            std::string extra = {}) const {
    std::string note = describe_witness(vars, w, names);
    if (!extra.empty()) note += "; " + extra;
    rep.add_fail(law, std::move(w), vars, std::move(note));
  }

  template <class P>
  void x(const char* law, P pred) const {
    for (std::size_t v = 0; v < a.size; ++v) {
      ++rep.laws_checked;
      if (!pred(v)) return fail(law, {v}, "x");
    }
    rep.add_pass(law);
  }

  template <class P>
  void xy(const char* law, P pred) const {
    for (std::size_t v = 0; v < a.size; ++v)
      for (std::size_t w = 0; w < a.size; ++w) {
        ++rep.laws_checked;
        if (!pred(v, w)) return fail(law, {v, w}, "x,y");
      }
    rep.add_pass(law);
  }

  template <class P>
  void xyz(const char* law, P pred) const {
    for (std::size_t v = 0; v < a.size; ++v)
      for (std::size_t w = 0; w < a.size; ++w)
        for (std::size_t u = 0; u < a.size; ++u) {
          ++rep.laws_checked;
          if (!pred(v, w, u)) return fail(law, {v, w, u}, "x,y,z");
        }
    rep.add_pass(law);
  }

  template <class P>
  void ix(const char* law, P pred, std::string pass_note = {}) const {
    for (int i = 1; i <= a.n; ++i)
      for (std::size_t v = 0; v < a.size; ++v) {
        ++rep.laws_checked;
        if (!pred(i, v)) return fail(law, {static_cast<std::size_t>(i), v}, "i,x");
      }
    rep.add_pass(law, std::move(pass_note));
  }

  template <class P>
  void ixy(const char* law, P pred, std::string pass_note = {}) const {
    for (int i = 1; i <= a.n; ++i)
      for (std::size_t v = 0; v < a.size; ++v)
        for (std::size_t w = 0; w < a.size; ++w) {
          ++rep.laws_checked;
          if (!pred(i, v, w)) return fail(law, {static_cast<std::size_t>(i), v, w}, "i,x,y");
        }
    rep.add_pass(law, std::move(pass_note));
  }

  template <class P>
  void ijx(const char* law, P pred) const {
    for (int i = 1; i <= a.n; ++i)
      for (int j = 1; j <= a.n; ++j)
        for (std::size_t v = 0; v < a.size; ++v) {
          ++rep.laws_checked;
          if (!pred(i, j, v))
            return fail(law, {static_cast<std::size_t>(i), static_cast<std::size_t>(j), v},
                        "i,j,x");
        }
    rep.add_pass(law);
  }
};

void check_de_morgan(const law_ctx& c) {
  const lm_algebra& a = c.a;
  c.xy("dm.join_comm", [&](auto x, auto y) { return a.join(x, y) == a.join(y, x); });
  c.xy("dm.meet_comm", [&](auto x, auto y) { return a.meet(x, y) == a.meet(y, x); });
  c.xyz("dm.join_assoc", [&](auto x, auto y, auto z) {
    return a.join(x, a.join(y, z)) == a.join(a.join(x, y), z);
  });
  c.xyz("dm.meet_assoc", [&](auto x, auto y, auto z) {
    return a.meet(x, a.meet(y, z)) == a.meet(a.meet(x, y), z);
  });
  c.xy("dm.absorb_join", [&](auto x, auto y) { return a.join(x, a.meet(x, y)) == x; });
  c.xy("dm.absorb_meet", [&](auto x, auto y) { return a.meet(x, a.join(x, y)) == x; });
  c.xyz("dm.distrib_meet_over_join", [&](auto x, auto y, auto z) {
    return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
  });
  c.xyz("dm.distrib_join_over_meet", [&](auto x, auto y, auto z) {
    return a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z));
  });
  c.x("dm.bottom", [&](auto x) { return a.join(x, a.zero) == x; });
  c.x("dm.top", [&](auto x) { return a.meet(x, a.one) == x; });
  c.x("dm.involution", [&](auto x) { return a.star(a.star(x)) == x; });
  c.xy("dm.de_morgan_join",
       [&](auto x, auto y) { return a.star(a.join(x, y)) == a.meet(a.star(x), a.star(y)); });
  c.xy("dm.de_morgan_meet",
       [&](auto x, auto y) { return a.star(a.meet(x, y)) == a.join(a.star(x), a.star(y)); });
  c.rep.laws_checked += 2;
  if (a.star(a.zero) == a.one && a.star(a.one) == a.zero)
    c.rep.add_pass("dm.star_bounds");
  else
    c.rep.add_fail("dm.star_bounds", {a.zero, a.one}, "x,y", "0* != 1 or 1* != 0");
}

void check_l_core(const law_ctx& c) {
  const lm_algebra& a = c.a;
  const int n = a.n;
  c.ixy("L1", [&](int i, auto x, auto y) {
    return a.unary(i, a.join(x, y)) == a.join(a.unary(i, x), a.unary(i, y));
  });
  c.ix("L2", [&](int i, auto x) {
    auto u = a.unary(i, x);
    return a.join(u, a.star(u)) == a.one;
  });
  c.ijx("L3", [&](int i, int j, auto x) { return a.unary(i, a.unary(j, x)) == a.unary(j, x); });
  c.ix("L4",
       [&](int i, auto x) { return a.unary(i, a.star(x)) == a.star(a.unary(n + 1 - i, x)); });
  // L5: the family is monotone in its index.
  {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = i; j <= n && ok; ++j)
        for (std::size_t x = 0; x < a.size; ++x) {
          ++c.rep.laws_checked;
          if (!a.leq(a.unary(i, x), a.unary(j, x))) {
            c.fail("L5", {static_cast<std::size_t>(i), static_cast<std::size_t>(j), x}, "i,j,x");
            ok = false;
            break;
          }
        }
    if (ok) c.rep.add_pass("L5");
  }
}

void check_determination(const law_ctx& c, const char* law) {
  const lm_algebra& a = c.a;
  for (std::size_t x = 0; x < a.size; ++x)
    for (std::size_t y = x + 1; y < a.size; ++y) {
      ++c.rep.laws_checked;
      bool split = false;
      for (int i = 1; i <= a.n; ++i)
        if (a.unary(i, x) != a.unary(i, y)) {
          split = true;
          break;
        }
      if (!split)
        return c.fail(law, {x, y}, "x,y", "distinct elements share every unary value");
    }
  c.rep.add_pass(law);
}

void check_j_core(const law_ctx& c) {
  const lm_algebra& a = c.a;
  const int n = a.n;
  auto tail_join = [&](int from, auto f) {
    std::size_t acc = a.zero;
    for (int k = from; k <= n; ++k) acc = a.join(acc, f(k));
    return acc;
  };
  c.ixy(
      "J1",
      [&](int i, auto x, auto y) {
        auto xy = a.join(x, y);
        auto lhs = tail_join(n - i + 1, [&](int k) { return a.unary(k, xy); });
        auto rhs =
            tail_join(n - i + 1, [&](int k) { return a.join(a.unary(k, x), a.unary(k, y)); });
        return lhs == rhs;
      },
      "quantifier i tested over [1," + std::to_string(n) + "]");
  c.ix("J2", [&](int i, auto x) {
    auto u = a.unary(i, x);
    return a.join(u, a.star(u)) == a.one;
  });
  // J3: J_k(J_i(x)) = 0 for k < n, and J_n fixes every J_i value.
  {
    bool ok = true;
    for (int k = 1; k <= n - 1 && ok; ++k)
      for (int i = 1; i <= n && ok; ++i)
        for (std::size_t x = 0; x < a.size; ++x) {
          ++c.rep.laws_checked;
          if (a.unary(k, a.unary(i, x)) != a.zero) {
            c.fail("J3a", {static_cast<std::size_t>(k), static_cast<std::size_t>(i), x},
                   "k,i,x");
            ok = false;
            break;
          }
        }
    if (ok) c.rep.add_pass("J3a", n == 1 ? "vacuous: k ranges over [1,0]" : "");
  }
  c.ix("J3b", [&](int i, auto x) { return a.unary(n, a.unary(i, x)) == a.unary(i, x); });
  // J4: J_k(x*) = J_{n-k}(x) for k < n; J_n(x*) is the meet of all J_i(x)*.
  {
    bool ok = true;
    for (int k = 1; k <= n - 1 && ok; ++k)
      for (std::size_t x = 0; x < a.size; ++x) {
        ++c.rep.laws_checked;
        if (a.unary(k, a.star(x)) != a.unary(n - k, x)) {
          c.fail("J4a", {static_cast<std::size_t>(k), x}, "k,x");
          ok = false;
          break;
        }
      }
    if (ok) c.rep.add_pass("J4a", n == 1 ? "vacuous: k ranges over [1,0]" : "");
  }
  c.x("J4b", [&](auto x) {
    std::size_t acc = a.one;
    for (int i = 1; i <= n; ++i) acc = a.meet(acc, a.star(a.unary(i, x)));
    return a.unary(n, a.star(x)) == acc;
  });
  // J5: J_l(x) <= (J_1(x) v ... v J_{l-1}(x))* for 1 < l <= n.
  {
    bool ok = true;
    for (int l = 2; l <= n && ok; ++l)
      for (std::size_t x = 0; x < a.size; ++x) {
        ++c.rep.laws_checked;
        std::size_t acc = a.zero;
        for (int k = 1; k <= l - 1; ++k) acc = a.join(acc, a.unary(k, x));
        if (!a.leq(a.unary(l, x), a.star(acc))) {
          c.fail("J5", {static_cast<std::size_t>(l), x}, "l,x");
          ok = false;
          break;
        }
      }
    if (ok) c.rep.add_pass("J5", n == 1 ? "vacuous: l ranges over (1,1]" : "");
  }
  check_determination(c, "J6");
}

}  // namespace

axiom_report check_axioms(const lm_algebra& a, lm_system system,
                          const std::vector<std::string>* names) {
  validate_lm_tables(a);
  const bool wants_j = system == lm_system::j_system;
  if (wants_j != (a.sig == lm_signature::j))
    throw invariant_error("axiom system does not match the algebra's signature tag");

  axiom_report rep;
  rep.system = system == lm_system::l_system ? "L" : system == lm_system::l_alt ? "Lalt" : "J";
  law_ctx c{a, rep, names};
  check_de_morgan(c);
  switch (system) {
    case lm_system::l_system:
      check_l_core(c);
      check_determination(c, "L6");
      break;
    case lm_system::l_alt: {
      check_l_core(c);
      const int n = a.n;
      c.x("L7", [&](auto x) { return a.leq(x, a.unary(n, x)); });
      // L8: x ^ phi_i(x)* ^ phi_{i+1}(y) <= y for i in [n-1].
      bool ok = true;
      for (int i = 1; i <= n - 1 && ok; ++i)
        for (std::size_t x = 0; x < a.size && ok; ++x)
          for (std::size_t y = 0; y < a.size; ++y) {
            ++rep.laws_checked;
            auto lhs = a.meet(a.meet(x, a.star(a.unary(i, x))), a.unary(i + 1, y));
            if (!a.leq(lhs, y)) {
              c.fail("L8", {static_cast<std::size_t>(i), x, y}, "i,x,y");
              ok = false;
              break;
            }
          }
      if (ok) rep.add_pass("L8", a.n == 1 ? "vacuous: i ranges over [1,0]" : "");
      break;
    }
    case lm_system::j_system:
      check_j_core(c);
      break;
  }
  return rep;
}

axiom_report check_derived_props(const lm_algebra& a, const std::vector<std::string>* names) {
  validate_lm_tables(a);
  axiom_report rep;
  law_ctx c{a, rep, names};
  const int n = a.n;

  if (a.sig == lm_signature::j) {
    rep.system = "derived-j";
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = i + 1; j <= n && ok; ++j)
        for (std::size_t x = 0; x < a.size; ++x) {
          ++rep.laws_checked;
          if (a.meet(a.unary(i, x), a.unary(j, x)) != a.zero) {
            c.fail("disjoint", {static_cast<std::size_t>(i), static_cast<std::size_t>(j), x},
                   "i,j,x");
            ok = false;
            break;
          }
        }
    if (ok) rep.add_pass("disjoint");
    return rep;
  }

  rep.system = "derived-phi";
  c.ixy("lemma1", [&](int i, auto x, auto y) {
    return a.unary(i, a.meet(x, y)) == a.meet(a.unary(i, x), a.unary(i, y));
  });
  c.ix("lemma2", [&](int i, auto x) {
    auto u = a.unary(i, x);
    return a.meet(u, a.star(u)) == a.zero;
  });
  c.ijx("lemma3", [&](int i, int j, auto x) {
    auto u = a.star(a.unary(j, x));
    return a.unary(i, u) == u;
  });
  // Order characterization, reconstructed reading: x <= y iff every unary
  // value of x sits below the matching unary value of y.
  c.xy("lemma4", [&](auto x, auto y) {
    bool all = true;
    for (int i = 1; i <= n; ++i)
      if (!a.leq(a.unary(i, x), a.unary(i, y))) {
        all = false;
        break;
      }
    return a.leq(x, y) == all;
  });
  // The literally-printed reading compares phi_i(x) with phi_j(x) and never
  // mentions y on the right-hand side; reported for visibility, not scored.
  {
    bool ok = true;
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < a.size && ok; ++x)
      for (std::size_t y = 0; y < a.size && ok; ++y)
        for (int i = 1; i <= n && ok; ++i)
          for (int j = 1; j <= n; ++j) {
            ++rep.laws_checked;
            if (a.leq(x, y) != a.leq(a.unary(i, x), a.unary(j, x))) {
              ok = false;
              w = {x, y, static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
              break;
            }
          }
    rep.add_advisory("lemma4_literal", ok, w, "x,y,i,j",
                     ok ? "literal reading holds here"
                        : "literal reading fails (ill-typed as printed): " +
                              describe_witness("x,y,i,j", w, names));
  }
  c.x("lemma5",
      [&](auto x) { return a.leq(a.unary(1, x), x) && a.leq(x, a.unary(n, x)); });

  // The three alternative descriptions of the Boolean center must agree
  // with the complementation definition x v x* = 1.
  std::vector<char> in_image(a.size, 0);
  for (int i = 1; i <= n; ++i)
    for (std::size_t y = 0; y < a.size; ++y) in_image[a.unary(i, y)] = 1;
  auto central = [&](std::size_t x) { return a.join(x, a.star(x)) == a.one; };
  c.x("center_exists_fix", [&](auto x) {
    bool fix = false;
    for (int i = 1; i <= n; ++i)
      if (a.unary(i, x) == x) {
        fix = true;
        break;
      }
    return central(x) == fix;
  });
  c.x("center_all_fix", [&](auto x) {
    bool fix = true;
    for (int i = 1; i <= n; ++i)
      if (a.unary(i, x) != x) {
        fix = false;
        break;
      }
    return central(x) == fix;
  });
  c.x("center_image", [&](auto x) { return central(x) == (in_image[x] != 0); });
  return rep;
}

lm_algebra phi_to_j(const lm_algebra& a, bool validate) {
  if (a.sig != lm_signature::phi)
    throw invariant_error("phi_to_j expects a phi-signature algebra");
  if (validate) {
    auto rep = check_axioms(a, lm_system::l_system);
    if (!rep.passed())
      throw invariant_error("phi_to_j precondition: " + summarize(rep));
  }
  lm_algebra out = a;
  out.sig = lm_signature::j;
  const int n = a.n;
  const std::size_t m = a.size;
  for (std::size_t x = 0; x < m; ++x) {
    // J_n = phi_1; J_i = phi_{n-i+1} ^ phi_{n-i}* for i < n.
    out.unary_table[(static_cast<std::size_t>(n) - 1) * m + x] =
        static_cast<std::uint32_t>(a.unary(1, x));
    for (int i = 1; i <= n - 1; ++i)
      out.unary_table[(static_cast<std::size_t>(i) - 1) * m + x] = static_cast<std::uint32_t>(
          a.meet(a.unary(n - i + 1, x), a.star(a.unary(n - i, x))));
  }
  return out;
}

lm_algebra j_to_phi(const lm_algebra& a, bool validate) {
  if (a.sig != lm_signature::j)
    throw invariant_error("j_to_phi expects a j-signature algebra");
  if (validate) {
    auto rep = check_axioms(a, lm_system::j_system);
    if (!rep.passed())
      throw invariant_error("j_to_phi precondition: " + summarize(rep));
  }
  lm_algebra out = a;
  out.sig = lm_signature::phi;
  const int n = a.n;
  const std::size_t m = a.size;
  for (int i = 1; i <= n; ++i)
    for (std::size_t x = 0; x < m; ++x) {
      // phi_i = J_{n-i+1} v ... v J_n.
      std::size_t acc = a.zero;
      for (int k = n - i + 1; k <= n; ++k) acc = a.join(acc, a.unary(k, x));
      out.unary_table[(static_cast<std::size_t>(i) - 1) * m + x] =
          static_cast<std::uint32_t>(acc);
    }
  return out;
}

bool center_view::is_central(std::size_t carrier_index) const {
  return mask_by_element_.count(carrier_index) != 0;
}

elem center_view::mask_of(std::size_t carrier_index) const {
  auto it = mask_by_element_.find(carrier_index);
  if (it == mask_by_element_.end())
    throw invariant_error("element e" + std::to_string(carrier_index) +
                          " is not in the Boolean center");
  return it->second;
}

std::size_t center_view::carrier_of(elem mask) const {
  if (mask >= element_by_mask_.size())
    throw invariant_error("center mask out of range");
  return element_by_mask_[mask];
}

center_view boolean_center(const lm_algebra& a) {
  validate_lm_tables(a);
  center_view cv;
  for (std::size_t x = 0; x < a.size; ++x)
    if (a.join(x, a.star(x)) == a.one) cv.elements.push_back(x);

  std::set<std::size_t> central(cv.elements.begin(), cv.elements.end());
  for (std::size_t x : cv.elements) {
    if (!central.count(a.star(x)))
      throw verification_error("center not closed under star at e" + std::to_string(x));
    for (std::size_t y : cv.elements) {
      if (!central.count(a.join(x, y)) || !central.count(a.meet(x, y)))
        throw verification_error("center not closed under the lattice operations at e" +
                                 std::to_string(x) + ", e" + std::to_string(y));
    }
  }
  if (!central.count(a.zero) || !central.count(a.one))
    throw verification_error("center misses a lattice constant");

  for (std::size_t x : cv.elements) {
    if (x == a.zero) continue;
    bool minimal = true;
    for (std::size_t y : cv.elements) {
      if (y == a.zero || y == x) continue;
      if (a.leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) cv.atoms.push_back(x);
  }

  std::vector<std::string> labels;
  labels.reserve(cv.atoms.size());
  for (std::size_t atom : cv.atoms) labels.push_back("c" + std::to_string(atom));
  cv.algebra = make_powerset_algebra(std::move(labels));

  if (cv.elements.size() != cv.algebra.size())
    throw verification_error("center size " + std::to_string(cv.elements.size()) +
                             " is not 2^" + std::to_string(cv.atoms.size()) +
                             "; not a powerset algebra");

  cv.masks.reserve(cv.elements.size());
  cv.element_by_mask_.assign(cv.algebra.size(), 0);
  std::vector<char> mask_seen(cv.algebra.size(), 0);
  for (std::size_t x : cv.elements) {
    elem mask = 0;
    for (std::size_t k = 0; k < cv.atoms.size(); ++k)
      if (a.leq(cv.atoms[k], x)) mask |= elem{1} << k;
    cv.masks.push_back(mask);
    cv.mask_by_element_.emplace(x, mask);
    if (mask_seen[mask])
      throw verification_error("atom decomposition is not injective on the center");
    mask_seen[mask] = 1;
    cv.element_by_mask_[mask] = x;
  }

  // The avatar map must be a Boolean isomorphism: operations computed in the
  // carrier and in the powerset must agree.
  auto mask_at = [&](std::size_t x) { return cv.mask_by_element_.at(x); };
  if (mask_at(a.zero) != cv.algebra.bot() || mask_at(a.one) != cv.algebra.top())
    throw verification_error("center avatar misplaces a constant");
  for (std::size_t x : cv.elements) {
    if (mask_at(a.star(x)) != cv.algebra.complement(mask_at(x)))
      throw verification_error("center avatar breaks complement at e" + std::to_string(x));
    for (std::size_t y : cv.elements) {
      if (mask_at(a.join(x, y)) != cv.algebra.join(mask_at(x), mask_at(y)) ||
          mask_at(a.meet(x, y)) != cv.algebra.meet(mask_at(x), mask_at(y)))
        throw verification_error("center avatar breaks a lattice operation at e" +
                                 std::to_string(x) + ", e" + std::to_string(y));
    }
  }
  return cv;
}

sub_algebra subalgebra_generated(const lm_algebra& a, const std::vector<std::size_t>& seed) {
  validate_lm_tables(a);
  for (std::size_t s : seed)
    if (s >= a.size) throw invariant_error("subalgebra seed out of range");

  std::set<std::size_t> members(seed.begin(), seed.end());
  members.insert(a.zero);
  members.insert(a.one);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> snapshot(members.begin(), members.end());
    auto add = [&](std::size_t v) {
      if (members.insert(v).second) grew = true;
    };
    for (std::size_t x : snapshot) {
      add(a.star(x));
      for (int k = 1; k <= a.n; ++k) add(a.unary(k, x));
      for (std::size_t y : snapshot) {
        add(a.join(x, y));
        add(a.meet(x, y));
      }
    }
  }

  sub_algebra out;
  out.inclusion.assign(members.begin(), members.end());
  std::unordered_map<std::size_t, std::uint32_t> pos;
  for (std::size_t p = 0; p < out.inclusion.size(); ++p)
    pos.emplace(out.inclusion[p], static_cast<std::uint32_t>(p));

  lm_algebra& sub = out.alg;
  sub.n = a.n;
  sub.size = out.inclusion.size();
  sub.sig = a.sig;
  sub.zero = pos.at(a.zero);
  sub.one = pos.at(a.one);
  const std::size_t m = sub.size;
  sub.join_table.resize(m * m);
  sub.meet_table.resize(m * m);
  sub.star_table.resize(m);
  sub.unary_table.resize(static_cast<std::size_t>(sub.n) * m);
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t x = out.inclusion[p];
    sub.star_table[p] = pos.at(a.star(x));
    for (int k = 1; k <= sub.n; ++k)
      sub.unary_table[(static_cast<std::size_t>(k) - 1) * m + p] = pos.at(a.unary(k, x));
    for (std::size_t q = 0; q < m; ++q) {
      const std::size_t y = out.inclusion[q];
      sub.join_table[p * m + q] = pos.at(a.join(x, y));
      sub.meet_table[p * m + q] = pos.at(a.meet(x, y));
    }
  }
  return out;
}

axiom_report validate_lm_hom(const lm_algebra& source, const lm_algebra& target,
                             std::span<const std::size_t> map,
                             const std::vector<std::string>* source_names) {
  if (source.n != target.n || source.sig != target.sig)
    throw invariant_error("morphism endpoints disagree on n or signature");
  if (map.size() != source.size) throw invariant_error("morphism table has wrong size");
  for (std::size_t v : map)
    if (v >= target.size) throw invariant_error("morphism value out of range");

  axiom_report rep;
  rep.system = "lm-hom";
  law_ctx c{source, rep, source_names};
  rep.laws_checked += 2;
  if (map[source.zero] == target.zero)
    rep.add_pass("hom.zero");
  else
    rep.add_fail("hom.zero", {source.zero}, "x", "h(0) != 0");
  if (map[source.one] == target.one)
    rep.add_pass("hom.one");
  else
    rep.add_fail("hom.one", {source.one}, "x", "h(1) != 1");
  c.xy("hom.join",
       [&](auto x, auto y) { return map[source.join(x, y)] == target.join(map[x], map[y]); });
  c.xy("hom.meet",
       [&](auto x, auto y) { return map[source.meet(x, y)] == target.meet(map[x], map[y]); });
  c.x("hom.star", [&](auto x) { return map[source.star(x)] == target.star(map[x]); });
  c.ix("hom.unary",
       [&](int i, auto x) { return map[source.unary(i, x)] == target.unary(i, map[x]); });
  return rep;
}

moisil_representation moisil_represent(const lm_algebra& a) {
  if (a.sig != lm_signature::phi)
    throw invariant_error("representation expects a phi-signature algebra");
  center_view cv = boolean_center(a);
  if (cv.atoms.empty())
    throw invariant_error("representation requires a nontrivial center");

  moisil_representation out;
  out.target = canonical_algebra(a.n);
  out.center_atoms = cv.atoms;
  out.components.reserve(cv.atoms.size());

  for (std::size_t atom : cv.atoms) {
    // Membership of a central element in the ultrafilter generated by
    // `atom` is the order test atom <= c, taken inside the carrier.
    std::vector<std::size_t> comp(a.size, 0);
    for (std::size_t x = 0; x < a.size; ++x) {
      std::size_t count = 0;
      for (int j = 1; j <= a.n; ++j)
        if (a.leq(atom, a.unary(j, x))) ++count;
      comp[x] = count;
    }
    auto rep = validate_lm_hom(a, out.target, comp);
    if (!rep.passed())
      throw verification_error("representation component for atom e" + std::to_string(atom) +
                               " is not an LM morphism: " + summarize(rep));

    // The image must be a subalgebra of the chain.
    std::set<std::size_t> image(comp.begin(), comp.end());
    for (std::size_t v : image) {
      if (!image.count(out.target.star(v)))
        throw verification_error("component image not closed under star");
      for (int k = 1; k <= a.n; ++k)
        if (!image.count(out.target.unary(k, v)))
          throw verification_error("component image not closed under the unary family");
      for (std::size_t w : image)
        if (!image.count(out.target.join(v, w)) || !image.count(out.target.meet(v, w)))
          throw verification_error("component image not closed under the lattice operations");
    }
    out.components.push_back(std::move(comp));
  }

  std::set<std::vector<std::size_t>> profiles;
  for (std::size_t x = 0; x < a.size; ++x) {
    std::vector<std::size_t> profile;
    profile.reserve(out.components.size());
    for (const auto& comp : out.components) profile.push_back(comp[x]);
    if (!profiles.insert(profile).second)
      throw verification_error("representation is not injective at e" + std::to_string(x));
  }
  return out;
}

}  // namespace lmalg

#include "lmalg/stone.hpp"

#include <bit>
#include <random>

#include "lmalg/errors.hpp"

namespace lmalg {

namespace {

elem bit(std::size_t j) { return static_cast<elem>(elem{1} << j); }

elem full_mask(std::size_t count) {
  return count == 0 ? 0 : static_cast<elem>((elem{1} << count) - 1);
}

}  // namespace

elem finite_space::open(int i) const {
  if (i < 1 || i > n) throw invariant_error("open-set index out of range");
  if (i == n) return full_mask(points.size());
  return opens[static_cast<std::size_t>(i) - 1];
}

finite_space make_space(std::vector<std::string> points, int n, std::vector<elem> opens) {
  if (points.empty()) throw invariant_error("spaces require at least one point");
  make_powerset_algebra(points);  // enforces the point bound and name uniqueness
  if (n < 1) throw invariant_error("spaces require n >= 1");
  if (opens.size() != static_cast<std::size_t>(n) - 1)
    throw invariant_error("expected n-1 = " + std::to_string(n - 1) + " open sets, got " +
                          std::to_string(opens.size()));
  const elem all = full_mask(points.size());
  for (elem o : opens)
    if ((o & ~all) != 0) throw invariant_error("open set mentions unknown points");
  for (int i = 1; i <= n - 1; ++i)
    if (opens[static_cast<std::size_t>(i) - 1] != opens[static_cast<std::size_t>(n - i) - 1])
      throw invariant_error("open sets are not symmetric: O_" + std::to_string(i) + " != O_" +
                            std::to_string(n - i));
  return finite_space{std::move(points), n, std::move(opens)};
}

boolean_algebra clopen_algebra(const finite_space& x) { return make_powerset_algebra(x.points); }

elem open_of_element(const boolean_algebra& b, elem e) {
  if (!b.contains(e)) throw invariant_error("element out of range");
  elem mask = 0;
  for (std::size_t j = 0; j < b.atom_count(); ++j)
    if (b.leq(bit(j), e)) mask |= bit(j);
  return mask;
}

elem open_of_ideal(const boolean_algebra& b, const ideal& i) {
  elem mask = 0;
  for (elem m : i.members()) mask |= open_of_element(b, m);
  return mask;
}

elem ideal_generator_of_open(const boolean_algebra& b, elem open_mask) {
  if ((open_mask & ~full_mask(b.atom_count())) != 0)
    throw invariant_error("open mask mentions unknown points");
  elem gen = 0;
  for (std::size_t j = 0; j < b.atom_count(); ++j)
    if ((open_of_element(b, bit(j)) & ~open_mask) == 0) gen = b.join(gen, bit(j));
  return gen;
}

finite_space space_of_ideals(const ideal_sequence& obj) {
  if (obj.base.atom_count() == 0)
    throw invariant_error("the trivial algebra has an empty spectrum");
  std::vector<std::string> pts;
  pts.reserve(obj.base.atom_count());
  for (const ultrafilter& u : ultrafilters(obj.base))
    pts.push_back(obj.base.atoms[static_cast<std::size_t>(std::countr_zero(u.atom))]);
  std::vector<elem> opens(static_cast<std::size_t>(obj.n) - 1);
  for (std::size_t i = 0; i < opens.size(); ++i)
    opens[i] = open_of_ideal(obj.base, ideal_from_generator(obj.base, obj.generators[i]));
  return make_space(std::move(pts), obj.n, std::move(opens));
}

ideal_sequence ideals_of_space(const finite_space& x) {
  boolean_algebra base = clopen_algebra(x);
  std::vector<elem> gens(static_cast<std::size_t>(x.n) - 1);
  for (std::size_t i = 0; i < gens.size(); ++i)
    gens[i] = ideal_generator_of_open(base, x.opens[i]);
  return make_ideal_sequence(std::move(base), x.n, std::move(gens));
}

axiom_report validate_ideal_arrow(const bool_ideal_arrow& arr) {
  if (arr.source.n != arr.target.n)
    throw invariant_error("arrow endpoints disagree on n");
  if (!(arr.g.source == arr.source.base) || !(arr.g.target == arr.target.base))
    throw invariant_error("arrow map does not run between its endpoints");
  axiom_report rep;
  rep.system = "ideal-arrow";
  rep.merge(validate_hom(arr.g), "arrow");
  bool ok = true;
  for (int i = 1; i <= arr.source.n - 1; ++i) {
    ++rep.laws_checked;
    const std::size_t k = static_cast<std::size_t>(i) - 1;
    if (!arr.target.base.leq(arr.g(arr.source.generators[k]), arr.target.generators[k])) {
      rep.add_fail("arrow.ideals", {static_cast<std::size_t>(i)}, "i",
                   "g does not send I_" + std::to_string(i) + " into its counterpart");
      ok = false;
      break;
    }
  }
  if (ok) rep.add_pass("arrow.ideals");
  return rep;
}

axiom_report validate_space_arrow(const space_arrow& arr) {
  if (arr.source.n != arr.target.n)
    throw invariant_error("arrow endpoints disagree on n");
  if (arr.point_map.size() != arr.source.point_count())
    throw invariant_error("point map size does not match the source");
  for (std::size_t p : arr.point_map)
    if (p >= arr.target.point_count())
      throw invariant_error("point map leaves the target space");
  axiom_report rep;
  rep.system = "space-arrow";
  bool ok = true;
  for (int i = 1; i <= arr.source.n - 1 && ok; ++i) {
    ++rep.laws_checked;
    elem pre = 0;
    for (std::size_t p = 0; p < arr.point_map.size(); ++p)
      if ((arr.target.opens[static_cast<std::size_t>(i) - 1] >> arr.point_map[p]) & 1u)
        pre |= bit(p);
    if ((pre & ~arr.source.opens[static_cast<std::size_t>(i) - 1]) != 0) {
      rep.add_fail("space.preimage_open", {static_cast<std::size_t>(i)}, "i",
                   "the preimage of O_" + std::to_string(i) + " escapes O_" +
                       std::to_string(i));
      ok = false;
    }
  }
  if (ok) rep.add_pass("space.preimage_open");
  return rep;
}

space_arrow dual_space_arrow(const bool_ideal_arrow& arr) {
  auto rep = validate_ideal_arrow(arr);
  if (!rep.passed())
    throw invariant_error("not a valid ideal arrow: " + summarize(rep));
  const boolean_algebra& src_b = arr.source.base;
  const boolean_algebra& tgt_b = arr.target.base;
  space_arrow out{space_of_ideals(arr.target), space_of_ideals(arr.source), {}};
  out.point_map.resize(tgt_b.atom_count());
  for (std::size_t j = 0; j < tgt_b.atom_count(); ++j) {
    // the pulled-back ultrafilter {b : atom_j <= g(b)}, as its minimum
    elem acc = src_b.top();
    for (elem b = 0;; ++b) {
      if (tgt_b.leq(bit(j), arr.g(b))) acc = src_b.meet(acc, b);
      if (b == src_b.top()) break;
    }
    if (std::popcount(acc) != 1)
      throw verification_error("a pulled-back ultrafilter is not principal over an atom");
    out.point_map[j] = static_cast<std::size_t>(std::countr_zero(acc));
  }
  auto srep = validate_space_arrow(out);
  if (!srep.passed())
    throw verification_error("dual point map violates the open-set condition: " +
                             summarize(srep));
  return out;
}

bool_ideal_arrow dual_ideal_arrow(const space_arrow& arr) {
  auto rep = validate_space_arrow(arr);
  if (!rep.passed())
    throw invariant_error("not a valid space arrow: " + summarize(rep));
  bool_ideal_arrow out{ideals_of_space(arr.target), ideals_of_space(arr.source), {}};
  out.g.source = out.source.base;
  out.g.target = out.target.base;
  out.g.map.resize(out.source.base.size());
  for (elem nset = 0;; ++nset) {
    elem pre = 0;
    for (std::size_t p = 0; p < arr.point_map.size(); ++p)
      if ((nset >> arr.point_map[p]) & 1u) pre |= bit(p);
    out.g.map[nset] = pre;
    if (nset == out.source.base.top()) break;
  }
  auto vrep = validate_ideal_arrow(out);
  if (!vrep.passed())
    throw verification_error("dual clopen map violates the ideal condition: " +
                             summarize(vrep));
  return out;
}

axiom_report check_stone_roundtrip(const ideal_sequence& obj, unsigned seed) {
  if (obj.base.atom_count() == 0)
    throw invariant_error("the trivial algebra has an empty spectrum");
  axiom_report rep;
  rep.system = "stone-roundtrip";
  const boolean_algebra& b = obj.base;
  finite_space x = space_of_ideals(obj);
  boolean_algebra cl = clopen_algebra(x);

  {
    ++rep.laws_checked;
    if (x.points == b.atoms && cl.atoms == x.points)
      rep.add_pass("roundtrip.display_order");
    else
      rep.add_fail("roundtrip.display_order", {}, "",
                   "spectrum points are not listed in atom order");
  }

  std::vector<elem> nb(b.size());
  for (elem e = 0;; ++e) {
    nb[e] = open_of_element(b, e);
    if (e == b.top()) break;
  }

  {
    // b |-> N_b is a Boolean isomorphism onto the clopen algebra
    bool ok = cl.size() == b.size();
    std::vector<char> seen(cl.size(), 0);
    for (elem e = 0; ok; ++e) {
      ++rep.laws_checked;
      if (!cl.contains(nb[e]) || seen[nb[e]]) {
        ok = false;
        break;
      }
      seen[nb[e]] = 1;
      if (e == b.top()) break;
    }
    if (ok) {
      rep.laws_checked += 2;
      ok = nb[b.bot()] == cl.bot() && nb[b.top()] == cl.top();
    }
    for (elem e = 0; ok; ++e) {
      ++rep.laws_checked;
      if (nb[b.complement(e)] != cl.complement(nb[e])) {
        ok = false;
        break;
      }
      for (elem f = 0;; ++f) {
        rep.laws_checked += 2;
        if (nb[b.join(e, f)] != cl.join(nb[e], nb[f]) ||
            nb[b.meet(e, f)] != cl.meet(nb[e], nb[f])) {
          ok = false;
          break;
        }
        if (f == b.top()) break;
      }
      if (e == b.top()) break;
    }
    if (ok)
      rep.add_pass("roundtrip.clopen_iso");
    else
      rep.add_fail("roundtrip.clopen_iso", {}, "",
                   "b |-> N_b is not a Boolean isomorphism onto the clopens");
  }
  {
    // points correspond to ultrafilters, and membership matches N_b
    auto ufs = ultrafilters(b);
    ++rep.laws_checked;
    bool ok = ufs.size() == x.point_count();
    for (std::size_t j = 0; j < ufs.size() && ok; ++j)
      for (elem e = 0;; ++e) {
        ++rep.laws_checked;
        if (ufs[j].contains(e) != (((nb[e] >> j) & 1u) != 0)) {
          ok = false;
          break;
        }
        if (e == b.top()) break;
      }
    if (ok)
      rep.add_pass("roundtrip.points");
    else
      rep.add_fail("roundtrip.points", {}, "",
                   "ultrafilter membership disagrees with the basic opens");
  }
  {
    bool ok = true;
    for (int i = 1; i <= obj.n - 1 && ok; ++i) {
      elem ni = open_of_ideal(
          b, ideal_from_generator(b, obj.generators[static_cast<std::size_t>(i) - 1]));
      for (elem e = 0;; ++e) {
        ++rep.laws_checked;
        bool in_ideal = b.leq(e, obj.generators[static_cast<std::size_t>(i) - 1]);
        bool in_open = (nb[e] & ~ni) == 0;
        if (in_ideal != in_open) {
          rep.add_fail("roundtrip.ideal_membership", {static_cast<std::size_t>(i), e}, "i,x",
                       "membership in I_" + std::to_string(i) +
                           " disagrees with containment in N_I");
          ok = false;
          break;
        }
        if (e == b.top()) break;
      }
    }
    if (ok) rep.add_pass("roundtrip.ideal_membership");
  }
  {
    // I_{N_I} = I for every principal ideal
    bool ok = true;
    for (elem e = 0; ok; ++e) {
      ++rep.laws_checked;
      elem back = ideal_generator_of_open(b, open_of_ideal(b, ideal_from_generator(b, e)));
      if (back != e) {
        rep.add_fail("roundtrip.ideal_of_open", {e}, "x",
                     "generator " + render_element(b, e) + " came back as " +
                         render_element(b, back));
        ok = false;
      }
      if (e == b.top()) break;
    }
    if (ok) rep.add_pass("roundtrip.ideal_of_open");
  }
  {
    // N_{I_O} = O for every subset of points
    bool ok = true;
    const elem all = cl.top();
    for (elem mask = 0; ok; ++mask) {
      ++rep.laws_checked;
      elem back =
          open_of_ideal(b, ideal_from_generator(b, ideal_generator_of_open(b, mask)));
      if (back != mask) {
        rep.add_fail("roundtrip.open_of_ideal", {mask}, "x", "open set came back changed");
        ok = false;
      }
      if (mask == all) break;
    }
    if (ok) rep.add_pass("roundtrip.open_of_ideal");
  }
  {
    ideal_sequence obj2 = ideals_of_space(x);
    ++rep.laws_checked;
    if (obj2.base == b && obj2.n == obj.n && obj2.generators == obj.generators)
      rep.add_pass("roundtrip.object");
    else
      rep.add_fail("roundtrip.object", {}, "",
                   "dualizing twice does not return the original object");
  }

  // Arrows: identity plus two composable seeded arrows; double duals must
  // reproduce them, and dualizing a composite must swap the order.
  std::mt19937 rng(seed);
  auto sample_arrow = [&](const ideal_sequence& from) {
    std::size_t k = 1 + rng() % 3;
    std::vector<std::size_t> am(k);
    for (auto& v : am) v = rng() % from.base.atom_count();
    boolean_hom g =
        hom_from_atom_map(from.base, make_powerset_algebra(default_atom_names(k)), am);
    std::vector<elem> gens2(from.generators.size());
    for (std::size_t i = 0; i < gens2.size(); ++i) gens2[i] = g(from.generators[i]);
    return bool_ideal_arrow{from, make_ideal_sequence(g.target, from.n, gens2), g};
  };
  bool_ideal_arrow id_arrow{obj, obj, identity_hom(b)};
  bool_ideal_arrow g1 = sample_arrow(obj);
  bool_ideal_arrow g2 = sample_arrow(g1.target);
  {
    bool ok = true;
    const bool_ideal_arrow* arrows[] = {&id_arrow, &g1, &g2};
    for (std::size_t k = 0; k < 3 && ok; ++k) {
      try {
        space_arrow f = dual_space_arrow(*arrows[k]);
        bool_ideal_arrow back = dual_ideal_arrow(f);
        for (elem e = 0;; ++e) {
          ++rep.laws_checked;
          if (back.g.map[e] != arrows[k]->g(e)) {
            rep.add_fail("roundtrip.double_dual", {k, e}, "k,x",
                         "double dual changed the map on arrow " + std::to_string(k));
            ok = false;
            break;
          }
          if (e == arrows[k]->source.base.top()) break;
        }
      } catch (const verification_error& ex) {
        rep.add_fail("roundtrip.double_dual", {k}, "k", ex.what());
        ok = false;
      }
    }
    if (ok) rep.add_pass("roundtrip.double_dual");
  }
  {
    bool ok = true;
    try {
      boolean_hom comp{g1.g.source, g2.g.target, {}};
      comp.map.resize(b.size());
      for (elem e = 0;; ++e) {
        comp.map[e] = g2.g(g1.g(e));
        if (e == b.top()) break;
      }
      bool_ideal_arrow comp_arrow{obj, g2.target, comp};
      space_arrow dual_comp = dual_space_arrow(comp_arrow);
      space_arrow f1 = dual_space_arrow(g1);
      space_arrow f2 = dual_space_arrow(g2);
      for (std::size_t j = 0; j < dual_comp.point_map.size(); ++j) {
        ++rep.laws_checked;
        if (dual_comp.point_map[j] != f1.point_map[f2.point_map[j]]) {
          rep.add_fail("roundtrip.contravariant", {j}, "x",
                       "dual of the composite is not the reversed composite");
          ok = false;
          break;
        }
      }
    } catch (const verification_error& ex) {
      rep.add_fail("roundtrip.contravariant", {}, "", ex.what());
      ok = false;
    }
    if (ok) rep.add_pass("roundtrip.contravariant");
  }
  return rep;
}

axiom_report check_space_roundtrip(const finite_space& x) {
  axiom_report rep;
  rep.system = "space-roundtrip";
  ideal_sequence obj = ideals_of_space(x);
  finite_space x2 = space_of_ideals(obj);
  {
    ++rep.laws_checked;
    if (x2.points == x.points)
      rep.add_pass("roundtrip.points_preserved");
    else
      rep.add_fail("roundtrip.points_preserved", {}, "",
                   "dualizing twice renamed or reordered the points");
  }
  {
    ++rep.laws_checked;
    if (x2.n == x.n && x2.opens == x.opens)
      rep.add_pass("roundtrip.opens_preserved");
    else
      rep.add_fail("roundtrip.opens_preserved", {}, "",
                   "dualizing twice changed a distinguished open");
  }
  {
    // every subset of points arises as N_b for exactly one clopen b
    boolean_algebra cl = clopen_algebra(x);
    bool ok = true;
    std::vector<char> seen(cl.size(), 0);
    for (elem e = 0; ok; ++e) {
      ++rep.laws_checked;
      elem mask = open_of_element(cl, e);
      if (!cl.contains(mask) || seen[mask]) {
        rep.add_fail("roundtrip.clopens_exhaust", {e}, "x",
                     "basic opens repeat or escape the point set");
        ok = false;
      } else {
        seen[mask] = 1;
      }
      if (e == cl.top()) break;
    }
    if (ok) rep.add_pass("roundtrip.clopens_exhaust");
  }
  return rep;
}

}  // namespace lmalg

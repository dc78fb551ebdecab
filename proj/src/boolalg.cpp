#include "lmalg/boolalg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "lmalg/errors.hpp"

namespace lmalg {

boolean_algebra make_powerset_algebra(std::vector<std::string> atom_names,
                                      std::size_t max_atoms) {
  if (atom_names.size() > max_atoms) {
    throw invariant_error("atom count " + std::to_string(atom_names.size()) +
                          " exceeds bound " + std::to_string(max_atoms));
  }
  std::set<std::string> seen;
  for (const auto& name : atom_names) {
    if (!seen.insert(name).second)
      throw invariant_error("duplicate atom label \"" + name + "\"");
  }
  return boolean_algebra{std::move(atom_names)};
}

std::vector<std::string> default_atom_names(std::size_t count) {
  static const char letters[] = "pqrstuvwxyzabcde";
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < sizeof(letters) - 1)
      names.emplace_back(1, letters[i]);
    else
      names.push_back("p" + std::to_string(i));
  }
  return names;
}

std::string render_element(const boolean_algebra& b, elem a) {
  if (a == 0) return "0";
  if (a == b.top()) return "1";
  if (std::popcount(a) == 1) return b.atoms[std::countr_zero(a)];
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t i = 0; i < b.atom_count(); ++i) {
    if (a & (elem{1} << i)) {
      if (!first) out << ",";
      out << b.atoms[i];
      first = false;
    }
  }
  out << "}";
  return out.str();
}

std::vector<elem> carrier(const boolean_algebra& b) {
  std::vector<elem> all(b.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<elem>(i);
  return all;
}

std::vector<elem> ideal::members() const {
  std::vector<elem> out;
  for (elem v = 0;; ++v) {
    if (parent.leq(v, generator)) out.push_back(v);
    if (v == parent.top()) break;
  }
  return out;
}

ideal ideal_from_generator(const boolean_algebra& b, elem generator) {
  if (!b.contains(generator))
    throw invariant_error("ideal generator out of range");
  return ideal{b, generator};
}

ideal_check check_ideal(const boolean_algebra& b, const std::vector<elem>& members) {
  for (elem m : members)
    if (!b.contains(m)) throw invariant_error("ideal member out of range");
  std::set<elem> in(members.begin(), members.end());

  ideal_check out;
  out.report.system = "ideal";
  auto& rep = out.report;

  rep.laws_checked += 1;
  if (in.count(0))
    rep.add_pass("ideal.contains_zero");
  else
    rep.add_fail("ideal.contains_zero", {0}, "a", "0 missing from the set");

  bool down_ok = true;
  for (elem m : in) {
    // every subset of a member must be a member
    for (elem s = m;; s = (s - 1) & m) {
      rep.laws_checked += 1;
      if (!in.count(s)) {
        rep.add_fail("ideal.downward_closed", {m, s}, "a,b",
                     render_element(b, s) + " <= " + render_element(b, m) +
                         " but only the latter is in the set");
        down_ok = false;
        break;
      }
      if (s == 0) break;
    }
    if (!down_ok) break;
  }
  if (down_ok) rep.add_pass("ideal.downward_closed");

  bool join_ok = true;
  for (elem x : in) {
    for (elem y : in) {
      rep.laws_checked += 1;
      if (!in.count(b.join(x, y))) {
        rep.add_fail("ideal.join_closed", {x, y}, "a,b",
                     render_element(b, x) + " v " + render_element(b, y) +
                         " escapes the set");
        join_ok = false;
        break;
      }
    }
    if (!join_ok) break;
  }
  if (join_ok) rep.add_pass("ideal.join_closed");

  if (rep.passed()) {
    elem gen = 0;
    for (elem m : in) gen |= m;
    out.generator = gen;
  }
  return out;
}

std::vector<ultrafilter> ultrafilters(const boolean_algebra& b) {
  if (b.atom_count() == 0)
    throw invariant_error("trivial algebra has no ultrafilters");
  std::vector<ultrafilter> out;
  out.reserve(b.atom_count());
  for (std::size_t i = 0; i < b.atom_count(); ++i)
    out.push_back(ultrafilter{b, elem{1} << i});
  return out;
}

boolean_hom identity_hom(const boolean_algebra& b) {
  boolean_hom h{b, b, {}};
  h.map = carrier(b);
  return h;
}

axiom_report validate_hom(const boolean_hom& h) {
  axiom_report rep;
  rep.system = "hom";
  if (h.map.size() != h.source.size())
    throw invariant_error("hom table size does not match source carrier");
  for (elem v : h.map)
    if (!h.target.contains(v)) throw invariant_error("hom value out of range");

  const auto& src = h.source;
  const auto& dst = h.target;

  rep.laws_checked += 1;
  if (h.map[src.bot()] == dst.bot())
    rep.add_pass("hom.zero");
  else
    rep.add_fail("hom.zero", {src.bot()}, "a", "h(0) != 0");

  rep.laws_checked += 1;
  if (h.map[src.top()] == dst.top())
    rep.add_pass("hom.one");
  else
    rep.add_fail("hom.one", {src.top()}, "a",
                 "h(" + render_element(src, src.top()) + ") = " +
                     render_element(dst, h.map[src.top()]));

  bool join_ok = true, meet_ok = true;
  for (elem a = 0; join_ok || meet_ok; ++a) {
    for (elem b2 = 0;; ++b2) {
      if (join_ok) {
        rep.laws_checked += 1;
        if (h.map[src.join(a, b2)] != dst.join(h.map[a], h.map[b2])) {
          rep.add_fail("hom.join", {a, b2}, "a,b",
                       "h(a v b) != h(a) v h(b) at a=" + render_element(src, a) +
                           ", b=" + render_element(src, b2));
          join_ok = false;
        }
      }
      if (meet_ok) {
        rep.laws_checked += 1;
        if (h.map[src.meet(a, b2)] != dst.meet(h.map[a], h.map[b2])) {
          rep.add_fail("hom.meet", {a, b2}, "a,b",
                       "h(a ^ b) != h(a) ^ h(b) at a=" + render_element(src, a) +
                           ", b=" + render_element(src, b2));
          meet_ok = false;
        }
      }
      if (b2 == src.top()) break;
    }
    if (a == src.top()) break;
  }
  if (join_ok) rep.add_pass("hom.join");
  if (meet_ok) rep.add_pass("hom.meet");

  bool comp_ok = true;
  for (elem a = 0;; ++a) {
    rep.laws_checked += 1;
    if (h.map[src.complement(a)] != dst.complement(h.map[a])) {
      rep.add_fail("hom.complement", {a}, "a",
                   "h(a') != h(a)' at a=" + render_element(src, a));
      comp_ok = false;
      break;
    }
    if (a == src.top()) break;
  }
  if (comp_ok) rep.add_pass("hom.complement");
  return rep;
}

boolean_hom hom_from_atom_map(const boolean_algebra& source, const boolean_algebra& target,
                              const std::vector<std::size_t>& atom_map) {
  if (atom_map.size() != target.atom_count())
    throw invariant_error("atom map size does not match target atom count");
  for (std::size_t v : atom_map)
    if (v >= source.atom_count()) throw invariant_error("atom map value out of range");

  boolean_hom h{source, target, std::vector<elem>(source.size(), 0)};
  for (elem a = 0;; ++a) {
    elem image = 0;
    for (std::size_t t = 0; t < atom_map.size(); ++t)
      if (a & (elem{1} << atom_map[t])) image |= elem{1} << t;
    h.map[a] = image;
    if (a == source.top()) break;
  }
  return h;
}

}  // namespace lmalg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lmalg/boolalg.hpp"
#include "lmalg/errors.hpp"

using namespace lmalg;

namespace {

boolean_algebra pqr() { return make_powerset_algebra({"p", "q", "r"}); }

}  // namespace

TEST_CASE("powerset arithmetic on three atoms") {
  boolean_algebra b = pqr();
  CHECK(b.atom_count() == 3);
  CHECK(b.size() == 8);
  CHECK(b.bot() == 0);
  CHECK(b.top() == 7);
  CHECK(b.join(3, 5) == 7);
  CHECK(b.meet(3, 5) == 1);
  CHECK(b.complement(3) == 4);
  CHECK(b.complement(0) == 7);
  CHECK(b.leq(1, 3));
  CHECK(!b.leq(3, 1));
  CHECK(b.contains(7));
  CHECK(!b.contains(8));
  CHECK(carrier(b) == std::vector<elem>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("trivial algebra has a one-point carrier with 0 = 1") {
  boolean_algebra b = make_powerset_algebra({});
  CHECK(b.size() == 1);
  CHECK(b.top() == 0);
  CHECK(carrier(b) == std::vector<elem>{0});
}

TEST_CASE("constructor rejects duplicates and oversized atom sets") {
  CHECK_THROWS_AS(make_powerset_algebra({"p", "p"}), invariant_error);
  CHECK_THROWS_AS(make_powerset_algebra(default_atom_names(17)), invariant_error);
  CHECK_NOTHROW(make_powerset_algebra(default_atom_names(16)));
}

TEST_CASE("default atom names start p, q, r and never repeat") {
  CHECK(default_atom_names(3) == std::vector<std::string>{"p", "q", "r"});
  auto names = default_atom_names(16);
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("element rendering") {
  boolean_algebra b = pqr();
  CHECK(render_element(b, 0) == "0");
  CHECK(render_element(b, 7) == "1");
  CHECK(render_element(b, 1) == "p");
  CHECK(render_element(b, 4) == "r");
  CHECK(render_element(b, 3) == "{p,q}");
}

TEST_CASE("principal ideal membership and member list") {
  boolean_algebra b = pqr();
  ideal i = ideal_from_generator(b, 3);
  CHECK(i.contains(0));
  CHECK(i.contains(2));
  CHECK(i.contains(3));
  CHECK(!i.contains(4));
  CHECK(i.members() == std::vector<elem>{0, 1, 2, 3});
  CHECK_THROWS_AS(ideal_from_generator(b, 9), invariant_error);
}

TEST_CASE("explicit-set ideal check distinguishes the three failure modes") {
  boolean_algebra b = pqr();

  ideal_check good = check_ideal(b, {0, 1, 2, 3});
  CHECK(good.report.passed());
  REQUIRE(good.generator.has_value());
  CHECK(*good.generator == 3);

  ideal_check no_zero = check_ideal(b, {1});
  CHECK(!no_zero.report.passed());
  CHECK(no_zero.report.first_failure()->law == "ideal.contains_zero");
  CHECK(!no_zero.generator.has_value());

  ideal_check not_down = check_ideal(b, {0, 3});
  CHECK(!not_down.report.passed());
  CHECK(not_down.report.find("ideal.downward_closed")->passed == false);

  ideal_check not_join = check_ideal(b, {0, 1, 2});
  CHECK(!not_join.report.passed());
  CHECK(not_join.report.find("ideal.join_closed")->passed == false);

  CHECK_THROWS_AS(check_ideal(b, {0, 99}), invariant_error);
}

TEST_CASE("a subset passes the ideal check exactly when it is a principal ideal") {
  boolean_algebra b = pqr();
  // Enumerate all 2^8 subsets of the carrier by characteristic mask.
  for (unsigned subset = 0; subset < 256u; ++subset) {
    std::vector<elem> members;
    for (elem e = 0; e < 8; ++e)
      if ((subset >> e) & 1u) members.push_back(e);
    bool principal = false;
    for (elem g = 0; g < 8 && !principal; ++g)
      principal = members == ideal_from_generator(b, g).members();
    CHECK(check_ideal(b, members).report.passed() == principal);
  }
}

TEST_CASE("every principal ideal on four atoms passes and returns its generator") {
  boolean_algebra b = make_powerset_algebra(default_atom_names(4));
  for (elem g = 0; g < 16; ++g) {
    ideal_check c = check_ideal(b, ideal_from_generator(b, g).members());
    CHECK(c.report.passed());
    CHECK(c.generator == g);
  }
}

TEST_CASE("ultrafilters are the up-sets of atoms, in atom order") {
  boolean_algebra b = pqr();
  auto ufs = ultrafilters(b);
  REQUIRE(ufs.size() == 3);
  CHECK(ufs[0].atom == 1);
  CHECK(ufs[1].atom == 2);
  CHECK(ufs[2].atom == 4);
  CHECK(ufs[0].contains(3));
  CHECK(!ufs[0].contains(6));
  CHECK(ufs[2].contains(7));
  // Prime-filter property: a join belongs exactly when one side does.
  for (const auto& u : ufs)
    for (elem x = 0; x < 8; ++x)
      for (elem y = 0; y < 8; ++y)
        CHECK(u.contains(b.join(x, y)) == (u.contains(x) || u.contains(y)));
  CHECK_THROWS_AS(ultrafilters(make_powerset_algebra({})), invariant_error);
}

TEST_CASE("identity is a homomorphism; broken maps fail the right laws") {
  boolean_algebra b = make_powerset_algebra({"p", "q"});
  CHECK(validate_hom(identity_hom(b)).passed());

  boolean_hom swap{b, b, {0, 2, 1, 3}};  // the p <-> q automorphism
  CHECK(validate_hom(swap).passed());

  boolean_hom crush{b, b, {0, 1, 1, 3}};  // sends q to p: joins break
  axiom_report rep = validate_hom(crush);
  CHECK(!rep.passed());
  CHECK(rep.find("hom.join")->passed == false);
  CHECK(rep.find("hom.zero")->passed == true);
  CHECK(rep.find("hom.one")->passed == true);

  boolean_hom to_zero{b, b, {0, 0, 0, 0}};
  CHECK(validate_hom(to_zero).find("hom.one")->passed == false);
}

TEST_CASE("atom maps induce homomorphisms with the frozen table") {
  boolean_algebra src = pqr();
  boolean_algebra tgt = make_powerset_algebra({"a", "b"});
  boolean_hom g = hom_from_atom_map(src, tgt, {0, 2});  // a <- p, b <- r
  CHECK(g.map == std::vector<elem>{0, 1, 0, 1, 2, 3, 2, 3});
  CHECK(validate_hom(g).passed());

  // Every atom map gives a valid homomorphism.
  for (std::size_t a0 = 0; a0 < 3; ++a0)
    for (std::size_t a1 = 0; a1 < 3; ++a1)
      CHECK(validate_hom(hom_from_atom_map(src, tgt, {a0, a1})).passed());

  CHECK_THROWS_AS(hom_from_atom_map(src, tgt, {0}), invariant_error);
  CHECK_THROWS_AS(hom_from_atom_map(src, tgt, {0, 3}), invariant_error);
}

TEST_CASE("collapse to the trivial algebra is the empty atom map") {
  boolean_algebra src = pqr();
  boolean_algebra tgt = make_powerset_algebra({});
  boolean_hom g = hom_from_atom_map(src, tgt, {});
  CHECK(validate_hom(g).passed());
  CHECK(g(7) == 0);
}

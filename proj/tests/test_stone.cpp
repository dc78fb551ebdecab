#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lmalg/errors.hpp"
#include "lmalg/stone.hpp"

using namespace lmalg;

namespace {

boolean_algebra pq() { return make_powerset_algebra({"p", "q"}); }

}  // namespace

TEST_CASE("space construction validates names, ranges, and symmetry") {
  CHECK_NOTHROW(make_space({"p", "q"}, 3, {1, 1}));
  CHECK_THROWS_AS(make_space({}, 2, {0}), invariant_error);
  CHECK_THROWS_AS(make_space({"p", "p"}, 2, {0}), invariant_error);
  CHECK_THROWS_AS(make_space({"p", "q"}, 3, {1}), invariant_error);
  CHECK_THROWS_AS(make_space({"p", "q"}, 3, {1, 2}), invariant_error);  // O_1 != O_2
  CHECK_THROWS_AS(make_space({"p", "q"}, 2, {4}), invariant_error);     // unknown point
  CHECK_THROWS_AS(make_space({"p", "q"}, 0, {}), invariant_error);

  finite_space x = make_space({"p", "q"}, 3, {1, 1});
  CHECK(x.point_count() == 2);
  CHECK(x.open(1) == 1);
  CHECK(x.open(3) == 3);  // O_n is the whole space
  CHECK_THROWS_AS(x.open(4), invariant_error);
  CHECK_THROWS_AS(x.open(0), invariant_error);
}

TEST_CASE("basic opens, ideal opens, and their inverses on the powerset") {
  boolean_algebra b = pq();
  // On a powerset the points are the atoms, so N_e is e itself.
  for (elem e = 0; e < 4; ++e) CHECK(open_of_element(b, e) == e);
  CHECK_THROWS_AS(open_of_element(b, 9), invariant_error);

  CHECK(open_of_ideal(b, ideal_from_generator(b, 1)) == 1);
  CHECK(open_of_ideal(b, ideal_from_generator(b, 3)) == 3);
  CHECK(ideal_generator_of_open(b, 1) == 1);
  CHECK(ideal_generator_of_open(b, 0) == 0);
  CHECK(ideal_generator_of_open(b, 3) == 3);
  CHECK_THROWS_AS(ideal_generator_of_open(b, 9), invariant_error);
}

TEST_CASE("frozen dual space of a two-atom ideal sequence") {
  ideal_sequence obj = make_ideal_sequence(pq(), 3, {1, 1});
  finite_space x = space_of_ideals(obj);
  CHECK(x.points == std::vector<std::string>{"p", "q"});
  CHECK(x.n == 3);
  CHECK(x.opens == std::vector<elem>{1, 1});

  ideal_sequence back = ideals_of_space(x);
  CHECK(back.base == obj.base);
  CHECK(back.n == obj.n);
  CHECK(back.generators == obj.generators);

  CHECK_THROWS_AS(space_of_ideals(make_ideal_sequence(make_powerset_algebra({}), 2, {0})),
                  invariant_error);
}

TEST_CASE("ideal membership mirrors containment of basic opens, exhaustively") {
  boolean_algebra b = make_powerset_algebra({"p", "q", "r"});
  ideal_sequence obj = make_ideal_sequence(b, 4, {3, 5, 3});
  finite_space x = space_of_ideals(obj);
  for (int i = 1; i <= 3; ++i) {
    ideal ideal_i = ideal_from_generator(b, obj.generator(i));
    for (elem e = 0; e < 8; ++e) {
      bool in_ideal = ideal_i.contains(e);
      bool open_contained =
          (open_of_element(b, e) & ~x.open(i)) == 0;
      CHECK(in_ideal == open_contained);
    }
  }
}

TEST_CASE("arrow validation on both sides") {
  ideal_sequence src = make_ideal_sequence(pq(), 3, {1, 1});
  ideal_sequence tgt = make_ideal_sequence(make_powerset_algebra({"p"}), 3, {1, 1});
  boolean_hom g = hom_from_atom_map(src.base, tgt.base, {0});
  CHECK(validate_ideal_arrow({src, tgt, g}).passed());

  // Shrinking the target ideal to {0} breaks the containment condition.
  ideal_sequence tight = make_ideal_sequence(tgt.base, 3, {0, 0});
  axiom_report rep = validate_ideal_arrow({src, tight, g});
  CHECK(!rep.passed());
  CHECK(rep.first_failure()->law == "arrow.ideals");

  ideal_sequence other_n = make_ideal_sequence(tgt.base, 2, {1});
  CHECK_THROWS_AS(validate_ideal_arrow({src, other_n, g}), invariant_error);

  finite_space xs = space_of_ideals(src);
  finite_space xt = space_of_ideals(tgt);
  CHECK(validate_space_arrow({xt, xs, {0}}).passed());
  CHECK_THROWS_AS(validate_space_arrow({xt, xs, {0, 0}}), invariant_error);
  CHECK_THROWS_AS(validate_space_arrow({xt, xs, {7}}), invariant_error);

  // A point map landing outside O_1's preimage bound fails the law.
  finite_space y1 = make_space({"p", "q"}, 3, {1, 1});
  finite_space y2 = make_space({"u"}, 3, {1, 1});
  axiom_report srep = validate_space_arrow({y1, y2, {0, 0}});
  CHECK(!srep.passed());
  CHECK(srep.first_failure()->law == "space.preimage_open");
}

TEST_CASE("frozen dual of an ideal arrow, and the double dual returns it") {
  ideal_sequence src = make_ideal_sequence(pq(), 3, {1, 1});
  ideal_sequence tgt = make_ideal_sequence(make_powerset_algebra({"p"}), 3, {1, 1});
  boolean_hom g = hom_from_atom_map(src.base, tgt.base, {0});
  CHECK(g.map == std::vector<elem>{0, 1, 0, 1});

  bool_ideal_arrow arr{src, tgt, g};
  space_arrow f = dual_space_arrow(arr);
  CHECK(f.source.points == std::vector<std::string>{"p"});
  CHECK(f.target.points == std::vector<std::string>{"p", "q"});
  CHECK(f.point_map == std::vector<std::size_t>{0});

  bool_ideal_arrow back = dual_ideal_arrow(f);
  CHECK(back.g.map == g.map);
  CHECK(back.source.generators == src.generators);
}

TEST_CASE("dualizing rejects arrows that fail their own validation") {
  ideal_sequence src = make_ideal_sequence(pq(), 3, {1, 1});
  ideal_sequence tight = make_ideal_sequence(pq(), 3, {0, 0});
  bool_ideal_arrow bad{src, tight, identity_hom(src.base)};
  CHECK_THROWS_AS(dual_space_arrow(bad), invariant_error);

  finite_space y1 = make_space({"p", "q"}, 3, {1, 1});
  finite_space y2 = make_space({"u"}, 3, {1, 1});
  CHECK_THROWS_AS(dual_ideal_arrow({y1, y2, {0, 0}}), invariant_error);
}

TEST_CASE("round trips pass on a grid of small objects and spaces") {
  for (int n = 2; n <= 4; ++n) {
    ideal_sequence obj = make_ideal_sequence(pq(), n,
                                             std::vector<elem>(static_cast<std::size_t>(n) - 1, 1));
    CHECK(check_stone_roundtrip(obj, 3).passed());
  }
  // A non-monotone symmetric sequence round-trips too.
  CHECK(check_stone_roundtrip(make_ideal_sequence(pq(), 4, {1, 2, 1}), 1).passed());

  CHECK(check_space_roundtrip(make_space({"p", "q"}, 3, {1, 1})).passed());
  CHECK(check_space_roundtrip(make_space({"p", "q", "r"}, 2, {5})).passed());
  CHECK(check_space_roundtrip(make_space({"p"}, 1, {})).passed());
}

TEST_CASE("round trip from the algebra side rejects the empty spectrum") {
  CHECK_THROWS_AS(check_stone_roundtrip(make_ideal_sequence(make_powerset_algebra({}), 2, {0}), 0),
                  invariant_error);
}

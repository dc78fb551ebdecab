#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lmalg/errors.hpp"
#include "lmalg/mvn.hpp"
#include "lmalg/stone.hpp"
#include "lmalg/verify.hpp"

using namespace lmalg;

TEST_CASE("frozen arithmetic on the four-element chain") {
  mv_algebra a = mv_chain(3);
  CHECK(a.size == 4);
  CHECK(a.zero == 0);
  CHECK(a.one() == 3);
  CHECK(a.oplus(1, 1) == 2);   // 1/3 + 1/3 = 2/3
  CHECK(a.oplus(2, 2) == 3);   // truncated at 1
  CHECK(a.oplus(1, 3) == 3);
  CHECK(a.star_table == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(mv_odot(a, 2, 2) == 1);  // 2/3 . 2/3 = 1/3
  CHECK(mv_odot(a, 1, 2) == 0);
  CHECK(mv_scalar(a, 3, 1) == 3);  // 3 * (1/3) = 1
  CHECK(mv_scalar(a, 2, 1) == 2);
  CHECK(mv_scalar(a, 0, 2) == 0);
  CHECK(mv_power(a, 2, 2) == 1);
  CHECK(mv_power(a, 1, 0) == a.one());
  CHECK_THROWS_AS(mv_scalar(a, -1, 1), invariant_error);
  CHECK_THROWS_AS(mv_chain(0), invariant_error);
  CHECK_THROWS_AS(mv_chain(65), invariant_error);
  CHECK_NOTHROW(validate_mv_tables(a));
}

TEST_CASE("table validation rejects malformed data") {
  mv_algebra a = mv_chain(2);
  a.star_table[0] = 9;
  CHECK_THROWS_AS(validate_mv_tables(a), invariant_error);
  a = mv_chain(2);
  a.oplus_table.pop_back();
  CHECK_THROWS_AS(validate_mv_tables(a), invariant_error);
}

TEST_CASE("every chain satisfies the MV laws and its own variety axioms") {
  for (int n = 1; n <= 6; ++n) {
    mv_algebra a = mv_chain(n);
    CHECK(check_mv_axioms(a).passed());
    CHECK(check_mvn_axioms(a, n).passed());
  }
}

TEST_CASE("a broken oplus table fails an MV law") {
  mv_algebra a = mv_chain(3);
  a.oplus_table[1 * 4 + 2] = 0;  // 1/3 + 2/3 := 0 kills commutativity
  CHECK(!check_mv_axioms(a).passed());
}

TEST_CASE("the four-element chain leaves the three-valued variety at 1/3") {
  axiom_report rep = check_mvn_axioms(mv_chain(3), 2);
  CHECK(!rep.passed());
  const law_result* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->law == "mvn.scalar_collapse");
  CHECK(f->witness == std::vector<std::size_t>{1});
}

TEST_CASE("the divisor schema is non-vacuous exactly when some j avoids dividing n") {
  axiom_report r6 = check_mvn_axioms(mv_chain(6), 6);  // j in {4, 5}
  CHECK(r6.passed());
  CHECK(r6.find("mvn.divisor_schema")->note.empty());
  axiom_report r4 = check_mvn_axioms(mv_chain(4), 4);  // j = 3
  CHECK(r4.passed());
  CHECK(r4.find("mvn.divisor_schema")->note.empty());
  axiom_report r2 = check_mvn_axioms(mv_chain(2), 2);  // nothing strictly between 1 and 2
  CHECK(r2.passed());
  CHECK(!r2.find("mvn.divisor_schema")->note.empty());
  CHECK_THROWS_AS(check_mvn_axioms(mv_chain(2), 0), invariant_error);
}

TEST_CASE("the generator condition is vacuous or implied up to n = 5") {
  boolean_algebra b = make_powerset_algebra({"p", "q"});
  for (int n = 2; n <= 5; ++n)
    for (const ideal_sequence& obj : symmetric_objects(b, n)) {
      axiom_report rep = check_l_proper(obj);
      CHECK(rep.passed());
      // The weak comparison reading is advisory and trivially satisfied.
      const law_result* weak = rep.find("proper.weak_variant");
      REQUIRE(weak != nullptr);
      CHECK(weak->advisory);
      CHECK(weak->passed);
    }
}

TEST_CASE("frozen failing instance at n = 6 with incomparable middle ideals") {
  boolean_algebra b = make_powerset_algebra({"p", "q"});
  ideal_sequence obj = make_ideal_sequence(b, 6, {0, 1, 2, 1, 0});
  axiom_report rep = check_l_proper(obj);
  CHECK(!rep.passed());
  const law_result* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->law == "proper.intersection");
  CHECK(f->witness == std::vector<std::size_t>{4, 2});
  // The advisory entry is still present and still true.
  CHECK(rep.find("proper.weak_variant")->passed);
}

TEST_CASE("the space-side reading agrees with the algebra side") {
  boolean_algebra b = make_powerset_algebra({"p", "q"});
  ideal_sequence bad = make_ideal_sequence(b, 6, {0, 1, 2, 1, 0});
  axiom_report srep = check_l_proper(space_of_ideals(bad));
  CHECK(!srep.passed());
  CHECK(srep.first_failure()->law == "proper.open_intersection");
  CHECK(srep.first_failure()->witness == std::vector<std::size_t>{4, 2});

  ideal_sequence good = make_ideal_sequence(b, 6, {0, 1, 3, 1, 0});
  CHECK(check_l_proper(good).passed() == check_l_proper(space_of_ideals(good)).passed());
}

TEST_CASE("exhaustive transport agreement over two atoms at n = 6 and 7") {
  boolean_algebra b = make_powerset_algebra({"p", "q"});
  for (int n = 6; n <= 7; ++n)
    for (const ideal_sequence& obj : symmetric_objects(b, n))
      CHECK(check_l_proper(obj).passed() ==
            check_l_proper(space_of_ideals(obj)).passed());
}

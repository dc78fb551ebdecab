#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lmalg/construct.hpp"
#include "lmalg/errors.hpp"
#include "lmalg/io.hpp"
#include "lmalg/lm.hpp"
#include "lmalg/mvn.hpp"
#include "lmalg/stone.hpp"
#include "lmalg/verify.hpp"

using namespace lmalg;

namespace {

const std::string chain1_doc =
    R"({"join":[[0,1],[1,1]],"kind":"lm","meet":[[0,0],[0,1]],"n":1,"one":1,)"
    R"("signature":"phi","size":2,"star":[1,0],"unary":[[0,1]],"zero":0})";

}  // namespace

TEST_CASE("frozen serializations for all five document kinds") {
  CHECK(serialize_document(canonical_algebra(1)) == chain1_doc);
  CHECK(serialize_document(make_powerset_algebra({"p", "q"})) ==
        R"({"atoms":["p","q"],"kind":"bool"})");
  CHECK(serialize_document(make_ideal_sequence(make_powerset_algebra({"p", "q"}), 2, {1})) ==
        R"({"atoms":["p","q"],"generators":[1],"kind":"boolideals","n":2})");
  CHECK(serialize_document(make_space({"p", "q"}, 3, {1, 1})) ==
        R"({"kind":"space","n":3,"opens":[[0],[0]],"points":["p","q"]})");
  CHECK(serialize_document(mv_chain(1)) ==
        R"({"kind":"mv","oplus":[[0,1],[1,1]],"size":2,"star":[1,0],"zero":0})");
}

TEST_CASE("parsing recovers the exact value") {
  document doc = parse_document(chain1_doc);
  CHECK(document_kind(doc) == "lm");
  const lm_algebra& a = std::get<lm_algebra>(doc);
  CHECK(a.n == 1);
  CHECK(a.size == 2);
  CHECK(a.sig == lm_signature::phi);
  CHECK(a.one == 1);
  CHECK(serialize_document(doc) == chain1_doc);

  document sp = parse_document(R"({"kind":"space","n":3,"opens":[[0],[0]],"points":["p","q"]})");
  CHECK(document_kind(sp) == "space");
  CHECK(std::get<finite_space>(sp).opens == std::vector<elem>{1, 1});
}

TEST_CASE("document kinds name their variant") {
  CHECK(document_kind(make_powerset_algebra({})) == "bool");
  CHECK(document_kind(canonical_algebra(2)) == "lm");
  CHECK(document_kind(make_ideal_sequence(make_powerset_algebra({"p"}), 2, {0})) ==
        "boolideals");
  CHECK(document_kind(make_space({"p"}, 2, {1})) == "space");
  CHECK(document_kind(mv_chain(2)) == "mv");
}

TEST_CASE("malformed text is a parse error") {
  CHECK_THROWS_AS(parse_document("{not json"), parse_error);
  CHECK_THROWS_AS(parse_document(""), parse_error);
  CHECK_THROWS_AS(parse_document("[1,2]"), schema_error);  // not an object
}

TEST_CASE("schema violations: unknown, missing, or mistyped fields") {
  CHECK_THROWS_AS(parse_document(R"({"kind":"bool","atoms":["p"],"extra":1})"), schema_error);
  CHECK_THROWS_AS(parse_document(R"({"kind":"bool"})"), schema_error);
  CHECK_THROWS_AS(parse_document(R"({"kind":"widget"})"), schema_error);
  CHECK_THROWS_AS(parse_document(R"({"kind":"bool","atoms":"p"})"), schema_error);
  CHECK_THROWS_AS(parse_document(R"({"atoms":["p"]})"), schema_error);

  std::string bad_sig = chain1_doc;
  bad_sig.replace(bad_sig.find("\"phi\""), 5, "\"psi\"");
  CHECK_THROWS_AS(parse_document(bad_sig), schema_error);

  // Opens must be strictly increasing point indices.
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"space","n":3,"opens":[[1,0],[1,0]],"points":["p","q"]})"),
      schema_error);
}

TEST_CASE("invariant violations: well-typed but out of bounds or inconsistent") {
  std::string zero_n = chain1_doc;
  zero_n.replace(zero_n.find("\"n\":1"), 5, "\"n\":0");
  CHECK_THROWS_AS(parse_document(zero_n), invariant_error);

  std::string bad_star = chain1_doc;
  bad_star.replace(bad_star.find("[1,0]"), 5, "[1,2]");
  CHECK_THROWS_AS(parse_document(bad_star), invariant_error);

  // Asymmetric generators pass the schema but fail construction.
  CHECK_THROWS_AS(
      parse_document(R"({"atoms":["p","q"],"generators":[1,2],"kind":"boolideals","n":3})"),
      invariant_error);
  // Point index out of range.
  CHECK_THROWS_AS(parse_document(R"({"kind":"space","n":2,"opens":[[5]],"points":["p"]})"),
                  invariant_error);
  // 17 atoms exceeds the carrier bound.
  std::string many = R"({"atoms":[)";
  for (int i = 0; i < 17; ++i) many += (i ? ",\"x" : "\"x") + std::to_string(i) + "\"";
  many += R"(],"kind":"bool"})";
  CHECK_THROWS_AS(parse_document(many), invariant_error);
}

TEST_CASE("keys are emitted in sorted order") {
  std::string s = serialize_document(canonical_algebra(2));
  std::vector<std::string> keys = {"\"join\"", "\"kind\"", "\"meet\"", "\"n\"",
                                   "\"one\"",  "\"signature\"", "\"size\"",
                                   "\"star\"", "\"unary\"", "\"zero\""};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    std::size_t at = s.find(k);
    REQUIRE(at != std::string::npos);
    CHECK(at >= pos);
    pos = at;
  }
}

TEST_CASE("serialize then parse is the identity on a seeded menagerie") {
  std::mt19937 rng(42);
  std::vector<document> docs;
  for (int round = 0; round < 10; ++round) {
    std::size_t atoms = rng() % 4;
    boolean_algebra b = make_powerset_algebra(default_atom_names(atoms));
    docs.push_back(b);
    int n = 1 + static_cast<int>(rng() % 4);
    docs.push_back(canonical_algebra(n));
    docs.push_back(mv_chain(n));
    if (atoms <= 2) {
      docs.push_back(monotone_algebra(b, n).alg);
      docs.push_back(disjoint_algebra(b, n).alg);
    }
    if (atoms >= 1) {
      std::vector<elem> gens(static_cast<std::size_t>(n) - 1);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t mirror = gens.size() - 1 - i;
        gens[i] = i <= mirror ? static_cast<elem>(rng() % b.size()) : gens[mirror];
      }
      ideal_sequence obj = make_ideal_sequence(b, n, gens);
      docs.push_back(obj);
      docs.push_back(space_of_ideals(obj));
    }
  }
  CHECK(docs.size() > 50);
  for (const document& doc : docs) {
    std::string once = serialize_document(doc);
    document back = parse_document(once);
    CHECK(document_kind(back) == document_kind(doc));
    CHECK(serialize_document(back) == once);
  }
}

TEST_CASE("report rendering carries witnesses through both formats") {
  axiom_report rep = check_mvn_axioms(mv_chain(3), 2);
  auto j = report_to_json(rep);
  CHECK(j["system"] == "mv2");
  CHECK(j["passed"] == false);
  bool found = false;
  for (const auto& law : j["laws"])
    if (law["law"] == "mvn.scalar_collapse") {
      found = true;
      CHECK(law["passed"] == false);
      CHECK(law["witness"] == nlohmann::json::array({1}));
      CHECK(law["rendered"] == "x=e1");
    }
  CHECK(found);

  auto names = canonical_names(3);
  std::string text = render_report_text(rep, &names);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("x=1/3") != std::string::npos);
}

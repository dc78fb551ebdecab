#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "lmalg/io.hpp"
#include "lmalg/lm.hpp"

using namespace lmalg;

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr is left to the test log.
run_result run(const std::string& cmd) {
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string cli = LMALG_CLI_PATH;
const std::string fixtures = LMALG_FIXTURES_DIR;

}  // namespace

TEST_CASE("gen canonical prints the exact document") {
  run_result r = run(cli + " gen canonical --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == serialize_document(canonical_algebra(3)) + "\n");
}

TEST_CASE("fixture exit codes: pass 0, fail 1, unparsable 2") {
  CHECK(run(cli + " check --system L --in " + fixtures + "/passing.json").exit_code == 0);
  CHECK(run(cli + " check --system L --in " + fixtures + "/violating.json").exit_code == 1);
  CHECK(run(cli + " check --system L --in " + fixtures + "/malformed.json 2>/dev/null")
            .exit_code == 2);
  CHECK(run(cli + " check --system L --in " + fixtures + "/missing.json 2>/dev/null")
            .exit_code == 2);
  // Signature mismatch between document and requested system.
  CHECK(run(cli + " check --system J --in " + fixtures + "/passing.json 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run(cli + " --help >/dev/null").exit_code == 0);
  CHECK(run(cli + " 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " gen canonical 2>/dev/null").exit_code == 2);          // --n required
  CHECK(run(cli + " check --system X --in /dev/null 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " frobnicate 2>/dev/null").exit_code == 2);
}

TEST_CASE("convert round-trips byte for byte") {
  std::string doc = run(cli + " gen canonical --n 2").out;
  run_result to_j = run(cli + " gen canonical --n 2 | " + cli + " convert --to j");
  CHECK(to_j.exit_code == 0);
  CHECK(to_j.out != doc);
  run_result back =
      run(cli + " gen canonical --n 2 | " + cli + " convert --to j | " + cli +
          " convert --to phi");
  CHECK(back.exit_code == 0);
  CHECK(back.out == doc);
}

TEST_CASE("documents flow through gen, center, lambda, sigma, and dualize") {
  std::string mk_base = "printf '%s' '{\"atoms\":[\"p\",\"q\"],\"kind\":\"bool\"}'";
  run_result t = run(mk_base + " | " + cli + " gen t --n 2");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("\"kind\":\"lm\"") != std::string::npos);
  CHECK(t.out.find("\"size\":9") != std::string::npos);

  run_result j = run(mk_base + " | " + cli + " gen j --n 2 | " + cli + " check --system J");
  CHECK(j.exit_code == 0);

  run_result lam = run(cli + " gen canonical --n 3 | " + cli + " convert --to j | " + cli +
                       " lambda");
  CHECK(lam.exit_code == 0);
  CHECK(lam.out == R"({"atoms":["c3"],"generators":[1,1],"kind":"boolideals","n":3})" "\n");

  run_result sig = run(cli + " gen canonical --n 3 | " + cli + " convert --to j | " + cli +
                       " lambda | " + cli + " sigma | " + cli + " check --system J");
  CHECK(sig.exit_code == 0);

  run_result ctr = run(cli + " gen canonical --n 2 | " + cli + " center");
  CHECK(ctr.exit_code == 0);
  CHECK(ctr.out == R"({"atoms":["c2"],"kind":"bool"})" "\n");

  std::string obj = R"('{"atoms":["p","q"],"generators":[1],"kind":"boolideals","n":2}')";
  run_result dual = run("printf '%s' " + obj + " | " + cli + " dualize");
  CHECK(dual.exit_code == 0);
  CHECK(dual.out == R"({"kind":"space","n":2,"opens":[[0]],"points":["p","q"]})" "\n");
  run_result twice =
      run("printf '%s' " + obj + " | " + cli + " dualize | " + cli + " dualize");
  CHECK(twice.exit_code == 0);
  CHECK(twice.out == R"({"atoms":["p","q"],"generators":[1],"kind":"boolideals","n":2})" "\n");
  run_result rt = run("printf '%s' " + obj + " | " + cli + " dualize --roundtrip");
  CHECK(rt.exit_code == 0);
  CHECK(rt.out.find("\"verdict\":\"pass\"") != std::string::npos);
}

TEST_CASE("check surfaces failing verdicts from stdin documents") {
  std::string bad = R"('{"kind":"mv","oplus":[[0,1],[1,1]],"size":2,"star":[0,1],"zero":0}')";
  run_result r = run("printf '%s' " + bad + " | " + cli + " check --system mv");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"verdict\":\"fail\"") != std::string::npos);

  run_result proper =
      run("printf '%s' '{\"atoms\":[\"p\",\"q\"],\"generators\":[0,1,2,1,0],"
          "\"kind\":\"boolideals\",\"n\":6}' | " +
          cli + " check --system proper --format text");
  CHECK(proper.exit_code == 1);
  CHECK(proper.out.find("proper.intersection") != std::string::npos);
}

TEST_CASE("represent and a small verify suite succeed") {
  run_result rep = run(cli + " gen canonical --n 3 | " + cli + " represent");
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("represent.constructed") != std::string::npos);

  run_result ver = run(cli + " verify --suite mv --max-atoms 2 --max-n 3");
  CHECK(ver.exit_code == 0);
  CHECK(ver.out.find("\"verdict\":\"pass\"") != std::string::npos);

  run_result bad_suite = run(cli + " verify --suite nope 2>/dev/null");
  CHECK(bad_suite.exit_code == 2);
}

TEST_CASE("text format is accepted before or after the subcommand") {
  CHECK(run(cli + " --format text check --system L --in " + fixtures + "/passing.json")
            .exit_code == 0);
  run_result r =
      run(cli + " check --system L --format text --in " + fixtures + "/passing.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmalg/construct.hpp"
#include "lmalg/errors.hpp"
#include "lmalg/io.hpp"
#include "lmalg/lm.hpp"
#include "lmalg/mvn.hpp"
#include "lmalg/stone.hpp"
#include "lmalg/verify.hpp"

namespace {

using namespace lmalg;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invariant_error("cannot open input file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

int emit_document(const document& doc) {
  std::cout << serialize_document(doc) << "\n";
  return 0;
}

int emit_report(const axiom_report& rep, const std::string& command,
                const std::string& format, double wall_ms) {
  if (format == "json") {
    nlohmann::json out;
    out["command"] = command;
    out["report"] = report_to_json(rep);
    out["verdict"] = rep.passed() ? "pass" : "fail";
    out["wall_ms"] = wall_ms;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "command: " << command << "\n"
              << render_report_text(rep)
              << "verdict: " << (rep.passed() ? "pass" : "fail") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

template <typename T>
const T& expect_doc(const document& doc, const char* command) {
  const T* p = std::get_if<T>(&doc);
  if (!p)
    throw invariant_error(std::string(command) + " cannot act on a \"" +
                          document_kind(doc) + "\" document");
  return *p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite workbench for n+1-valued Lukasiewicz-Moisil algebras"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string format = "json";
  app.add_option("--format", format, "Report output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input = "-";
  int n = 0;
  int mvn_n = -1;
  std::string system;
  std::string convert_to;
  std::string suite = "all";
  int max_atoms = 2;
  int max_n = 4;
  unsigned seed = 0;
  int mutants = 100;
  bool roundtrip = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", input, "Input document file, or - for stdin")
        ->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a document");
  gen->require_subcommand(1);
  CLI::App* gen_canonical =
      gen->add_subcommand("canonical", "The n+1 element chain algebra");
  gen_canonical->add_option("--n", n, "Number of unary operations")->required();
  CLI::App* gen_t =
      gen->add_subcommand("t", "Monotone tuple algebra over a Boolean base document");
  gen_t->add_option("--n", n, "Tuple length")->required();
  add_input(gen_t);
  CLI::App* gen_j =
      gen->add_subcommand("j", "Disjoint tuple algebra over a Boolean base document");
  gen_j->add_option("--n", n, "Tuple length")->required();
  add_input(gen_j);
  CLI::App* gen_mvchain = gen->add_subcommand("mvchain", "The n+1 element MV chain");
  gen_mvchain->add_option("--n", n, "Chain subdivision")->required();

  CLI::App* check = app.add_subcommand("check", "Check laws on a document");
  check->add_option("--system", system, "L, Lalt, J, derived, mv, mvn or proper")
      ->required()
      ->check(CLI::IsMember({"L", "Lalt", "J", "derived", "mv", "mvn", "proper"}));
  check->add_option("--n", mvn_n, "Variety parameter for mvn (default: size-1)");
  add_input(check);

  CLI::App* convert = app.add_subcommand("convert", "Convert an algebra between signatures");
  convert->add_option("--to", convert_to, "Target signature")
      ->required()
      ->check(CLI::IsMember({"phi", "j"}));
  add_input(convert);

  CLI::App* center = app.add_subcommand("center", "Boolean center of an algebra");
  add_input(center);

  CLI::App* lambda_cmd =
      app.add_subcommand("lambda", "Center plus unary-image ideals of a j-form algebra");
  add_input(lambda_cmd);

  CLI::App* sigma_cmd =
      app.add_subcommand("sigma", "Restricted disjoint tuple algebra of an ideal sequence");
  add_input(sigma_cmd);

  CLI::App* dualize =
      app.add_subcommand("dualize", "Swap an ideal sequence with its dual space");
  dualize->add_flag("--roundtrip", roundtrip, "Check the double dual instead of printing");
  dualize->add_option("--seed", seed, "Seed for sampled arrows")->capture_default_str();
  add_input(dualize);

  CLI::App* represent =
      app.add_subcommand("represent", "Chain-valued representation of a phi-form algebra");
  add_input(represent);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "all, adjunction, equivalence, duality or mv")
      ->check(CLI::IsMember({"all", "adjunction", "equivalence", "duality", "mv"}))
      ->capture_default_str();
  verify->add_option("--max-atoms", max_atoms, "Largest Boolean base, in atoms")
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "Largest number of unary operations")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for sampled arrows")->capture_default_str();
  verify->add_option("--mutants", mutants, "Mutated tables per chain")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     started)
        .count();
  };

  try {
    if (gen->parsed()) {
      if (gen_canonical->parsed()) return emit_document(canonical_algebra(n));
      if (gen_mvchain->parsed()) return emit_document(mv_chain(n));
      document in = parse_document(read_input(input));
      const auto& base = expect_doc<boolean_algebra>(in, "gen");
      if (gen_t->parsed()) return emit_document(monotone_algebra(base, n).alg);
      return emit_document(disjoint_algebra(base, n).alg);
    }
    if (check->parsed()) {
      document in = parse_document(read_input(input));
      axiom_report rep;
      if (system == "L" || system == "Lalt" || system == "J") {
        const auto& alg = expect_doc<lm_algebra>(in, "check");
        lm_system sys = system == "L"      ? lm_system::l_system
                        : system == "Lalt" ? lm_system::l_alt
                                           : lm_system::j_system;
        rep = check_axioms(alg, sys);
      } else if (system == "derived") {
        rep = check_derived_props(expect_doc<lm_algebra>(in, "check"));
      } else if (system == "mv") {
        rep = check_mv_axioms(expect_doc<mv_algebra>(in, "check"));
      } else if (system == "mvn") {
        const auto& alg = expect_doc<mv_algebra>(in, "check");
        rep = check_mvn_axioms(alg, mvn_n >= 1 ? mvn_n : static_cast<int>(alg.size) - 1);
      } else {  // proper
        if (const auto* obj = std::get_if<ideal_sequence>(&in))
          rep = check_l_proper(*obj);
        else
          rep = check_l_proper(expect_doc<finite_space>(in, "check"));
      }
      return emit_report(rep, "check", format, elapsed_ms());
    }
    if (convert->parsed()) {
      document in = parse_document(read_input(input));
      const auto& alg = expect_doc<lm_algebra>(in, "convert");
      return emit_document(convert_to == "j" ? phi_to_j(alg) : j_to_phi(alg));
    }
    if (center->parsed()) {
      document in = parse_document(read_input(input));
      return emit_document(boolean_center(expect_doc<lm_algebra>(in, "center")).algebra);
    }
    if (lambda_cmd->parsed()) {
      document in = parse_document(read_input(input));
      return emit_document(lambda_of(expect_doc<lm_algebra>(in, "lambda")).object);
    }
    if (sigma_cmd->parsed()) {
      document in = parse_document(read_input(input));
      return emit_document(sigma_of(expect_doc<ideal_sequence>(in, "sigma")).alg);
    }
    if (dualize->parsed()) {
      document in = parse_document(read_input(input));
      if (roundtrip) {
        axiom_report rep;
        if (const auto* obj = std::get_if<ideal_sequence>(&in))
          rep = check_stone_roundtrip(*obj, seed);
        else
          rep = check_space_roundtrip(expect_doc<finite_space>(in, "dualize"));
        return emit_report(rep, "dualize", format, elapsed_ms());
      }
      if (const auto* obj = std::get_if<ideal_sequence>(&in))
        return emit_document(space_of_ideals(*obj));
      return emit_document(ideals_of_space(expect_doc<finite_space>(in, "dualize")));
    }
    if (represent->parsed()) {
      document in = parse_document(read_input(input));
      const auto& alg = expect_doc<lm_algebra>(in, "represent");
      axiom_report rep;
      rep.system = "representation";
      ++rep.laws_checked;
      try {
        moisil_representation r = moisil_represent(alg);
        rep.add_pass("represent.constructed",
                     std::to_string(r.components.size()) + " components onto the " +
                         std::to_string(alg.n + 1) + "-element chain");
      } catch (const verification_error& ex) {
        rep.add_fail("represent.constructed", {}, "", ex.what());
      }
      return emit_report(rep, "represent", format, elapsed_ms());
    }
    // verify
    axiom_report rep = run_suite(suite, max_atoms, max_n, seed, mutants);
    return emit_report(rep, "verify", format, elapsed_ms());
  } catch (const parse_error& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 2;
  } catch (const schema_error& ex) {
    std::cerr << "schema error: " << ex.what() << "\n";
    return 2;
  } catch (const invariant_error& ex) {
    std::cerr << "invariant error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid argument: " << ex.what() << "\n";
    return 2;
  } catch (const verification_error& ex) {
    std::cerr << "verification failed: " << ex.what() << "\n";
    return 1;
  }
}

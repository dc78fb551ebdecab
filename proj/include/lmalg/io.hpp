#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lmalg/boolalg.hpp"
#include "lmalg/construct.hpp"
#include "lmalg/lm.hpp"
#include "lmalg/mvn.hpp"
#include "lmalg/report.hpp"
#include "lmalg/stone.hpp"

namespace lmalg {

// The five document payloads understood on stdin/stdout.  The JSON shape is
// strict: every field is required, unknown fields are rejected, and
// serialization emits sorted keys, so serialize(parse(text)) is
// byte-stable.
using document =
    std::variant<boolean_algebra, lm_algebra, ideal_sequence, finite_space, mv_algebra>;

// "bool", "lm", "boolideals", "space", or "mv".
std::string document_kind(const document& doc);

document parse_document(const std::string& text);

std::string serialize_document(const document& doc);

// Report renderings shared by the command-line front end and the tests.
nlohmann::json report_to_json(const axiom_report& rep,
                              const std::vector<std::string>* names = nullptr);

std::string render_report_text(const axiom_report& rep,
                               const std::vector<std::string>* names = nullptr);

}  // namespace lmalg

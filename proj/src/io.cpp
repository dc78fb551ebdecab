#include "lmalg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "lmalg/errors.hpp"

namespace lmalg {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw parse_error(ex.what());
  }
}

void expect_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = std::any_of(keys.begin(), keys.end(),
                             [&](const char* k) { return it.key() == k; });
    if (!known) throw schema_error("unknown field: " + it.key());
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw schema_error(std::string("missing field: ") + k);
}

int get_bounded_int(const json& j, const char* key, int lo, int hi) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.is_number_float())
    throw schema_error(std::string(key) + " must be an integer");
  long long raw = v.get<long long>();
  if (raw < lo || raw > hi)
    throw invariant_error(std::string(key) + " must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return static_cast<int>(raw);
}

std::size_t get_index(const json& v, const char* what, std::size_t bound) {
  if (!v.is_number_unsigned())
    throw schema_error(std::string(what) + " must be a nonnegative integer");
  unsigned long long raw = v.get<unsigned long long>();
  if (raw >= bound)
    throw invariant_error(std::string(what) + " out of range: " + std::to_string(raw));
  return static_cast<std::size_t>(raw);
}

std::vector<std::string> get_names(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array()) throw schema_error(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) throw schema_error(std::string(key) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::uint32_t> get_row(const json& v, const char* what, std::size_t width,
                                   std::size_t bound) {
  if (!v.is_array() || v.size() != width)
    throw schema_error(std::string(what) + " must be an array of length " +
                       std::to_string(width));
  std::vector<std::uint32_t> out;
  out.reserve(width);
  for (const json& e : v)
    out.push_back(static_cast<std::uint32_t>(get_index(e, what, bound)));
  return out;
}

std::vector<std::uint32_t> get_table(const json& j, const char* key, std::size_t rows,
                                     std::size_t width, std::size_t bound) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != rows)
    throw schema_error(std::string(key) + " must be an array of " + std::to_string(rows) +
                       " rows");
  std::vector<std::uint32_t> out;
  out.reserve(rows * width);
  for (const json& row : v) {
    auto r = get_row(row, key, width, bound);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

document parse_bool(const json& j) {
  expect_keys(j, {"atoms", "kind"});
  return make_powerset_algebra(get_names(j, "atoms"));
}

document parse_lm(const json& j) {
  expect_keys(j, {"join", "kind", "meet", "n", "one", "signature", "size", "star", "unary",
                  "zero"});
  lm_algebra a;
  a.n = get_bounded_int(j, "n", 1, 16);
  a.size = static_cast<std::size_t>(get_bounded_int(j, "size", 1, 4096));
  const json& sig = j.at("signature");
  if (!sig.is_string()) throw schema_error("signature must be a string");
  if (sig == "phi")
    a.sig = lm_signature::phi;
  else if (sig == "j")
    a.sig = lm_signature::j;
  else
    throw schema_error("signature must be \"phi\" or \"j\"");
  a.zero = get_index(j.at("zero"), "zero", a.size);
  a.one = get_index(j.at("one"), "one", a.size);
  a.join_table = get_table(j, "join", a.size, a.size, a.size);
  a.meet_table = get_table(j, "meet", a.size, a.size, a.size);
  a.star_table = get_row(j.at("star"), "star", a.size, a.size);
  a.unary_table =
      get_table(j, "unary", static_cast<std::size_t>(a.n), a.size, a.size);
  validate_lm_tables(a);
  return a;
}

document parse_boolideals(const json& j) {
  expect_keys(j, {"atoms", "generators", "kind", "n"});
  boolean_algebra base = make_powerset_algebra(get_names(j, "atoms"));
  int n = get_bounded_int(j, "n", 1, 16);
  const json& gens = j.at("generators");
  if (!gens.is_array() || gens.size() != static_cast<std::size_t>(n) - 1)
    throw schema_error("generators must be an array of length n-1");
  std::vector<elem> g;
  for (const json& e : gens)
    g.push_back(static_cast<elem>(get_index(e, "generators", base.size())));
  return make_ideal_sequence(std::move(base), n, std::move(g));
}

document parse_space(const json& j) {
  expect_keys(j, {"kind", "n", "opens", "points"});
  std::vector<std::string> points = get_names(j, "points");
  int n = get_bounded_int(j, "n", 1, 16);
  const json& opens = j.at("opens");
  if (!opens.is_array() || opens.size() != static_cast<std::size_t>(n) - 1)
    throw schema_error("opens must be an array of length n-1");
  std::vector<elem> masks;
  for (const json& arr : opens) {
    if (!arr.is_array()) throw schema_error("each open must be an array of point indices");
    elem mask = 0;
    long long prev = -1;
    for (const json& e : arr) {
      std::size_t idx = get_index(e, "opens", points.size());
      if (static_cast<long long>(idx) <= prev)
        throw schema_error("open-set point indices must be strictly increasing");
      prev = static_cast<long long>(idx);
      mask |= static_cast<elem>(elem{1} << idx);
    }
    masks.push_back(mask);
  }
  return make_space(std::move(points), n, std::move(masks));
}

document parse_mv(const json& j) {
  expect_keys(j, {"kind", "oplus", "size", "star", "zero"});
  mv_algebra a;
  a.size = static_cast<std::size_t>(get_bounded_int(j, "size", 1, 4096));
  a.zero = get_index(j.at("zero"), "zero", a.size);
  a.oplus_table = get_table(j, "oplus", a.size, a.size, a.size);
  a.star_table = get_row(j.at("star"), "star", a.size, a.size);
  validate_mv_tables(a);
  return a;
}

json rows_of(const std::vector<std::uint32_t>& table, std::size_t rows, std::size_t width) {
  json out = json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < width; ++c) row.push_back(table[r * width + c]);
    out.push_back(std::move(row));
  }
  return out;
}

json indices_of(elem mask) {
  json out = json::array();
  for (std::size_t j = 0; j < 32; ++j)
    if ((mask >> j) & 1u) out.push_back(j);
  return out;
}

}  // namespace

std::string document_kind(const document& doc) {
  struct visitor {
    std::string operator()(const boolean_algebra&) const { return "bool"; }
    std::string operator()(const lm_algebra&) const { return "lm"; }
    std::string operator()(const ideal_sequence&) const { return "boolideals"; }
    std::string operator()(const finite_space&) const { return "space"; }
    std::string operator()(const mv_algebra&) const { return "mv"; }
  };
  return std::visit(visitor{}, doc);
}

document parse_document(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw schema_error("document must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw schema_error("document requires a string \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "bool") return parse_bool(j);
  if (kind == "lm") return parse_lm(j);
  if (kind == "boolideals") return parse_boolideals(j);
  if (kind == "space") return parse_space(j);
  if (kind == "mv") return parse_mv(j);
  throw schema_error("unknown document kind: " + kind);
}

std::string serialize_document(const document& doc) {
  struct visitor {
    json operator()(const boolean_algebra& b) const {
      return json{{"atoms", b.atoms}, {"kind", "bool"}};
    }
    json operator()(const lm_algebra& a) const {
      json out;
      out["join"] = rows_of(a.join_table, a.size, a.size);
      out["kind"] = "lm";
      out["meet"] = rows_of(a.meet_table, a.size, a.size);
      out["n"] = a.n;
      out["one"] = a.one;
      out["signature"] = a.sig == lm_signature::phi ? "phi" : "j";
      out["size"] = a.size;
      out["star"] = a.star_table;
      out["unary"] = rows_of(a.unary_table, static_cast<std::size_t>(a.n), a.size);
      out["zero"] = a.zero;
      return out;
    }
    json operator()(const ideal_sequence& s) const {
      json out;
      out["atoms"] = s.base.atoms;
      out["generators"] = s.generators;
      out["kind"] = "boolideals";
      out["n"] = s.n;
      return out;
    }
    json operator()(const finite_space& x) const {
      json out;
      out["kind"] = "space";
      out["n"] = x.n;
      json opens = json::array();
      for (elem o : x.opens) opens.push_back(indices_of(o));
      out["opens"] = std::move(opens);
      out["points"] = x.points;
      return out;
    }
    json operator()(const mv_algebra& a) const {
      json out;
      out["kind"] = "mv";
      out["oplus"] = rows_of(a.oplus_table, a.size, a.size);
      out["size"] = a.size;
      out["star"] = a.star_table;
      out["zero"] = a.zero;
      return out;
    }
  };
  return std::visit(visitor{}, doc).dump();
}

nlohmann::json report_to_json(const axiom_report& rep,
                              const std::vector<std::string>* names) {
  json out;
  out["system"] = rep.system;
  out["passed"] = rep.passed();
  out["laws_checked"] = rep.laws_checked;
  json laws = json::array();
  for (const law_result& r : rep.results) {
    json l;
    l["law"] = r.law;
    l["passed"] = r.passed;
    l["advisory"] = r.advisory;
    l["note"] = r.note;
    l["witness"] = r.witness;
    l["rendered"] = describe_witness(r.vars, r.witness, names);
    laws.push_back(std::move(l));
  }
  out["laws"] = std::move(laws);
  return out;
}

std::string render_report_text(const axiom_report& rep,
                               const std::vector<std::string>* names) {
  std::ostringstream out;
  out << summarize(rep) << "\n";
  for (const law_result& r : rep.results) {
    const char* mark = r.passed ? (r.advisory ? "info" : " ok ") : (r.advisory ? "warn" : "FAIL");
    out << "  [" << mark << "] " << r.law;
    if (!r.witness.empty()) out << " at " << describe_witness(r.vars, r.witness, names);
    if (!r.note.empty()) out << " -- " << r.note;
    out << "\n";
  }
  return out.str();
}

}  // namespace lmalg

#include "lmalg/report.hpp"

#include <sstream>

namespace lmalg {

bool axiom_report::passed() const {
  for (const auto& r : results)
    if (!r.passed && !r.advisory) return false;
  return true;
}

const law_result* axiom_report::first_failure() const {
  for (const auto& r : results)
    if (!r.passed && !r.advisory) return &r;
  return nullptr;
}

const law_result* axiom_report::find(std::string_view law) const {
  for (const auto& r : results)
    if (r.law == law) return &r;
  return nullptr;
}

void axiom_report::add_pass(std::string law, std::string note) {
  results.push_back({std::move(law), true, false, {}, {}, std::move(note)});
}

void axiom_report::add_fail(std::string law, std::vector<std::size_t> witness,
                            std::string vars, std::string note) {
  results.push_back(
      {std::move(law), false, false, std::move(witness), std::move(vars), std::move(note)});
}

void axiom_report::add_advisory(std::string law, bool ok, std::vector<std::size_t> witness,
                                std::string vars, std::string note) {
  results.push_back(
      {std::move(law), ok, true, std::move(witness), std::move(vars), std::move(note)});
}

void axiom_report::merge(const axiom_report& other, const std::string& prefix) {
  for (auto r : other.results) {
    if (!prefix.empty()) r.law = prefix + "." + r.law;
    results.push_back(std::move(r));
  }
  laws_checked += other.laws_checked;
}

std::string describe_witness(std::string_view vars, const std::vector<std::size_t>& witness,
                             const std::vector<std::string>* names) {
  std::ostringstream out;
  std::size_t pos = 0;
  for (std::size_t t = 0; t < witness.size(); ++t) {
    auto next = vars.find(',', pos);
    std::string var(vars.substr(pos, next == std::string_view::npos ? next : next - pos));
    pos = next == std::string_view::npos ? vars.size() : next + 1;
    if (t) out << ", ";
    out << (var.empty() ? "?" : var) << "=";
    bool is_op_index = var == "i" || var == "j" || var == "k" || var == "l";
    if (!is_op_index && names && witness[t] < names->size())
      out << (*names)[witness[t]];
    else if (is_op_index)
      out << witness[t];
    else
      out << "e" << witness[t];
  }
  return out.str();
}

std::string summarize(const axiom_report& report) {
  std::ostringstream out;
  out << report.system << ": " << (report.passed() ? "pass" : "FAIL");
  if (const auto* f = report.first_failure()) {
    out << " [" << f->law;
    if (!f->note.empty()) out << ": " << f->note;
    out << "]";
  }
  out << " (" << report.laws_checked << " checks)";
  return out.str();
}

}  // namespace lmalg

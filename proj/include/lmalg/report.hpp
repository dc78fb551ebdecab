#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lmalg {

// Verdict for one checked law. On failure `witness` holds the first
// counterexample: the quantifier values in the order named by `vars`
// (comma-separated, e.g. "i,x,y"). Variables named i/j/k/l are 1-based
// operation indices; all others are carrier element indices.
struct law_result {
  std::string law;
  bool passed = true;
  bool advisory = false;  // reported for comparison only; never affects the verdict
  std::vector<std::size_t> witness;
  std::string vars;
  std::string note;
};

// Outcome of an axiom suite or structural check: one entry per law plus a
// count of every (law, tuple) evaluation performed.
struct axiom_report {
  std::string system;
  std::vector<law_result> results;
  std::size_t laws_checked = 0;

  bool passed() const;
  const law_result* first_failure() const;
  const law_result* find(std::string_view law) const;

  void add_pass(std::string law, std::string note = {});
  void add_fail(std::string law, std::vector<std::size_t> witness, std::string vars,
                std::string note = {});
  void add_advisory(std::string law, bool ok, std::vector<std::size_t> witness,
                    std::string vars, std::string note = {});
  // Appends another report's entries (law names prefixed) and its counter.
  void merge(const axiom_report& other, const std::string& prefix = {});
};

// Human-readable "var=value, ..." string for a witness. Operation-index
// variables print as integers; element variables print via `names` when
// provided (falling back to e<idx>).
std::string describe_witness(std::string_view vars, const std::vector<std::size_t>& witness,
                             const std::vector<std::string>* names);

std::string summarize(const axiom_report& report);

}  // namespace lmalg

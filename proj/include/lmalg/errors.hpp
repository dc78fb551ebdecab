#pragma once

#include <stdexcept>

namespace lmalg {

// Structured-input syntax error (malformed text, position-reported).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed text that does not match a document schema
// (missing/extra/ill-typed fields).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid data that violates a type invariant
// (asymmetric ideal sequence, out-of-range table entry, duplicate atoms, ...).
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked postcondition failed. Constructions verify their own output;
// this firing means either an implementation bug or an unverified structure
// smuggled past a precondition.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lmalg

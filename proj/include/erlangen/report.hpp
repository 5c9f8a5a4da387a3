#pragma once

// Human-readable report blocks ending in one machine-readable trailer line:
//   RESULT: <verdict> key=value key=value ...
// Field order is fixed per report type, and numbers use the shortest text
// that reads back to the same double, so equal inputs give equal bytes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erlangen/contact.hpp"
#include "erlangen/groups.hpp"

namespace erlangen {

/// Shortest round-trip decimal form, exponent without padding ("1e-9").
std::string format_number(double x);
/// "re", or "re+imi" / "re-imi" when the imaginary part is nonzero.
std::string format_scalar(Scalar z);
std::string format_vector(const Vector& v);

/// Generic result of a computation: a title, ordered fields, "RESULT: ok".
struct ValueReport {
  std::string title;
  std::vector<std::pair<std::string, std::string>> fields;
};

/// RESULT: invariant trials=N tol=T
/// RESULT: violated trials=N tol=T witness_seed=S
std::string serialize_report(const Verdict& v);
/// RESULT: axioms-ok|axioms-failed trials=N tol=T closure_failures=..
/// inverse_failures=.. identity_failures=.. [first_failure_seed=S]
std::string serialize_report(const AxiomReport& r);
/// RESULT: contact|not-contact samples=N tol=T max_residual=R [witness_seed=S]
std::string serialize_report(const ContactVerdict& v);
/// RESULT: ok key=value ...
std::string serialize_report(const ValueReport& r);

struct Trailer {
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> fields;

  std::optional<std::string> get(const std::string& key) const;
};

/// Parses the last line starting with "RESULT:". Throws PreconditionError
/// when there is none or a field is malformed.
Trailer parse_trailer(const std::string& text);

}  // namespace erlangen

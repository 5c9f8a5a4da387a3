#pragma once

// Command-line front end. Exactly one verb per invocation:
//   check-invariance  distance  transfer  covariants  contact-check  orbit
//   axioms
// Exit status: 0 for ok / invariant / contact / axioms-ok, 1 for violated /
// not-contact / axioms-failed, 2 for usage, configuration and domain errors.
// Reports go to `out`, diagnostics to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace erlangen {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace erlangen

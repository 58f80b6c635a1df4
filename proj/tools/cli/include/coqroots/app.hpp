#pragma once

#include <iosfwd>

#include "coqroots/input.hpp"

namespace coqroots {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kSingularLeading = 2,
  kCertificationFailed = 3,
};

/// Runs the full zero computation on a parsed input, writes the report to
/// `out` and diagnostics naming the failing stage to `err`.
int run(const InputSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace coqroots
